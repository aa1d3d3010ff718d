#pragma once

#include "bcwork/numeric.hpp"

#include <array>
#include <compare>
#include <ostream>
#include <string>

namespace bcwork {

// Element of Q(zeta) for zeta a primitive 12th root of unity, stored in
// the basis 1, zeta, zeta^2, zeta^3 modulo zeta^4 = zeta^2 - 1.
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(int q) : c_{Rational(q), 0, 0, 0} {}
  Cyclo(const Rational& q) : c_{q, 0, 0, 0} {}
  explicit Cyclo(std::array<Rational, 4> coeffs) : c_(std::move(coeffs)) {}

  const Rational& operator[](int i) const { return c_[i]; }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws unless the element is rational.
  Rational to_rational() const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o);

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  friend Cyclo operator-(const Cyclo& a);

  friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c_ == b.c_; }
  // Lexicographic on coefficient tuples; a fixed total order, not a field order.
  friend std::strong_ordering operator<=>(const Cyclo& a, const Cyclo& b);

 private:
  std::array<Rational, 4> c_{};
};

// zeta12^k for any integer k.
Cyclo zeta12(long long k);
// zeta12^(12 * power / order); order must divide 12.
Cyclo root_of_unity(int order, long long power);
Cyclo conj(const Cyclo& x);
// Throws std::domain_error on zero.
Cyclo inv(const Cyclo& x);
Cyclo pow(Cyclo x, long long k);

Cyclo imag_unit();
Cyclo sqrt3();

std::string to_string(const Cyclo& x);
std::ostream& operator<<(std::ostream& os, const Cyclo& x);

using CycloMatrix = Matrix<Cyclo>;

// Eigen's conjugate() is a no-op for non-complex scalars, so conjugation
// is done explicitly.
CycloMatrix conj_transpose(const CycloMatrix& M);
CycloMatrix cyclo_identity(Eigen::Index n);

// Rank by exact Gaussian elimination over the field.
Eigen::Index field_rank(CycloMatrix M);
Cyclo trace(const CycloMatrix& M);

}  // namespace bcwork

namespace Eigen {

template <>
struct NumTraits<bcwork::Cyclo> : GenericNumTraits<bcwork::Cyclo> {
  using Real = bcwork::Cyclo;
  using NonInteger = bcwork::Cyclo;
  using Literal = bcwork::Cyclo;
  using Nested = bcwork::Cyclo;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 32,
    MulCost = 128
  };
  // Exact values: no precision to report when printing.
  static constexpr int digits10() { return 0; }
};

}  // namespace Eigen
