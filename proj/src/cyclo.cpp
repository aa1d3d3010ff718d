#include "bcwork/cyclo.hpp"

#include <stdexcept>

namespace bcwork {

namespace {

// Rewrites zeta^k for k = 6, 5, 4 as zeta^(k-2) - zeta^(k-4).
std::array<Rational, 4> reduce(std::array<Rational, 7> p) {
  for (int k = 6; k >= 4; --k) {
    p[k - 2] += p[k];
    p[k - 4] -= p[k];
  }
  return {p[0], p[1], p[2], p[3]};
}

Cyclo galois(const Cyclo& x, int k) {
  Cyclo out;
  for (int i = 0; i < 4; ++i) out += Cyclo(x[i]) * zeta12(static_cast<long long>(k) * i);
  return out;
}

}  // namespace

bool Cyclo::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool Cyclo::is_rational() const {
  return c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

Rational Cyclo::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic element is not rational: " + to_string(*this));
  return c_[0];
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  std::array<Rational, 7> p{};
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < 4; ++j)
      if (o.c_[j] != 0) p[i + j] += c_[i] * o.c_[j];
  }
  c_ = reduce(std::move(p));
  return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& o) {
  return *this *= inv(o);
}

Cyclo operator-(const Cyclo& a) {
  return Cyclo({-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]});
}

std::strong_ordering operator<=>(const Cyclo& a, const Cyclo& b) {
  for (int i = 0; i < 4; ++i) {
    if (a.c_[i] < b.c_[i]) return std::strong_ordering::less;
    if (b.c_[i] < a.c_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Cyclo zeta12(long long k) {
  k %= 12;
  if (k < 0) k += 12;
  const bool negate = k >= 6;
  if (negate) k -= 6;
  std::array<Rational, 4> c{};
  switch (k) {
    case 4: c = {Rational(-1), 0, Rational(1), 0}; break;
    case 5: c = {0, Rational(-1), 0, Rational(1)}; break;
    default: c[k] = 1;
  }
  Cyclo z(c);
  return negate ? -z : z;
}

Cyclo root_of_unity(int order, long long power) {
  if (order <= 0 || 12 % order != 0)
    throw std::invalid_argument("root_of_unity: order must divide 12, got " + std::to_string(order));
  return zeta12((12 / order) * power);
}

Cyclo conj(const Cyclo& x) {
  return Cyclo({x[0] + x[2], x[1], -x[2], -x[1] - x[3]});
}

Cyclo inv(const Cyclo& x) {
  if (x.is_zero()) throw std::domain_error("inverse of zero");
  const Cyclo rest = galois(x, 5) * galois(x, 7) * galois(x, 11);
  const Rational norm = (x * rest).to_rational();
  return rest * Cyclo(Rational(1) / norm);
}

Cyclo pow(Cyclo x, long long k) {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Cyclo out(1);
  while (k > 0) {
    if (k & 1) out *= x;
    x *= x;
    k >>= 1;
  }
  return out;
}

Cyclo imag_unit() {
  return zeta12(3);
}

Cyclo sqrt3() {
  return zeta12(1) + zeta12(11);
}

std::string to_string(const Cyclo& x) {
  if (x.is_zero()) return "0";
  static const char* const basis[] = {"", "z", "z^2", "z^3"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (x[i] == 0) continue;
    std::string term;
    if (i == 0) term = x[i].str();
    else if (x[i] == 1) term = basis[i];
    else if (x[i] == -1) term = std::string("-") + basis[i];
    else term = x[i].str() + "*" + basis[i];
    if (!out.empty()) out += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Cyclo& x) {
  return os << to_string(x);
}

CycloMatrix conj_transpose(const CycloMatrix& M) {
  CycloMatrix out(M.cols(), M.rows());
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) out(j, i) = conj(M(i, j));
  return out;
}

CycloMatrix cyclo_identity(Eigen::Index n) {
  CycloMatrix I = CycloMatrix::Constant(n, n, Cyclo(0));
  for (Eigen::Index i = 0; i < n; ++i) I(i, i) = Cyclo(1);
  return I;
}

Eigen::Index field_rank(CycloMatrix M) {
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < M.cols() && r < M.rows(); ++c) {
    Eigen::Index p = r;
    while (p < M.rows() && M(p, c).is_zero()) ++p;
    if (p == M.rows()) continue;
    if (p != r) M.row(p).swap(M.row(r));
    const Cyclo pivot_inv = inv(M(r, c));
    for (Eigen::Index i = r + 1; i < M.rows(); ++i) {
      if (M(i, c).is_zero()) continue;
      const Cyclo f = M(i, c) * pivot_inv;
      for (Eigen::Index j = c; j < M.cols(); ++j)
        if (!M(r, j).is_zero()) M(i, j) -= f * M(r, j);
    }
    ++r;
  }
  return r;
}

Cyclo trace(const CycloMatrix& M) {
  Cyclo t;
  for (Eigen::Index i = 0; i < std::min(M.rows(), M.cols()); ++i) t += M(i, i);
  return t;
}

}  // namespace bcwork
