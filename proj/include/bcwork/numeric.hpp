#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <string>

namespace bcwork {

// GMP-backed big numbers with expression templates off, so that Eigen
// sees ordinary value types.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Int>;
using IntVector = Vector<Int>;

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(Int(num), Int(den));
}

// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

}  // namespace bcwork
