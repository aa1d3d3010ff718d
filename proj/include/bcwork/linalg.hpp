#pragma once

#include "bcwork/numeric.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bcwork {

template <class Z>
Matrix<Z> identity(Eigen::Index n) {
  Matrix<Z> I = Matrix<Z>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) I(i, i) = Z(1);
  return I;
}

template <class Z>
Z abs_value(const Z& x) {
  return x < Z(0) ? Z(-x) : x;
}

template <class Z>
Z gcd_value(Z a, Z b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != Z(0)) {
    Z r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// U * M * V == S with U, V unimodular and S diagonal with d_1 | d_2 | ...
template <class Z>
struct SmithDecomposition {
  Matrix<Z> U;
  Matrix<Z> S;
  Matrix<Z> V;

  // Full diagonal of S (length min(rows, cols)), zeros included.
  std::vector<Z> diagonal() const {
    std::vector<Z> d;
    for (Eigen::Index i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
    return d;
  }
  // Nonzero invariant factors.
  std::vector<Z> invariant_factors() const {
    std::vector<Z> d;
    for (const Z& x : diagonal())
      if (x != Z(0)) d.push_back(x);
    return d;
  }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(invariant_factors().size()); }
};

namespace detail {

template <class Z>
void swap_rows(Matrix<Z>& A, Eigen::Index i, Eigen::Index j) {
  if (i != j) A.row(i).swap(A.row(j));
}
template <class Z>
void swap_cols(Matrix<Z>& A, Eigen::Index i, Eigen::Index j) {
  if (i != j) A.col(i).swap(A.col(j));
}
// row_i += c * row_j
template <class Z>
void add_row(Matrix<Z>& A, Eigen::Index i, Eigen::Index j, const Z& c) {
  for (Eigen::Index k = 0; k < A.cols(); ++k) A(i, k) += c * A(j, k);
}
template <class Z>
void add_col(Matrix<Z>& A, Eigen::Index i, Eigen::Index j, const Z& c) {
  for (Eigen::Index k = 0; k < A.rows(); ++k) A(k, i) += c * A(k, j);
}

}  // namespace detail

// Min-|entry| pivoting with row-major tie breaking.
template <class Z>
SmithDecomposition<Z> snf(const Matrix<Z>& M) {
  const Eigen::Index m = M.rows(), n = M.cols();
  SmithDecomposition<Z> d{identity<Z>(m), M, identity<Z>(n)};
  Matrix<Z>& S = d.S;

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    while (true) {
      Eigen::Index pi = -1, pj = -1;
      Z best;
      for (Eigen::Index i = t; i < m; ++i)
        for (Eigen::Index j = t; j < n; ++j)
          if (S(i, j) != Z(0) && (pi < 0 || abs_value(S(i, j)) < best)) {
            best = abs_value(S(i, j));
            pi = i;
            pj = j;
          }
      if (pi < 0) return d;  // remaining block is zero

      detail::swap_rows(S, t, pi);
      detail::swap_rows(d.U, t, pi);
      detail::swap_cols(S, t, pj);
      detail::swap_cols(d.V, t, pj);

      bool residue = false;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (S(i, t) == Z(0)) continue;
        Z q = -(S(i, t) / S(t, t));
        detail::add_row(S, i, t, q);
        detail::add_row(d.U, i, t, q);
        residue = residue || S(i, t) != Z(0);
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (S(t, j) == Z(0)) continue;
        Z q = -(S(t, j) / S(t, t));
        detail::add_col(S, j, t, q);
        detail::add_col(d.V, j, t, q);
        residue = residue || S(t, j) != Z(0);
      }
      if (residue) continue;

      // Pivot isolated; enforce divisibility of the remaining block.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != Z(0)) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      detail::add_row(S, t, bad, Z(1));
      detail::add_row(d.U, t, bad, Z(1));
    }
    if (S(t, t) < Z(0)) {
      S.row(t) = -S.row(t);
      d.U.row(t) = -d.U.row(t);
    }
  }
  return d;
}

template <class Z>
std::vector<Z> invariant_factors(const Matrix<Z>& M) {
  return snf(M).invariant_factors();
}

template <class Z>
Eigen::Index rank(const Matrix<Z>& M) {
  return snf(M).rank();
}

// Fraction-free (Bareiss) determinant.
template <class Z>
Z determinant(Matrix<Z> A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Eigen::Index n = A.rows();
  if (n == 0) return Z(1);
  Z sign(1), prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (A(k, k) == Z(0)) {
      Eigen::Index p = k + 1;
      while (p < n && A(p, k) == Z(0)) ++p;
      if (p == n) return Z(0);
      detail::swap_rows(A, k, p);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

// Row-style Hermite form of the lattice spanned by the rows of B:
// pivots positive, entries above a pivot reduced into [0, pivot).
template <class Z>
Matrix<Z> hermite_rows(Matrix<Z> B) {
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < B.cols() && r < B.rows(); ++c) {
    while (true) {
      Eigen::Index p = -1;
      for (Eigen::Index i = r; i < B.rows(); ++i)
        if (B(i, c) != Z(0) && (p < 0 || abs_value(B(i, c)) < abs_value(B(p, c)))) p = i;
      if (p < 0) break;
      detail::swap_rows(B, r, p);
      bool done = true;
      for (Eigen::Index i = r + 1; i < B.rows(); ++i) {
        if (B(i, c) == Z(0)) continue;
        detail::add_row(B, i, r, Z(-(B(i, c) / B(r, c))));
        done = done && B(i, c) == Z(0);
      }
      if (done) break;
    }
    if (r < B.rows() && B(r, c) != Z(0)) {
      if (B(r, c) < Z(0)) B.row(r) = -B.row(r);
      for (Eigen::Index i = 0; i < r; ++i) {
        Z q = B(i, c) / B(r, c);
        if (B(i, c) - q * B(r, c) < Z(0)) q -= Z(1);
        if (q != Z(0)) detail::add_row(B, i, r, Z(-q));
      }
      ++r;
    }
  }
  return B.topRows(r).eval();
}

// Saturated basis of {x : M x = 0}; canonical: Hermite-reduced, first
// nonzero coordinate positive, sorted lexicographically.
template <class Z>
std::vector<Vector<Z>> kernel_basis(const Matrix<Z>& M) {
  const auto d = snf(M);
  const Eigen::Index r = d.rank();
  const Eigen::Index k = M.cols() - r;
  if (k == 0) return {};
  Matrix<Z> rows = d.V.rightCols(k).transpose();
  rows = hermite_rows(rows);
  std::vector<Vector<Z>> out;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) out.emplace_back(rows.row(i).transpose());
  auto lex_less = [](const Vector<Z>& a, const Vector<Z>& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a(i) != b(i)) return a(i) < b(i);
    return false;
  };
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// Z^f plus the nonunit invariant factors of the relation matrix.
struct AbelianGroupShape {
  Eigen::Index free_rank = 0;
  std::vector<Int> torsion;

  bool is_free() const { return torsion.empty(); }
  bool operator==(const AbelianGroupShape&) const = default;
};

// Z^ngens modulo the span of the relation columns.
struct FreeAbPresentation {
  Eigen::Index ngens = 0;
  IntMatrix relations;

  AbelianGroupShape shape() const;
  // Coordinates of generator images on the free part of the quotient:
  // a (free_rank x ngens) matrix Q with ker Q ⊇ relations (exact when torsion-free).
  IntMatrix quotient_map() const;
};

FreeAbPresentation cokernel(const IntMatrix& M);
FreeAbPresentation free_group_of_rank(Eigen::Index n);

template <class Z>
std::optional<Vector<Z>> solve_integer(const Matrix<Z>& M, const Vector<Z>& b) {
  if (b.size() != M.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  const auto d = snf(M);
  const Vector<Z> c = d.U * b;
  Vector<Z> y = Vector<Z>::Zero(M.cols());
  const Eigen::Index r = d.rank();
  for (Eigen::Index i = 0; i < r; ++i) {
    if (c(i) % d.S(i, i) != Z(0)) return std::nullopt;
    y(i) = c(i) / d.S(i, i);
  }
  for (Eigen::Index i = r; i < c.size(); ++i)
    if (c(i) != Z(0)) return std::nullopt;
  return Vector<Z>(d.V * y);
}

// True iff the classes of the columns of `vectors` in Z^rows / im(M)
// are linearly independent and span a direct summand.
bool extends_to_basis(const IntMatrix& M, const IntMatrix& vectors);
// True iff those classes form a basis of a free cokernel.
bool is_cokernel_basis(const IntMatrix& M, const IntMatrix& vectors);

// Same row lattice (used for comparing kernel bases).
bool same_lattice(const std::vector<IntVector>& a, const std::vector<IntVector>& b);

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);
IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, Eigen::Index cols = -1);
IntMatrix columns_to_matrix(const std::vector<IntVector>& cols, Eigen::Index rows);

}  // namespace bcwork
