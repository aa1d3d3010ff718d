#include "bcwork/linalg.hpp"

#include <stdexcept>

namespace bcwork {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(Int(text.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational number: " + text);
  }
}

std::string to_string(const Rational& q) {
  return q.str();
}

AbelianGroupShape FreeAbPresentation::shape() const {
  AbelianGroupShape out;
  const auto d = snf(relations);
  const auto factors = d.invariant_factors();
  out.free_rank = ngens - static_cast<Eigen::Index>(factors.size());
  for (const Int& f : factors)
    if (f != 1) out.torsion.push_back(f);
  return out;
}

IntMatrix FreeAbPresentation::quotient_map() const {
  const auto d = snf(relations);
  return d.U.bottomRows(ngens - d.rank());
}

FreeAbPresentation cokernel(const IntMatrix& M) {
  return {M.rows(), M};
}

FreeAbPresentation free_group_of_rank(Eigen::Index n) {
  return {n, IntMatrix::Zero(n, 0)};
}

bool extends_to_basis(const IntMatrix& M, const IntMatrix& vectors) {
  if (vectors.rows() != M.rows()) throw std::invalid_argument("extends_to_basis: dimension mismatch");
  const FreeAbPresentation p = cokernel(M);
  if (!p.shape().is_free()) return false;
  const IntMatrix image = p.quotient_map() * vectors;
  const auto d = snf(image);
  if (d.rank() != vectors.cols()) return false;
  for (const Int& f : d.invariant_factors())
    if (f != 1) return false;
  return true;
}

bool is_cokernel_basis(const IntMatrix& M, const IntMatrix& vectors) {
  return cokernel(M).shape().free_rank == vectors.cols() && extends_to_basis(M, vectors);
}

bool same_lattice(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  const Eigen::Index n = a.front().size();
  IntMatrix A(static_cast<Eigen::Index>(a.size()), n), B(static_cast<Eigen::Index>(b.size()), n);
  for (std::size_t i = 0; i < a.size(); ++i) A.row(static_cast<Eigen::Index>(i)) = a[i].transpose();
  for (std::size_t i = 0; i < b.size(); ++i) B.row(static_cast<Eigen::Index>(i)) = b[i].transpose();
  const IntMatrix ha = hermite_rows(A), hb = hermite_rows(B);
  return ha.rows() == hb.rows() && ha == hb;
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column mismatch");
  IntMatrix out(top.rows() + bottom.rows(), top.cols());
  out << top, bottom;
  return out;
}

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right) {
  if (left.rows() != right.rows()) throw std::invalid_argument("hstack: row mismatch");
  IntMatrix out(left.rows(), left.cols() + right.cols());
  out << left, right;
  return out;
}

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, Eigen::Index cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<Eigen::Index>(rows.front().size());
  IntMatrix out(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != cols) throw std::invalid_argument("from_rows: ragged rows");
    for (Eigen::Index j = 0; j < cols; ++j) out(static_cast<Eigen::Index>(i), j) = Int(rows[i][j]);
  }
  return out;
}

IntMatrix columns_to_matrix(const std::vector<IntVector>& cols, Eigen::Index rows) {
  IntMatrix out(rows, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("columns_to_matrix: length mismatch");
    out.col(static_cast<Eigen::Index>(j)) = cols[j];
  }
  return out;
}

}  // namespace bcwork
