#include "bcwork/torus.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcwork {

namespace {

Rational frac(const Rational& q) {
  Int n = numerator(q), d = denominator(q);
  Int fl = n / d;
  if (n < 0 && fl * d != n) fl -= 1;
  return q - Rational(fl);
}

}  // namespace

TorusPoint::TorusPoint(Rational a, Rational b) : x(frac(a)), y(frac(b)) {
  if (12 % denominator(x) != 0 || 12 % denominator(y) != 0)
    throw std::invalid_argument("torus point denominators must divide 12: (" + a.str() + "," + b.str() + ")");
}

std::string TorusPoint::str() const {
  return "(" + x.str() + "," + y.str() + ")";
}

TorusPoint dual_action(const Mat2& A, const TorusPoint& theta) {
  const Mat2 M = mat_inverse(A).transpose();
  return TorusPoint(Rational(M(0, 0)) * theta.x + Rational(M(0, 1)) * theta.y,
                    Rational(M(1, 0)) * theta.x + Rational(M(1, 1)) * theta.y);
}

Cyclo character_value(const TorusPoint& theta, const Vec2& t) {
  const Rational s = frac(theta.x * Rational(t(0)) + theta.y * Rational(t(1))) * Rational(12);
  if (denominator(s) != 1) throw std::invalid_argument("character value outside Q(zeta12)");
  return zeta12(static_cast<long long>(numerator(s)));
}

OrbitRep orbit_of(const WallpaperGroup& W, const TorusPoint& theta) {
  OrbitRep orb;
  for (const Mat2& A : W.point_group.elements) orb.orbit.push_back(dual_action(A, theta));
  std::sort(orb.orbit.begin(), orb.orbit.end());
  orb.orbit.erase(std::unique(orb.orbit.begin(), orb.orbit.end()), orb.orbit.end());
  const TorusPoint& base = orb.orbit.front();
  std::vector<Mat2> stab;
  for (const Mat2& A : W.point_group.elements)
    if (dual_action(A, base) == base) stab.push_back(A);
  orb.stabilizer = subgroup(W.point_group, stab, "Stab" + base.str());
  for (const TorusPoint& phi : orb.orbit)
    for (const Mat2& A : W.point_group.elements)
      if (dual_action(A, base) == phi) {
        orb.coset_reps.push_back(A);
        break;
      }
  orb.stabilizer_table = character_table(orb.stabilizer);
  return orb;
}

CycloMatrix evaluate(const GroupAlgElem& x, const OrbitRep& orb, int irrep_index) {
  const Irrep& rho = orb.stabilizer_table.irreps.at(irrep_index);
  const Eigen::Index k = static_cast<Eigen::Index>(orb.orbit.size()), d = rho.degree;
  const TorusPoint& base = orb.orbit[orb.base_index];
  CycloMatrix M = CycloMatrix::Constant(k * d, k * d, Cyclo(0));
  for (const auto& [g, c] : x.support()) {
    for (Eigen::Index i = 0; i < k; ++i) {
      const Mat2 p = g.A * orb.coset_reps[i];
      const auto it = std::lower_bound(orb.orbit.begin(), orb.orbit.end(), dual_action(p, base));
      const Eigen::Index j = it - orb.orbit.begin();
      const int h = orb.stabilizer.index_of(mat_inverse(orb.coset_reps[j]) * p);
      if (h < 0) throw std::logic_error("coset cocycle left the stabilizer");
      const Cyclo scale = c * character_value(orb.orbit[j], g.t);
      M.block(j * d, i * d, d, d) += (rho.images[h] * scale).eval();
    }
  }
  return M;
}

std::vector<CoordinateLabel> coordinate_labels(const WallpaperGroup& W, const std::vector<TorusPoint>& points) {
  std::vector<CoordinateLabel> out;
  for (std::size_t p = 0; p < points.size(); ++p) {
    const OrbitRep orb = orbit_of(W, points[p]);
    for (const Irrep& rho : orb.stabilizer_table.irreps)
      out.push_back({static_cast<int>(p), rho.index,
                     orb.orbit.front().str() + ":" + orb.stabilizer_table.structure.label() + ":" + rho.label});
  }
  return out;
}

IntVector k0_coordinates(const WallpaperGroup& W, const GroupAlgElem& x, const std::vector<TorusPoint>& points) {
  if (!is_projection(x)) throw std::invalid_argument("k0_coordinates: input is not a projection");
  std::vector<Int> entries;
  for (const TorusPoint& theta : points) {
    const OrbitRep orb = orbit_of(W, theta);
    for (const Irrep& rho : orb.stabilizer_table.irreps) entries.emplace_back(field_rank(evaluate(x, orb, rho.index)));
  }
  IntVector v(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<Eigen::Index>(i)) = entries[i];
  return v;
}

IntMatrix coordinate_matrix(const WallpaperGroup& W, const std::vector<GroupAlgElem>& basis,
                            const std::vector<TorusPoint>& points) {
  std::vector<IntVector> cols;
  for (const GroupAlgElem& b : basis) cols.push_back(k0_coordinates(W, b, points));
  return columns_to_matrix(cols, static_cast<Eigen::Index>(coordinate_labels(W, points).size()));
}

std::optional<IntVector> express_in_basis(const WallpaperGroup& W, const GroupAlgElem& x,
                                          const std::vector<GroupAlgElem>& basis,
                                          const std::vector<TorusPoint>& points) {
  const IntMatrix B = coordinate_matrix(W, basis, points);
  const auto d = snf(B);
  const auto factors = d.invariant_factors();
  const bool unimodular_image = static_cast<Eigen::Index>(factors.size()) == B.cols() &&
                                std::all_of(factors.begin(), factors.end(), [](const Int& f) { return f == 1; });
  if (!unimodular_image) throw std::invalid_argument("express_in_basis: basis coordinate matrix is not injective");
  return solve_integer(B, k0_coordinates(W, x, points));
}

}  // namespace bcwork
