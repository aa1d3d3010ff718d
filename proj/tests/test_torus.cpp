#include "bcwork/fixtures.hpp"
#include "bcwork/torus.hpp"
#include "properties.hpp"

#include "doctest.h"

#include <algorithm>

using namespace bcwork;

namespace {

FixtureStore fixtures() {
  return FixtureStore(BCWORK_FIXTURE_DIR);
}

TorusPoint pt(long long a, long long b, long long d) {
  return {Rational(a, d), Rational(b, d)};
}

std::vector<GroupAlgElem> realized(const KBasis& b) {
  std::vector<GroupAlgElem> out;
  for (const auto& s : b)
    if (!s.formal()) out.push_back(*s.projection);
  return out;
}

IntVector vec(std::initializer_list<long long> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long long x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("torus points") {
  CHECK(pt(3, -1, 2) == pt(1, 1, 2));
  CHECK_THROWS(pt(1, 0, 5));
  CHECK(character_value(pt(1, 0, 2), Vec2(1, 0)) == Cyclo(-1));
  CHECK(character_value(pt(1, 1, 4), Vec2(1, 1)) == Cyclo(-1));
  CHECK(character_value(pt(1, 5, 12), Vec2(0, 0)) == Cyclo(1));
}

TEST_CASE("orbits and stabilizers") {
  const WallpaperGroup cmm = wallpaper_group("cmm");
  const OrbitRep o = orbit_of(cmm, pt(0, 1, 2));
  CHECK(o.orbit == std::vector<TorusPoint>{pt(0, 1, 2), pt(1, 0, 2)});
  CHECK(o.stabilizer.order() == 2);
  for (const std::string g : {"p2", "p4", "p6", "cmm", "p4m", "p6m"}) {
    const WallpaperGroup W = wallpaper_group(g);
    const OrbitRep z = orbit_of(W, pt(0, 0, 1));
    CHECK(z.orbit.size() == 1);
    CHECK(z.stabilizer.order() == W.point_group.order());
    for (const TorusPoint& p : {pt(1, 1, 2), pt(1, 1, 3), pt(1, 5, 12)}) {
      const OrbitRep r = orbit_of(W, p);
      CHECK(static_cast<int>(r.orbit.size()) * r.stabilizer.order() == W.point_group.order());
      for (std::size_t i = 0; i < r.orbit.size(); ++i) CHECK(dual_action(r.coset_reps[i], r.orbit[0]) == r.orbit[i]);
    }
  }
  const WallpaperGroup p6m = wallpaper_group("p6m");
  const OrbitRep b = orbit_of(p6m, pt(1, 1, 2));
  CHECK(b.stabilizer.order() == 4);
  std::vector<Mat2> fixing;
  for (const Mat2& A : p6m.point_group.elements)
    if (dual_action(A, pt(1, 1, 2)) == pt(1, 1, 2)) fixing.push_back(A);
  const Mat2 s = p6m.symbols.at("s").A;
  std::vector<Mat2> want{Mat2::Identity(), s, Mat2(-Mat2::Identity()), Mat2(-s)};
  std::sort(want.begin(), want.end(), mat_less);
  CHECK(fixing == want);
}

TEST_CASE("cmm p6 evaluated at the origin") {
  const WallpaperGroup cmm = wallpaper_group("cmm");
  const GroupAlgElem p6 = *fixtures().projections("BCMM", cmm).at(5).projection;
  const OrbitRep o = orbit_of(cmm, pt(0, 0, 1));
  std::vector<long long> ranks;
  for (const auto& rho : o.stabilizer_table.irreps) ranks.push_back(field_rank(evaluate(p6, o, rho.index)));
  CHECK(ranks == std::vector<long long>{1, 1, 0, 0});
}

TEST_CASE("coordinates of the cmm basis") {
  const FixtureStore fs = fixtures();
  const WallpaperGroup cmm = wallpaper_group("cmm");
  const RowPermutation perm = fs.permutation("PERM_cmm");
  const IntMatrix M = coordinate_matrix(cmm, realized(fs.projections("BCMM", cmm)), perm.points);
  CHECK(M == fs.matrix("COORDS_CMM"));
  CHECK(coordinate_labels(cmm, perm.points).size() == 10);
  IntVector col6(10);
  col6 << 1, 1, 0, 0, 0, 0, 1, 1, 1, 1;
  CHECK(IntVector(M.col(5)) == col6);
}

TEST_CASE("express_in_basis") {
  const FixtureStore fs = fixtures();
  const WallpaperGroup cmm = wallpaper_group("cmm"), p4m = wallpaper_group("p4m"), p6m = wallpaper_group("p6m");
  const auto cmm_basis = realized(fs.projections("BCMM", cmm));
  const auto pts = fs.permutation("PERM_cmm").points;
  for (std::size_t i = 0; i < cmm_basis.size(); ++i) {
    const auto x = express_in_basis(cmm, cmm_basis[i], cmm_basis, pts);
    REQUIRE(x);
    CHECK(*x == IntVector(IntMatrix::Identity(6, 6).col(static_cast<Eigen::Index>(i))));
  }
  const auto c1 = express_in_basis(p4m, cmm_basis[0], realized(fs.projections("BP4M", p4m)),
                                   fs.permutation("PERM_p4m").points);
  REQUIRE(c1);
  CHECK(*c1 == vec({1, 0, 1, 0, 0, 0, 0, 0, 0}));
  const auto c6 = express_in_basis(p6m, cmm_basis[5], realized(fs.projections("BP6M", p6m)),
                                   fs.permutation("PERM_p6m").points);
  REQUIRE(c6);
  CHECK(*c6 == vec({-1, 1, 0, 0, 0, 0, 0, 2}));
  // a dependent basis is rejected; a class outside the span has no coordinates
  CHECK_THROWS(express_in_basis(cmm, cmm_basis[0], {cmm_basis[0], cmm_basis[0]}, pts));
  CHECK_FALSE(express_in_basis(cmm, cmm_basis[1], {cmm_basis[0]}, pts));
}

TEST_CASE("non-projections have no coordinates") {
  const WallpaperGroup p2 = wallpaper_group("p2");
  CHECK_THROWS(k0_coordinates(p2, Cyclo(2) * GroupAlgElem::unit(), {pt(0, 0, 1)}));
}

TEST_CASE("evaluation properties") {
  for (const auto& r : {properties::evaluation_multiplicative(), properties::evaluation_star(),
                        properties::rank_equals_trace(), properties::conjugation_invariance()}) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}
