#include "bcwork/fixtures.hpp"
#include "bcwork/wallpaper.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace bcwork;

namespace {

FixtureStore fixtures() {
  return FixtureStore(BCWORK_FIXTURE_DIR);
}

GroupAlgElem half_one_plus(const WallpaperGroup& W, const std::string& word) {
  GroupAlgElem x = GroupAlgElem::unit();
  x.add_term(parse_word(W, word), Cyclo(1));
  return Cyclo(Rational(1, 2)) * x;
}

}  // namespace

TEST_CASE("crystallographic relations") {
  const WallpaperGroup p4m = wallpaper_group("p4m");
  const WallElem r = parse_word(p4m, "r"), u = parse_word(p4m, "u");
  CHECK(r * u == parse_word(p4m, "v^{-1}r"));
  CHECK(power(r, 4) == WallElem{});
  CHECK(parse_word(p4m, "(rs)^2") == WallElem{});
  CHECK(parse_word(p4m, "1") == WallElem{});
  CHECK(parse_word(p4m, "e") == WallElem{});
  CHECK_THROWS(parse_word(p4m, "x"));
  const WallpaperGroup p4 = wallpaper_group("p4");
  CHECK(parse_word(p4, "S^2") == parse_word(p4, "eps"));
  const WallpaperGroup p6 = wallpaper_group("p6");
  CHECK(parse_word(p6, "R^3") == parse_word(p6, "eps"));
}

TEST_CASE("element orders") {
  const WallpaperGroup p2 = wallpaper_group("p2");
  CHECK(element_order(parse_word(p2, "ueps")) == 2);
  CHECK_FALSE(element_order(parse_word(p2, "u")));
  CHECK(element_order(parse_word(wallpaper_group("p6m"), "ur^4")) == 3);
  std::mt19937 rng(2);
  const WallpaperGroup p6m = wallpaper_group("p6m");
  for (const Mat2& A : p6m.point_group.elements) {
    CHECK(element_order(point(A)) == mat_order(A));
    CHECK_FALSE(element_order(WallElem{Vec2(1 + static_cast<int>(rng() % 3), 0), Mat2::Identity()}));
  }
}

TEST_CASE("group laws on random elements") {
  std::mt19937 rng(4);
  for (const std::string g : {"p2", "p4", "p6", "cmm", "p4m", "p6m"}) {
    const WallpaperGroup W = wallpaper_group(g);
    auto rnd = [&] {
      WallElem x = point(W.point_group.elements[rng() % W.point_group.elements.size()]);
      x.t = Vec2(static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 5) - 2);
      return x;
    };
    for (int n = 0; n < 50; ++n) {
      const WallElem a = rnd(), b = rnd(), c = rnd();
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * inverse(a) == WallElem{});
    }
  }
}

TEST_CASE("conjugacy witnesses") {
  const WallpaperGroup p4 = wallpaper_group("p4");
  const WallElem g = parse_word(p4, "veps"), h = parse_word(p4, "ueps");
  const auto w = are_conjugate(p4, g, h);
  REQUIRE(w);
  CHECK(*w * g * inverse(*w) == h);
  // A witness with point part S also exists.
  bool with_s = false;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      WallElem x = parse_word(p4, "S");
      x.t = Vec2(a, b);
      with_s = with_s || x * g * inverse(x) == h;
    }
  CHECK(with_s);
  CHECK(are_conjugate(p4, h, g));
  const auto self = are_conjugate(p4, g, g);
  REQUIRE(self);
  CHECK(*self * g * inverse(*self) == g);
  CHECK_FALSE(are_conjugate(p4, parse_word(p4, "eps"), parse_word(p4, "S")));

  const WallpaperGroup p6 = wallpaper_group("p6");
  const WallElem w6 = inverse(parse_word(p6, "uR^2"));
  CHECK(w6 * parse_word(p6, "uvR^3") * inverse(w6) == parse_word(p6, "uR^3"));
  CHECK(are_conjugate(p6, parse_word(p6, "uvR^3"), parse_word(p6, "uR^3")));
}

TEST_CASE("torsion class representatives") {
  const FixtureStore fs = fixtures();
  for (const auto& [g, n] : std::vector<std::pair<std::string, std::size_t>>{{"cmm", 6}, {"p4m", 9}, {"p6m", 8}}) {
    const WallpaperGroup W = wallpaper_group(g);
    CHECK(torsion_class_reps(W).size() == n);
    std::string id = "TORSION_" + g;
    std::transform(id.begin(), id.end(), id.begin(), ::toupper);
    const auto reps = fs.torsion(id, W);
    CHECK(reps.size() == n);
    const TorsionCertificate c = certify_torsion_reps(W, reps);
    CHECK(c.pairwise_non_conjugate);
    CHECK(c.complete);
  }
}

TEST_CASE("maximal finite subgroups") {
  const FixtureStore fs = fixtures();
  const WallpaperGroup cmm = wallpaper_group("cmm");
  const auto subs = fs.maximal_finite("MAXFIN_CMM", cmm);
  REQUIRE(subs.size() == 3);
  std::vector<std::string> types;
  for (const auto& H : subs) {
    const SubgroupCheck c = check_finite_subgroup(cmm, H);
    CHECK(c.closed);
    CHECK(c.type_matches);
    types.push_back(c.computed_type);
  }
  CHECK(types == std::vector<std::string>{"D2", "D2", "C2"});
  CHECK_FALSE(subgroups_conjugate(cmm, subs[0], subs[1]));
  CHECK(subgroups_conjugate(cmm, subs[0], subs[0]));

  const WallpaperGroup p4m = wallpaper_group("p4m");
  const auto p4m_subs = fs.maximal_finite("MAXFIN_P4M", p4m);
  REQUIRE(p4m_subs.size() == 3);
  CHECK(check_finite_subgroup(p4m, p4m_subs[0]).computed_type == "D4");
  CHECK(check_finite_subgroup(p4m, p4m_subs[1]).computed_type == "D4");
  CHECK(check_finite_subgroup(p4m, p4m_subs[2]).computed_type == "D2");
  CHECK_FALSE(subgroups_conjugate(p4m, p4m_subs[0], p4m_subs[1]));

  const WallpaperGroup p6m = wallpaper_group("p6m");
  const auto p6m_subs = fs.maximal_finite("MAXFIN_P6M", p6m);
  REQUIRE(p6m_subs.size() == 3);
  CHECK(check_finite_subgroup(p6m, p6m_subs[0]).computed_type == "D6");
  CHECK(check_finite_subgroup(p6m, p6m_subs[1]).computed_type == "D3");
  CHECK(check_finite_subgroup(p6m, p6m_subs[2]).computed_type == "D2");

  // A conjugated copy is recognized.
  FiniteSubgroup moved{"D2", {}};
  const WallElem w = parse_word(cmm, "u");
  for (const auto& h : subs[0].elements) moved.elements.push_back(w * h * inverse(w));
  CHECK(subgroups_conjugate(cmm, subs[0], moved));
}

TEST_CASE("group-ring projections") {
  const WallpaperGroup p4 = wallpaper_group("p4");
  const WallElem S = parse_word(p4, "S");
  const GroupAlgElem p0 = spectral_projection(S, 0), p1 = spectral_projection(S, 1), p2 = spectral_projection(S, 2);
  CHECK((p0 * p2).is_zero());
  CHECK(p0 * p0 == p0);
  GroupAlgElem want;
  want.add_term(WallElem{}, Cyclo(Rational(1, 4)));
  want.add_term(S, Cyclo(Rational(1, 4)) * imag_unit());
  want.add_term(power(S, 2), Cyclo(Rational(-1, 4)));
  want.add_term(power(S, 3), Cyclo(Rational(-1, 4)) * imag_unit());
  CHECK(p1 == want);
  for (const auto& [g, c] : p0.support()) CHECK(c == Cyclo(Rational(1, 4)));

  CHECK(conjugate_by(half_one_plus(p4, "veps"), inverse(S)) == half_one_plus(p4, "ueps"));

  const WallpaperGroup p6 = wallpaper_group("p6");
  CHECK(spectral_projection(parse_word(p6, "uR^3"), 0) == half_one_plus(p6, "uR^3"));
}

TEST_CASE("minimal projections") {
  const WallpaperGroup cmm = wallpaper_group("cmm");
  std::vector<WallElem> H;
  for (const std::string w : {"1", "r", "s", "rs"}) H.push_back(parse_word(cmm, w));
  GroupAlgElem p1;
  for (const auto& h : H) p1.add_term(h, Cyclo(Rational(1, 4)));
  CHECK(minimal_projection(cmm, H, 0) == p1);
  CHECK(minimal_projection(cmm, {WallElem{}}, 0) == GroupAlgElem::unit());

  const WallpaperGroup p6m = wallpaper_group("p6m");
  std::vector<WallElem> D3;
  for (const std::string w : {"1", "ur^4", "rs", "ur^5s", "uvr^3s", "uvr^2"}) D3.push_back(parse_word(p6m, w));
  GroupAlgElem p7;
  for (const auto& h : D3) p7.add_term(h, Cyclo(Rational(1, 6)));
  CHECK(minimal_projection(p6m, D3, 0) == p7);

  // every irrep of every maximal finite subgroup gives a projection
  const FixtureStore fs = fixtures();
  for (const auto& [g, id] : std::vector<std::pair<std::string, std::string>>{
           {"cmm", "MAXFIN_CMM"}, {"p4m", "MAXFIN_P4M"}, {"p6m", "MAXFIN_P6M"}}) {
    const WallpaperGroup W = wallpaper_group(g);
    for (const auto& F : fs.maximal_finite(id, W)) {
      std::vector<Mat2> pts;
      for (const auto& h : F.elements) pts.push_back(h.A);
      const int n = static_cast<int>(character_table(subgroup(W.point_group, pts)).irreps.size());
      for (int j = 0; j < n; ++j) CHECK(is_projection(minimal_projection(W, F.elements, j)));
    }
  }
}

TEST_CASE("projection fixtures") {
  const FixtureStore fs = fixtures();
  int count = 0;
  for (const auto& [g, id] : std::vector<std::pair<std::string, std::string>>{
           {"p2", "B2"}, {"p4", "B4"}, {"p6", "B6"}, {"cmm", "BCMM"}, {"p4m", "BP4M"}, {"p6m", "BP6M"}}) {
    for (const auto& sym : fs.projections(id, wallpaper_group(g))) {
      if (sym.formal()) continue;
      ++count;
      INFO(id << " " << sym.label);
      CHECK(*sym.projection * *sym.projection == *sym.projection);
      CHECK(star(*sym.projection) == *sym.projection);
    }
  }
  CHECK(count == 45);
}

TEST_CASE("find_conjugator and push_forward") {
  const WallpaperGroup p2 = wallpaper_group("p2");
  const GroupAlgElem x = half_one_plus(p2, "ueps"), y = half_one_plus(p2, "veps");
  CHECK_FALSE(find_conjugator(p2, x, y));
  const auto w = find_conjugator(p2, x, conjugate_by(x, parse_word(p2, "v")));
  REQUIRE(w);
  CHECK(conjugate_by(x, *w) == conjugate_by(x, parse_word(p2, "v")));
  Mat2 alpha;
  alpha << 1, 2, 0, 1;
  CHECK(push_forward(half_one_plus(p2, "eps"), alpha) == half_one_plus(p2, "eps"));
  CHECK(push_forward(half_one_plus(p2, "veps"), alpha) == half_one_plus(p2, "u^2veps"));
}
