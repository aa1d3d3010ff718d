#include "properties.hpp"

#include "bcwork/fixtures.hpp"
#include "bcwork/linalg.hpp"
#include "bcwork/torus.hpp"

#include <random>

namespace bcwork::properties {

namespace {

const std::vector<std::string> kGroups{"p2", "p4", "p6", "cmm", "p4m", "p6m"};

FixtureStore store() {
  return FixtureStore(FixtureStore::resolve_dir(std::nullopt, BCWORK_FIXTURE_DIR));
}

std::string basis_id(const std::string& g) {
  if (g == "p2") return "B2";
  if (g == "p4") return "B4";
  if (g == "p6") return "B6";
  return g == "cmm" ? "BCMM" : g == "p4m" ? "BP4M" : "BP6M";
}

TorusPoint pt(long long a, long long b, long long d) {
  return {Rational(a, d), Rational(b, d)};
}

// Orbit representatives of the fixed-point strata plus one generic point.
std::vector<TorusPoint> test_points(const std::string& g) {
  if (g == "p6" || g == "p6m") return {pt(0, 0, 1), pt(1, 1, 3), pt(1, 1, 2), pt(1, 5, 12)};
  if (g == "p2") return {pt(0, 0, 1), pt(1, 0, 2), pt(0, 1, 2), pt(1, 1, 2), pt(1, 5, 12)};
  return {pt(0, 0, 1), pt(1, 1, 2), pt(0, 1, 2), pt(1, 5, 12)};
}

WallElem random_element(const WallpaperGroup& W, std::mt19937& rng) {
  std::uniform_int_distribution<int> t(-2, 2);
  std::uniform_int_distribution<std::size_t> a(0, W.point_group.elements.size() - 1);
  WallElem g = point(W.point_group.elements[a(rng)]);
  g.t = Vec2(t(rng), t(rng));
  return g;
}

GroupAlgElem random_algebra(const WallpaperGroup& W, std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(1, 3), coeff(-2, 2), k(0, 11);
  GroupAlgElem x;
  while (x.is_zero())
    for (int i = terms(rng); i > 0; --i) x.add_term(random_element(W, rng), Cyclo(coeff(rng)) * zeta12(k(rng)));
  return x;
}

IntMatrix random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(1, 8), entry(-9, 9), sparse(0, 3);
  IntMatrix M(size(rng), size(rng));
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) M(i, j) = sparse(rng) == 0 ? 0 : entry(rng);
  return M;
}

template <class F>
Result run(const std::string& name, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::string("error: ") + e.what()};
  }
}

std::string tally(int ok, int total) {
  return std::to_string(ok) + "/" + std::to_string(total);
}

}  // namespace

Result snf_contract(int trials, unsigned seed) {
  return run("snf-contract", [&] {
    std::mt19937 rng(seed);
    int ok = 0;
    for (int n = 0; n < trials; ++n) {
      const IntMatrix M = random_matrix(rng);
      const auto d = snf(M);
      bool good = d.U * M * d.V == d.S && abs_value(determinant(d.U)) == 1 && abs_value(determinant(d.V)) == 1;
      for (Eigen::Index i = 0; i < d.S.rows(); ++i)
        for (Eigen::Index j = 0; j < d.S.cols(); ++j)
          if (i != j && d.S(i, j) != 0) good = false;
      const auto diag = d.diagonal();
      for (std::size_t i = 0; i + 1 < diag.size(); ++i)
        if (diag[i] < 0 || (diag[i] == 0 ? diag[i + 1] != 0 : diag[i + 1] % diag[i] != 0)) good = false;
      if (good && rank(M) != static_cast<Eigen::Index>(d.invariant_factors().size())) good = false;
      if (good) ++ok;
    }
    return Result{"snf-contract", ok == trials, tally(ok, trials) + " random matrices"};
  });
}

Result frobenius_reciprocity() {
  return run("frobenius-reciprocity", [] {
    const WallpaperGroup p4 = wallpaper_group("p4"), p6 = wallpaper_group("p6"), cmm = wallpaper_group("cmm"),
                         p4m = wallpaper_group("p4m"), p6m = wallpaper_group("p6m");
    const Mat2 R = p6m.symbols.at("r").A, s = p6m.symbols.at("s").A;
    struct Pair {
      std::string name;
      FiniteMatrixGroup H, G;
    };
    const std::vector<Pair> pairs{
        {"C2<C4", subgroup(p4.point_group, wallpaper_group("p2").point_group.elements), p4.point_group},
        {"C2<C6", subgroup(p6.point_group, wallpaper_group("p2").point_group.elements), p6.point_group},
        {"D2<D4", subgroup(p4m.point_group, cmm.point_group.elements), p4m.point_group},
        {"D2<D6", subgroup(p6m.point_group, cmm.point_group.elements), p6m.point_group},
        {"D3<D6", subgroup(p6m.point_group, enumerate({mat_pow(R, 2), s}).elements), p6m.point_group}};
    int ok = 0, total = 0;
    std::string bad;
    for (const Pair& p : pairs) {
      const CharacterTable th = character_table(p.H), tg = character_table(p.G);
      for (const Irrep& a : th.irreps)
        for (const Irrep& b : tg.irreps) {
          ++total;
          const Cyclo lhs = inner_product(p.G, induce(p.H, p.G, a.character()), b.character());
          const Cyclo rhs = inner_product(p.H, a.character(), restrict(p.G, p.H, b.character()));
          if (lhs == rhs) ++ok;
          else bad += " " + p.name + ":" + a.label + "/" + b.label;
        }
    }
    return Result{"frobenius-reciprocity", ok == total, tally(ok, total) + " irrep pairs" + bad};
  });
}

Result evaluation_multiplicative(int pairs, unsigned seed) {
  return run("evaluation-multiplicative", [&] {
    std::mt19937 rng(seed);
    int ok = 0, total = 0;
    for (const std::string& g : kGroups) {
      const WallpaperGroup W = wallpaper_group(g);
      std::vector<OrbitRep> orbits;
      for (const TorusPoint& p : test_points(g)) orbits.push_back(orbit_of(W, p));
      for (int n = 0; n < pairs; ++n) {
        const GroupAlgElem x = random_algebra(W, rng), y = random_algebra(W, rng);
        const OrbitRep& orb = orbits[n % orbits.size()];
        const int j = static_cast<int>(n / orbits.size() % orb.stabilizer_table.irreps.size());
        ++total;
        if (evaluate(x * y, orb, j) == evaluate(x, orb, j) * evaluate(y, orb, j)) ++ok;
      }
    }
    return Result{"evaluation-multiplicative", ok == total, tally(ok, total) + " random pairs"};
  });
}

Result evaluation_star(int trials, unsigned seed) {
  return run("evaluation-star", [&] {
    std::mt19937 rng(seed);
    int ok = 0, total = 0;
    for (const std::string& g : kGroups) {
      const WallpaperGroup W = wallpaper_group(g);
      for (const TorusPoint& p : test_points(g)) {
        const OrbitRep orb = orbit_of(W, p);
        for (int n = 0; n < trials / 4; ++n) {
          const GroupAlgElem x = random_algebra(W, rng);
          for (const Irrep& rho : orb.stabilizer_table.irreps) {
            ++total;
            if (evaluate(star(x), orb, rho.index) == conj_transpose(evaluate(x, orb, rho.index))) ++ok;
          }
        }
      }
    }
    return Result{"evaluation-star", ok == total, tally(ok, total) + " evaluations"};
  });
}

Result rank_equals_trace() {
  return run("rank-equals-trace", [] {
    const FixtureStore fs = store();
    int ok = 0, total = 0;
    for (const std::string& g : kGroups) {
      const WallpaperGroup W = wallpaper_group(g);
      for (const KSymbol& sym : fs.projections(basis_id(g), W)) {
        if (sym.formal()) continue;
        for (const TorusPoint& p : test_points(g)) {
          const OrbitRep orb = orbit_of(W, p);
          for (const Irrep& rho : orb.stabilizer_table.irreps) {
            const CycloMatrix E = evaluate(*sym.projection, orb, rho.index);
            ++total;
            if (E * E == E && trace(E) == Cyclo(Rational(static_cast<long long>(field_rank(E))))) ++ok;
          }
        }
      }
    }
    return Result{"rank-equals-trace", ok == total, tally(ok, total) + " evaluations"};
  });
}

Result conjugation_invariance(unsigned seed) {
  return run("conjugation-invariance", [&] {
    std::mt19937 rng(seed);
    const FixtureStore fs = store();
    int ok = 0, total = 0;
    for (const std::string& g : kGroups) {
      const WallpaperGroup W = wallpaper_group(g);
      const std::vector<TorusPoint> pts = test_points(g);
      for (const KSymbol& sym : fs.projections(basis_id(g), W)) {
        if (sym.formal()) continue;
        const IntVector base = k0_coordinates(W, *sym.projection, pts);
        for (int n = 0; n < 3; ++n) {
          ++total;
          if (k0_coordinates(W, conjugate_by(*sym.projection, random_element(W, rng)), pts) == base) ++ok;
        }
      }
    }
    return Result{"conjugation-invariance", ok == total, tally(ok, total) + " conjugates"};
  });
}

std::vector<Result> all() {
  return {snf_contract(),           frobenius_reciprocity(), evaluation_multiplicative(),
          evaluation_star(),        rank_equals_trace(),     conjugation_invariance()};
}

}  // namespace bcwork::properties
