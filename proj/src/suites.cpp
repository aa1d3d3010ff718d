#include "bcwork/suites.hpp"

#include "bcwork/serialize.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace bcwork {

using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string expected;
  std::string actual;
};

class Builder {
 public:
  explicit Builder(std::string suite) : report_{std::move(suite), {}} {}

  void check(const std::string& id, const std::string& description, const std::string& ref,
             const std::function<Outcome()>& body) {
    Check c{report_.suite + "." + id, description, Status::Fail, "", "", ref};
    try {
      Outcome o = body();
      c.status = o.pass ? Status::Pass : Status::Fail;
      c.expected = std::move(o.expected);
      c.actual = std::move(o.actual);
    } catch (const FixtureError& e) {
      c.actual = std::string("fixture problem: ") + e.what();
    } catch (const std::exception& e) {
      c.actual = std::string("error: ") + e.what();
    }
    report_.checks.push_back(std::move(c));
  }

  void fixture(const std::string& id, const std::string& description, const std::string& ref,
               const std::string& imported) {
    report_.checks.push_back({report_.suite + "." + id, description, Status::Fixture, imported, imported, ref});
  }

  void append(const Check& c) { report_.checks.push_back(c); }
  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

std::string vec_str(const IntVector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + v(i).str();
  return out + ")";
}

std::string kernel_str(const std::vector<IntVector>& k) {
  if (k.empty()) return "0";
  std::string out;
  for (const auto& v : k) out += (out.empty() ? "" : " ") + vec_str(v);
  return out;
}

std::string dims(const IntMatrix& M) {
  return std::to_string(M.rows()) + "x" + std::to_string(M.cols());
}

std::string ones(std::size_t n) {
  return list_to_string(std::vector<Int>(n, Int(1)));
}

bool all_ones(const std::vector<Int>& f, Eigen::Index n) {
  return static_cast<Eigen::Index>(f.size()) == n && std::all_of(f.begin(), f.end(), [](const Int& x) { return x == 1; });
}

AbelianGroupShape free_shape(Eigen::Index n) {
  return {n, {}};
}

// U M V == S with unimodular U, V and a divisibility chain.
bool snf_contract(const IntMatrix& M, const SmithDecomposition<Int>& d) {
  if (d.U * M * d.V != d.S) return false;
  if (abs_value(determinant(d.U)) != 1 || abs_value(determinant(d.V)) != 1) return false;
  for (Eigen::Index i = 0; i < d.S.rows(); ++i)
    for (Eigen::Index j = 0; j < d.S.cols(); ++j)
      if (i != j && d.S(i, j) != 0) return false;
  const auto diag = d.diagonal();
  for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
    if (diag[i] < 0) return false;
    if (diag[i] == 0 ? diag[i + 1] != 0 : diag[i + 1] % diag[i] != 0) return false;
  }
  return true;
}

const BredonRanks& find_ranks(const std::vector<BredonRanks>& t, const std::string& group) {
  for (const auto& r : t)
    if (r.group == group) return r;
  throw std::invalid_argument("table has no row for " + group);
}

std::vector<std::string> symbol_labels(const KBasis& b) {
  std::vector<std::string> out;
  for (const auto& s : b) out.push_back(s.label);
  return out;
}

std::vector<GroupAlgElem> realized(const KBasis& b) {
  std::vector<GroupAlgElem> out;
  for (const auto& s : b)
    if (!s.formal()) out.push_back(*s.projection);
  return out;
}

std::string fixture_suffix(const std::string& group) {
  return upper(group);
}

std::string basis_id(const std::string& group) {
  return group == "p2" ? "B2" : group == "p4" ? "B4" : group == "p6" ? "B6" : "B" + upper(group);
}

IntVector unit_vector(Eigen::Index n, Eigen::Index i) {
  IntVector v = IntVector::Zero(n);
  v(i) = 1;
  return v;
}

// --- shared pipelines -------------------------------------------------------

BredonInput sa_bredon_input(const FixtureStore& store) {
  const auto t = store.table("TABLE1");
  return {store.matrix("SA_H0_TO_P4"), store.matrix("SA_H0_TO_P6"), store.matrix("SA_H2_MAP"),
          find_ranks(t, "p4"), find_ranks(t, "p6"), find_ranks(t, "p2")};
}

BredonInput ga_bredon_input(const FixtureStore& store) {
  const auto t = store.table("TABLE2");
  return {store.matrix("GA_H0_TO_P4M"), store.matrix("GA_H0_TO_P6M"), std::nullopt,
          find_ranks(t, "p4m"), find_ranks(t, "p6m"), find_ranks(t, "cmm")};
}

KRanks lhs_ranks(const BredonInput& in) {
  const BredonHomology h = bredon_mv(in);
  return mislin_assemble(h.h0, h.h1, h.h2, h.h3);
}

SequenceResult sa_rhs_sequence(const FixtureStore& store) {
  const WallpaperGroup p4 = wallpaper_group("p4"), p6 = wallpaper_group("p6");
  return amalgam_sequence(store.matrix("P2_TO_P4"), store.matrix("P2_TO_P6"),
                          symbol_labels(store.projections("B4", p4)), symbol_labels(store.projections("B6", p6)));
}

SequenceResult ga_rhs_sequence(const FixtureStore& store, bool computed) {
  const WallpaperGroup p4m = wallpaper_group("p4m"), p6m = wallpaper_group("p6m");
  const IntMatrix a = computed ? reconstruct_iota(store, "p4m") : store.matrix("IOTA24");
  const IntMatrix b = computed ? reconstruct_iota(store, "p6m") : store.matrix("IOTA26");
  return amalgam_sequence(a, b, symbol_labels(store.projections("BP4M", p4m)),
                          symbol_labels(store.projections("BP6M", p6m)));
}

SpectralPage gamma2_lhs(const FixtureStore& store) {
  const BredonRanks p2 = find_ranks(store.table("TABLE1"), "p2");
  return martinez_gamma2({p2.h0, p2.h1, p2.h2}, store.gamma2("GAMMA2").free_group_ranks);
}

std::vector<ActionCheck> gamma2_actions(const FixtureStore& store) {
  const Gamma2Data g = store.gamma2("GAMMA2");
  const WallpaperGroup p2 = wallpaper_group("p2");
  return verify_gamma2_action(p2, store.projections(g.basis, p2), g.generators);
}

// Action matrices on K_0: identity columns for classes shown (or imported) to be fixed.
std::optional<SequenceResult> gamma2_rhs(const FixtureStore& store) {
  const Gamma2Data g = store.gamma2("GAMMA2");
  const WallpaperGroup p2 = wallpaper_group("p2");
  const KBasis basis = store.projections(g.basis, p2);
  const auto checks = verify_gamma2_action(p2, basis, g.generators);
  if (std::any_of(checks.begin(), checks.end(), [](const ActionCheck& c) { return c.status == CheckStatus::Fail; }))
    return std::nullopt;
  const auto n = static_cast<Eigen::Index>(basis.size());
  return pv_free_group(std::vector<IntMatrix>(g.generators.size(), identity<Int>(n)), n);
}

// Column of the inclusion p2 -> pn: either an exact sum of basis projections
// or a single basis projection reached by conjugation.
struct DerivedColumn {
  IntVector column;
  std::string how;
};

std::optional<DerivedColumn> derive_column(const WallpaperGroup& W, const GroupAlgElem& y, const KBasis& basis) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    if (!basis[i].formal()) idx.push_back(i);
  for (int i : idx)
    if (*basis[i].projection == y) return DerivedColumn{unit_vector(n, i), "= " + basis[i].label};
  for (int i : idx)
    if (auto w = find_conjugator(W, y, *basis[i].projection))
      return DerivedColumn{unit_vector(n, i), "~ " + basis[i].label + " via w=" + format_element(*w)};
  const unsigned subsets = 1u << idx.size();
  for (int size = 2; size <= static_cast<int>(idx.size()); ++size)
    for (unsigned mask = 1; mask < subsets; ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      GroupAlgElem sum;
      IntVector col = IntVector::Zero(n);
      std::string how = "=";
      for (std::size_t k = 0; k < idx.size(); ++k)
        if (mask & (1u << k)) {
          sum += *basis[idx[k]].projection;
          col(idx[k]) = 1;
          how += (how.size() > 1 ? " + " : " ") + basis[idx[k]].label;
        }
      if (sum == y) return DerivedColumn{col, how};
    }
  return std::nullopt;
}

Outcome projections_outcome(const KBasis& b) {
  int total = 0, ok = 0;
  std::string bad;
  for (const auto& s : b) {
    if (s.formal()) continue;
    ++total;
    if (is_projection(*s.projection)) ++ok;
    else bad += (bad.empty() ? " failing:" : "") + std::string(" ") + s.label;
  }
  return {ok == total, std::to_string(total) + "/" + std::to_string(total) + " idempotent and self-adjoint",
          std::to_string(ok) + "/" + std::to_string(total) + bad};
}

Outcome basis_outcome(const IntMatrix& relations, const LabeledVectors& lv) {
  const auto shape = cokernel(relations).shape();
  const bool ok = is_cokernel_basis(relations, lv.vectors);
  std::string actual = ok ? "basis of " + shape_to_string(shape) : "not a basis";
  if (!ok && shape.is_free() && lv.vectors.cols() == shape.free_rank) {
    const IntMatrix image = cokernel(relations).quotient_map() * lv.vectors;
    actual += "; spans a sublattice of index " + abs_value(determinant(image)).str();
  }
  return {ok, std::to_string(lv.vectors.cols()) + " classes forming a basis of " + shape_to_string(shape), actual};
}

// --- suites -----------------------------------------------------------------

SuiteReport sa_lhs(const FixtureStore& store) {
  Builder b("sa-lhs");
  const std::string ref_table = "Bredon homology table for p2, p4, p6";
  const std::string ref_h0 = "SA: stacked H0 induction matrix";
  b.check("table", "table ranks agree with the H0 induction matrix sizes", ref_table, [&] {
    const BredonInput in = sa_bredon_input(store);
    const bool ok = in.h0_into_a.rows() == in.factor_a.h0 && in.h0_into_b.rows() == in.factor_b.h0 &&
                    in.h0_into_a.cols() == in.common.h0 && in.h0_into_b.cols() == in.common.h0;
    return Outcome{ok, "8x5 and 9x5", dims(in.h0_into_a) + " and " + dims(in.h0_into_b)};
  });
  b.check("stack", "stacked matrix equals [p2->p4 ; -(p2->p6)]", ref_h0, [&] {
    const IntMatrix M = store.matrix("SA_LHS_H0");
    const BredonInput in = sa_bredon_input(store);
    return Outcome{M == vstack(in.h0_into_a, IntMatrix(-in.h0_into_b)), "equal", "17x5 " + dims(M)};
  });
  b.check("snf", "Smith normal form of the stacked H0 matrix", ref_h0, [&] {
    const IntMatrix M = store.matrix("SA_LHS_H0");
    const auto d = snf(M);
    const auto f = d.invariant_factors();
    const bool ok = snf_contract(M, d) && f == std::vector<Int>(4, Int(1));
    return Outcome{ok, ones(4), list_to_string(f) + (snf_contract(M, d) ? "" : " (contract violated)")};
  });
  b.check("h0", "H0 of the amalgam is free of rank 13 and H1 has rank 1", ref_h0, [&] {
    const IntMatrix M = store.matrix("SA_LHS_H0");
    const auto shape = cokernel(M).shape();
    const auto k = kernel_basis(M).size();
    return Outcome{shape == free_shape(13) && k == 1, "H0 = Z^13, H1 = Z",
                   "H0 = " + shape_to_string(shape) + ", H1 = " + shape_to_string(free_shape(k))};
  });
  b.check("h2", "degree-2 map (2,-3) gives H2 = Z and H3 = 0", "SA: degree-2 Mayer-Vietoris map", [&] {
    const BredonHomology h = bredon_mv(sa_bredon_input(store));
    const bool ok = h.h2.shape() == free_shape(1) && h.h3.shape() == free_shape(0);
    return Outcome{ok, "H2 = Z, H3 = 0", "H2 = " + shape_to_string(h.h2.shape()) + ", H3 = " + shape_to_string(h.h3.shape())};
  });
  b.check("mislin", "equivariant K-homology from the Bredon groups", "SA: left-hand side", [&] {
    const KRanks k = lhs_ranks(sa_bredon_input(store));
    return Outcome{k.k0 == free_shape(14) && k.k1 == free_shape(1), "K0 = Z^14, K1 = Z",
                   "K0 = " + shape_to_string(k.k0) + ", K1 = " + shape_to_string(k.k1)};
  });
  b.check("injectivity-p6", "p6 basis classes are independent and primitive in H0", "SA: injectivity of p6 -> SA on H0",
          [&] {
            const IntMatrix M = store.matrix("SA_LHS_H0");
            const BredonInput in = sa_bredon_input(store);
            IntMatrix E = IntMatrix::Zero(M.rows(), in.factor_b.h0);
            for (Eigen::Index i = 0; i < E.cols(); ++i) E(in.factor_a.h0 + i, i) = 1;
            const IntMatrix block = cokernel(M).quotient_map() * E;
            const bool ok = injectivity_check_p6(block);
            return Outcome{ok, "injective with invariant factors " + ones(E.cols()),
                           std::string(ok ? "injective" : "not injective") + ", invariant factors " +
                               list_to_string(invariant_factors(block))};
          });
  b.check("basis", "listed classes form a basis of H0", "SA: basis of H0", [&] {
    return basis_outcome(store.matrix("SA_LHS_H0"), store.basis_vectors("SA_LHS_BASIS"));
  });
  b.fixture("vertex-bases", "H0 bases of the vertex groups and their reduction relations are imported",
            ref_table, "imported vertex-group data");
  return b.take();
}

SuiteReport sa_rhs(const FixtureStore& store) {
  Builder b("sa-rhs");
  const std::string ref_proj = "projection bases of K0 for p2, p4, p6";
  for (const std::string g : {"p2", "p4", "p6"}) {
    b.check("projections-" + basis_id(g), "non-formal members of " + basis_id(g) + " are projections", ref_proj, [&] {
      return projections_outcome(store.projections(basis_id(g), wallpaper_group(g)));
    });
  }
  b.fixture("formal-classes", "F2, F4, F6 are formal K0 classes without group-ring realization", ref_proj,
            "formal symbols");
  b.check("witness-p4", "conjugacy (v,S^2) -> (u,S^2) in p4", "SA: conjugation of (1+vS^2)/2 to r", [&] {
    const WallpaperGroup W = wallpaper_group("p4");
    const WallElem g = parse_word(W, "veps"), h = parse_word(W, "ueps");
    const auto w = are_conjugate(W, g, h);
    const bool ok = w && *w * g * inverse(*w) == h;
    return Outcome{ok, "a verified witness", w ? "w = " + format_element(*w) : "none"};
  });
  b.check("witness-p6", "conjugacy (uv,R^3) -> (u,R^3) in p6", "SA: conjugation of (1+uvR^3)/2 to r", [&] {
    const WallpaperGroup W = wallpaper_group("p6");
    const WallElem g = parse_word(W, "uvR^3"), h = parse_word(W, "uR^3");
    const auto w = are_conjugate(W, g, h);
    const bool ok = w && *w * g * inverse(*w) == h;
    return Outcome{ok, "a verified witness", w ? "w = " + format_element(*w) : "none"};
  });
  for (const std::string g : {"p4", "p6"}) {
    const std::string id = g == "p4" ? "P2_TO_P4" : "P2_TO_P6";
    b.check("induction-" + g, "non-starred columns of p2 -> " + g + " derived from group-ring identities",
            "SA: induction p2 -> " + g, [&, g, id] {
              const WallpaperGroup W = wallpaper_group(g), p2 = wallpaper_group("p2");
              const KBasis src = store.projections("B2", p2), dst = store.projections(basis_id(g), W);
              const IntMatrix M = store.matrix(id);
              bool ok = true;
              std::string actual;
              for (std::size_t j = 0; j < src.size(); ++j) {
                if (src[j].formal()) continue;
                const auto col = derive_column(W, *src[j].projection, dst);
                const bool match = col && col->column == IntVector(M.col(static_cast<Eigen::Index>(j)));
                ok = ok && match;
                actual += (actual.empty() ? "" : "; ") + src[j].label + " " + (col ? col->how : "not derived") +
                          (match ? "" : " (mismatch)");
              }
              return Outcome{ok, "columns equal to the fixture", actual};
            });
  }
  b.check("starred-structure", "rows carrying the F2 images are (0,...,0,2) and (0,...,0,3)",
          "SA: starred columns of the induction matrices", [&] {
            const IntMatrix a = store.matrix("P2_TO_P4"), c = store.matrix("P2_TO_P6");
            IntVector ra = IntVector::Zero(6), rc = IntVector::Zero(6);
            ra(5) = 2;
            rc(5) = 3;
            bool ok = a.rows() == 9 && c.rows() == 10 && IntVector(a.row(8).transpose()) == ra &&
                      IntVector(c.row(9).transpose()) == rc;
            for (const auto& [i, j] : store.starred("P2_TO_P4")) ok = ok && a(i, j) == 0;
            for (const auto& [i, j] : store.starred("P2_TO_P6")) ok = ok && c(i, j) == 0;
            return Outcome{ok, "row 9 = (0,0,0,0,0,2), row 10 = (0,0,0,0,0,3), starred entries 0",
                           "row 9 = " + (a.rows() > 8 ? vec_str(a.row(8).transpose()) : "?") +
                               ", row 10 = " + (c.rows() > 9 ? vec_str(c.row(9).transpose()) : "?")};
          });
  b.check("stack", "stacked matrix equals [p2->p4 ; -(p2->p6)]", "SA: Pimsner boundary matrix", [&] {
    const IntMatrix M = store.matrix("SA_RHS_STACK");
    const bool ok = M == vstack(store.matrix("P2_TO_P4"), IntMatrix(-store.matrix("P2_TO_P6")));
    return Outcome{ok, "equal", dims(M)};
  });
  b.check("kernel", "kernel of the stacked 19x6 matrix", "SA: K1 generator of the boundary map", [&] {
    const auto k = kernel_basis(store.matrix("SA_RHS_STACK"));
    IntVector e(6);
    e << 0, 0, 1, -1, 0, 0;
    return Outcome{k.size() == 1 && k[0] == e, "(0,0,1,-1,0,0)", kernel_str(k)};
  });
  b.check("cokernel", "cokernel of the stacked 19x6 matrix", "SA: K0 of the crossed product", [&] {
    const auto s = cokernel(store.matrix("SA_RHS_STACK")).shape();
    return Outcome{s == free_shape(14), "Z^14", shape_to_string(s)};
  });
  b.check("starred-invariance", "random starred entries leave invariant factors and kernel unchanged",
          "SA: starred columns of the induction matrices", [&] {
            const IntMatrix a = store.matrix("P2_TO_P4"), c = store.matrix("P2_TO_P6");
            const IntMatrix base = vstack(a, IntMatrix(-c));
            const auto f0 = invariant_factors(base);
            const auto k0 = kernel_basis(base);
            int same = 0;
            for (unsigned seed = 1; seed <= 10; ++seed) {
              std::mt19937 rng(seed);
              std::uniform_int_distribution<int> dist(-5, 5);
              IntMatrix ra = a, rc = c;
              for (const auto& [i, j] : store.starred("P2_TO_P4")) ra(i, j) = dist(rng);
              for (const auto& [i, j] : store.starred("P2_TO_P6")) rc(i, j) = dist(rng);
              const IntMatrix m = vstack(ra, IntMatrix(-rc));
              if (invariant_factors(m) == f0 && kernel_basis(m) == k0) ++same;
            }
            return Outcome{same == 10, "10/10 seeds unchanged", std::to_string(same) + "/10 seeds unchanged"};
          });
  b.check("amalgam", "six-term sequence for the amalgam", "SA: right-hand side", [&] {
    const SequenceResult r = sa_rhs_sequence(store);
    return Outcome{r.k0.shape() == free_shape(14) && r.k1.shape() == free_shape(1), "K0 = Z^14, K1 = Z",
                   "K0 = " + shape_to_string(r.k0.shape()) + ", K1 = " + shape_to_string(r.k1.shape())};
  });
  b.check("survival-basis", "listed images of B6 and four p4 classes form a basis of K0", "SA: basis of K0", [&] {
    return basis_outcome(store.matrix("SA_RHS_STACK"), store.basis_vectors("SA_RHS_BASIS"));
  });
  b.fixture("starred-values", "F2 images (starred entries) are imported; only the diagonal entries are used",
            "SA: starred columns of the induction matrices", "2 in p4, 3 in p6");
  return b.take();
}

SuiteReport ga_lhs(const FixtureStore& store) {
  Builder b("ga-lhs");
  const std::string ref_h0 = "GA: stacked H0 induction matrix";
  b.check("table", "table ranks agree with the H0 induction matrix sizes", "Bredon homology table for cmm, p4m, p6m", [&] {
    const BredonInput in = ga_bredon_input(store);
    const bool ok = in.h0_into_a.rows() == in.factor_a.h0 && in.h0_into_b.rows() == in.factor_b.h0 &&
                    in.h0_into_a.cols() == in.common.h0 && in.h0_into_b.cols() == in.common.h0 &&
                    in.factor_a.h2 == 0 && in.factor_b.h2 == 0 && in.common.h2 == 0;
    return Outcome{ok, "9x6 and 8x6, H1 = H2 = 0", dims(in.h0_into_a) + " and " + dims(in.h0_into_b)};
  });
  b.check("stack", "stacked matrix equals [cmm->p4m ; -(cmm->p6m)]", ref_h0, [&] {
    const IntMatrix M = store.matrix("GA_LHS_H0");
    const BredonInput in = ga_bredon_input(store);
    return Outcome{M == vstack(in.h0_into_a, IntMatrix(-in.h0_into_b)), "equal", dims(M)};
  });
  b.check("snf", "Smith normal form of the stacked H0 matrix", ref_h0, [&] {
    const IntMatrix M = store.matrix("GA_LHS_H0");
    const auto d = snf(M);
    const auto f = d.invariant_factors();
    return Outcome{snf_contract(M, d) && f == std::vector<Int>(6, Int(1)), ones(6), list_to_string(f)};
  });
  b.check("h0", "H0 of the amalgam is free of rank 11 and H1 vanishes", ref_h0, [&] {
    const BredonHomology h = bredon_mv(ga_bredon_input(store));
    const bool ok = h.h0.shape() == free_shape(11) && h.h1.shape() == free_shape(0);
    return Outcome{ok, "H0 = Z^11, H1 = 0", "H0 = " + shape_to_string(h.h0.shape()) + ", H1 = " + shape_to_string(h.h1.shape())};
  });
  b.check("mislin", "equivariant K-homology from the Bredon groups", "GA: left-hand side", [&] {
    const KRanks k = lhs_ranks(ga_bredon_input(store));
    return Outcome{k.k0 == free_shape(11) && k.k1 == free_shape(0), "K0 = Z^11, K1 = 0",
                   "K0 = " + shape_to_string(k.k0) + ", K1 = " + shape_to_string(k.k1)};
  });
  b.check("basis", "listed classes form a basis of H0", "GA: basis of H0", [&] {
    return basis_outcome(store.matrix("GA_LHS_H0"), store.basis_vectors("GA_LHS_BASIS"));
  });
  b.fixture("vertex-bases", "H0 bases of the vertex groups and their reduction relations are imported",
            "Bredon homology table for cmm, p4m, p6m", "imported vertex-group data");
  return b.take();
}

SuiteReport ga_rhs(const FixtureStore& store) {
  Builder b("ga-rhs");
  for (const std::string g : {"cmm", "p4m", "p6m"}) {
    const std::string sfx = fixture_suffix(g);
    b.check("maxfin-" + g, "maximal finite subgroups: closed, of the stated type, pairwise non-conjugate",
            g + ": maximal finite subgroups", [&, g, sfx] {
              const WallpaperGroup W = wallpaper_group(g);
              const auto subs = store.maximal_finite("MAXFIN_" + sfx, W);
              const auto pts = store.fixed_points("MAXFIN_" + sfx);
              bool ok = true;
              std::string actual;
              for (std::size_t i = 0; i < subs.size(); ++i) {
                const SubgroupCheck c = check_finite_subgroup(W, subs[i]);
                ok = ok && c.closed && c.type_matches;
                actual += (i ? "; " : "") + (c.closed ? c.computed_type : std::string("not closed"));
                if (pts[i]) {
                  Rational x(0), y(0);
                  for (const auto& h : subs[i].elements) {
                    x += Rational(h.t(0));
                    y += Rational(h.t(1));
                  }
                  const Rational n(static_cast<long long>(subs[i].elements.size()));
                  const bool fixed = x / n == pts[i]->first && y / n == pts[i]->second;
                  ok = ok && fixed;
                  actual += std::string(" fixing (") + (x / n).str() + "," + (y / n).str() + ")";
                }
                for (std::size_t j = 0; j < i; ++j)
                  if (subgroups_conjugate(W, subs[j], subs[i])) {
                    ok = false;
                    actual += " conjugate to #" + std::to_string(j + 1);
                  }
              }
              return Outcome{ok, "all listed subgroups valid and pairwise non-conjugate", actual};
            });
    b.check("torsion-" + g, "torsion class representatives: pairwise non-conjugate and complete",
            g + ": conjugacy classes of finite-order elements", [&, g, sfx] {
              const WallpaperGroup W = wallpaper_group(g);
              const auto reps = store.torsion("TORSION_" + sfx, W);
              const TorsionCertificate c = certify_torsion_reps(W, reps);
              const auto found = torsion_class_reps(W);
              const bool ok = c.pairwise_non_conjugate && c.complete && found.size() == reps.size();
              return Outcome{ok, std::to_string(reps.size()) + " classes",
                             std::to_string(found.size()) + " classes found by search; listed reps " +
                                 (c.pairwise_non_conjugate ? "non-conjugate" : "not pairwise non-conjugate") + ", " +
                                 (c.complete ? "complete" : "incomplete") + " over " + std::to_string(c.searched) +
                                 " elements"};
            });
    b.check("coords-" + g, "computed K0 coordinate matrix equals the reference matrix after the row permutation",
            g + ": coordinate matrix of the basis", [&, g, sfx] {
              const CoordinateResult c = basis_coordinates(store, g);
              const IntMatrix reference = store.matrix("COORDS_" + sfx);
              const bool same_shape = reference.rows() == c.permuted.rows() && reference.cols() == c.permuted.cols();
              std::string diff;
              if (same_shape)
                for (Eigen::Index i = 0; i < reference.rows(); ++i)
                  if (reference.row(i) != c.permuted.row(i))
                    diff += " row " + std::to_string(i + 1) + ": reference " + vec_str(reference.row(i).transpose()) +
                            " computed " + vec_str(c.permuted.row(i).transpose()) + ";";
              return Outcome{same_shape && diff.empty(), "equal (" + dims(reference) + ")",
                             same_shape ? (diff.empty() ? "equal" : "differs:" + diff) : "shape " + dims(c.permuted)};
            });
    b.check("coords-snf-" + g, "coordinate matrices have all invariant factors 1",
            g + ": coordinate matrix of the basis", [&, g, sfx] {
              const CoordinateResult c = basis_coordinates(store, g);
              const IntMatrix reference = store.matrix("COORDS_" + sfx);
              const auto fc = invariant_factors(c.computed), fs = invariant_factors(reference);
              const bool ok = all_ones(fc, c.computed.cols()) && all_ones(fs, reference.cols());
              return Outcome{ok, ones(c.computed.cols()) + " for computed and reference",
                             "computed " + list_to_string(fc) + ", reference " + list_to_string(fs)};
            });
  }
  for (const std::string g : {"p4m", "p6m"}) {
    const std::string id = g == "p4m" ? "IOTA24" : "IOTA26";
    b.check("reconstruct-" + g, "cmm -> " + g + " matrix rebuilt from group-ring images of the cmm basis",
            "GA: induction cmm -> " + g, [&, g, id] {
              const IntMatrix rebuilt = reconstruct_iota(store, g);
              const IntMatrix shown = store.matrix(id);
              return Outcome{rebuilt == shown, "equal to " + id, rebuilt == shown ? "equal" : matrix_to_text("rebuilt", rebuilt)};
            });
  }
  b.check("rank-iota", "ranks of the two induction matrices", "GA: induction matrices", [&] {
    const auto a = rank(store.matrix("IOTA24")), c = rank(store.matrix("IOTA26"));
    return Outcome{a == 5 && c == 5, "5 and 5", std::to_string(a) + " and " + std::to_string(c)};
  });
  b.check("kernel-iota26", "kernel of cmm -> p6m", "GA: induction cmm -> p6m", [&] {
    const auto k = kernel_basis(store.matrix("IOTA26"));
    IntVector e(6);
    e << 1, -1, 0, 0, -2, 1;
    return Outcome{k.size() == 1 && k[0] == e, "(1,-1,0,0,-2,1)", kernel_str(k)};
  });
  b.check("amalgam", "six-term sequence for the amalgam", "GA: right-hand side", [&] {
    const SequenceResult r = ga_rhs_sequence(store, true);
    return Outcome{r.k0.shape() == free_shape(11) && r.k1.shape() == free_shape(0), "K0 = Z^11, K1 = 0",
                   "K0 = " + shape_to_string(r.k0.shape()) + ", K1 = " + shape_to_string(r.k1.shape())};
  });
  b.check("survival-basis", "p1..p6, p8, p9, p14, p15, p16 form a basis of K0", "GA: basis of K0", [&] {
    return basis_outcome(ga_rhs_sequence(store, false).connecting, store.basis_vectors("GA_RHS_BASIS"));
  });
  return b.take();
}

SuiteReport gamma2_lhs_suite(const FixtureStore& store) {
  Builder b("gamma2-lhs");
  b.check("e2-page", "second page of the spectral sequence", "Gamma(2): spectral sequence", [&] {
    const SpectralPage p = gamma2_lhs(store);
    std::string actual;
    for (int q = 0; q < 3; ++q)
      for (int pp = 0; pp < 2; ++pp)
        actual += "E" + std::to_string(pp) + std::to_string(q) + "=" + std::to_string(p.e2[pp][q]) + " ";
    const bool ok = p.e2[0][0] == 5 && p.e2[1][0] == 10 && p.e2[0][1] == 0 && p.e2[1][1] == 0 &&
                    p.e2[0][2] == 1 && p.e2[1][2] == 2;
    return Outcome{ok, "E00=5 E10=10 E01=0 E11=0 E02=1 E12=2", actual.substr(0, actual.size() - 1)};
  });
  b.check("k-groups", "equivariant K-homology", "Gamma(2): left-hand side", [&] {
    const SpectralPage p = gamma2_lhs(store);
    return Outcome{p.k0 == 6 && p.k1 == 12, "K0 = Z^6, K1 = Z^12",
                   "K0 = " + shape_to_string(free_shape(p.k0)) + ", K1 = " + shape_to_string(free_shape(p.k1))};
  });
  return b.take();
}

SuiteReport gamma2_rhs_suite(const FixtureStore& store) {
  Builder b("gamma2-rhs");
  try {
    for (const ActionCheck& c : gamma2_actions(store)) {
      const std::string id = "action-" + c.generator + "-" + c.symbol;
      const std::string ref = "Gamma(2): trivial action on K0 of p2";
      if (c.status == CheckStatus::Fixture) {
        b.fixture(id, c.generator + " fixes the formal class " + c.symbol, ref, "imported triviality");
        continue;
      }
      b.check(id, c.generator + " maps " + c.symbol + " to a conjugate of itself", ref, [&] {
        return Outcome{c.status == CheckStatus::Pass, "a verified witness",
                       c.witness ? "w = " + format_element(*c.witness) : "no witness"};
      });
    }
  } catch (const std::exception&) {
    b.check("actions", "action of the Gamma(2) generators on K0 of p2", "Gamma(2): trivial action on K0 of p2",
            [&]() -> Outcome { gamma2_actions(store); return {}; });
  }
  b.check("pv", "Pimsner-Voiculescu sequence for the free group", "Gamma(2): right-hand side", [&] {
    const auto r = gamma2_rhs(store);
    if (!r) return Outcome{false, "K0 = Z^6, K1 = Z^12", "action not shown to be trivial"};
    return Outcome{r->k0.shape() == free_shape(6) && r->k1.shape() == free_shape(12), "K0 = Z^6, K1 = Z^12",
                   "K0 = " + shape_to_string(r->k0.shape()) + ", K1 = " + shape_to_string(r->k1.shape())};
  });
  return b.take();
}

SuiteReport wallpaper_bases(const FixtureStore& store) {
  Builder b("wallpaper-bases");
  for (const std::string g : {"cmm", "p4m", "p6m"}) {
    b.check("projections-" + basis_id(g), "members of " + basis_id(g) + " are projections",
            g + ": projection basis", [&, g] { return projections_outcome(store.projections(basis_id(g), wallpaper_group(g))); });
    b.check("minimal-projections-" + g, "minimal projections of every maximal finite subgroup and irrep",
            g + ": minimal projections", [&, g] {
              const WallpaperGroup W = wallpaper_group(g);
              int total = 0, ok = 0;
              for (const auto& H : store.maximal_finite("MAXFIN_" + fixture_suffix(g), W)) {
                std::vector<Mat2> pts;
                for (const auto& h : H.elements) pts.push_back(h.A);
                const auto table = character_table(subgroup(W.point_group, pts));
                for (const auto& rho : table.irreps) {
                  ++total;
                  if (is_projection(minimal_projection(W, H.elements, rho.index))) ++ok;
                }
              }
              return Outcome{ok == total, "all idempotent and self-adjoint", std::to_string(ok) + "/" + std::to_string(total)};
            });
    b.check("rank-trace-" + g, "evaluated basis projections have rank equal to trace", g + ": evaluation maps",
            [&, g] {
              const WallpaperGroup W = wallpaper_group(g);
              const RowPermutation perm = store.permutation("PERM_" + g);
              int total = 0, ok = 0;
              for (const auto& x : realized(store.projections(basis_id(g), W)))
                for (const auto& theta : perm.points) {
                  const OrbitRep orb = orbit_of(W, theta);
                  for (const auto& rho : orb.stabilizer_table.irreps) {
                    const CycloMatrix E = evaluate(x, orb, rho.index);
                    ++total;
                    const Cyclo t = trace(E);
                    if (E * E == E && t.is_rational() && t == Cyclo(Rational(static_cast<long long>(field_rank(E))))) ++ok;
                  }
                }
              return Outcome{ok == total, "all evaluations idempotent with rank = trace",
                             std::to_string(ok) + "/" + std::to_string(total)};
            });
  }
  b.check("minimal-cmm-p1", "trivial minimal projection of {e,r,s,rs} is p1", "cmm: projection basis", [&] {
    const WallpaperGroup W = wallpaper_group("cmm");
    const auto H = store.maximal_finite("MAXFIN_CMM", W).at(0);
    const auto p1 = *store.projections("BCMM", W).at(0).projection;
    return Outcome{minimal_projection(W, H.elements, 0) == p1, "equal", minimal_projection(W, H.elements, 0) == p1 ? "equal" : "differs"};
  });
  b.check("minimal-p6m-p7", "trivial minimal projection of the D3 subgroup is p7", "p6m: projection basis", [&] {
    const WallpaperGroup W = wallpaper_group("p6m");
    const auto H = store.maximal_finite("MAXFIN_P6M", W).at(1);
    const auto p7 = *store.projections("BP6M", W).at(6).projection;
    const bool ok = minimal_projection(W, H.elements, 0) == p7;
    return Outcome{ok, "equal", ok ? "equal" : "differs"};
  });
  b.check("minimal-p6m-2d", "2-dimensional irreps of D6 give the classes of p5 and p6", "p6m: projection basis", [&] {
    const WallpaperGroup W = wallpaper_group("p6m");
    const RowPermutation perm = store.permutation("PERM_p6m");
    const auto H = store.maximal_finite("MAXFIN_P6M", W).at(0);
    const KBasis basis = store.projections("BP6M", W);
    std::vector<IntVector> listed{k0_coordinates(W, *basis.at(4).projection, perm.points),
                                  k0_coordinates(W, *basis.at(5).projection, perm.points)};
    std::vector<IntVector> minimal{k0_coordinates(W, minimal_projection(W, H.elements, 4), perm.points),
                                   k0_coordinates(W, minimal_projection(W, H.elements, 5), perm.points)};
    const bool ok = (listed[0] == minimal[0] && listed[1] == minimal[1]) || (listed[0] == minimal[1] && listed[1] == minimal[0]);
    return Outcome{ok, "same K0 coordinates", "listed " + vec_str(listed[0]) + " " + vec_str(listed[1]) + ", minimal " +
                                                   vec_str(minimal[0]) + " " + vec_str(minimal[1])};
  });
  return b.take();
}

SuiteReport summary(const FixtureStore& store) {
  Builder b("summary");
  const std::string ref = "summary table of K-groups";
  auto row = [&](const std::string& group) {
    for (const auto& r : store.summary("SUMMARY"))
      if (r.group == group) return r;
    throw std::invalid_argument("summary fixture has no row for " + group);
  };
  auto outcome = [](const SummaryRow& want, long long l0, long long l1, long long r0, long long r1) {
    const bool ok = l0 == r0 && l1 == r1 && l0 == want.k0 && l1 == want.k1;
    return Outcome{ok, std::to_string(want.k0) + "/" + std::to_string(want.k1),
                   "LHS " + std::to_string(l0) + "/" + std::to_string(l1) + ", RHS " + std::to_string(r0) + "/" +
                       std::to_string(r1)};
  };
  b.check("SA", "LHS and RHS ranks agree with the table", ref, [&] {
    const KRanks l = lhs_ranks(sa_bredon_input(store));
    const SequenceResult r = sa_rhs_sequence(store);
    if (!l.k0.is_free() || !r.k0.shape().is_free()) return Outcome{false, "free groups", "torsion present"};
    return outcome(row("SA"), l.k0.free_rank, l.k1.free_rank, r.k0.shape().free_rank, r.k1.shape().free_rank);
  });
  b.check("GA", "LHS and RHS ranks agree with the table", ref, [&] {
    const KRanks l = lhs_ranks(ga_bredon_input(store));
    const SequenceResult r = ga_rhs_sequence(store, true);
    if (!l.k0.is_free() || !r.k0.shape().is_free()) return Outcome{false, "free groups", "torsion present"};
    return outcome(row("GA"), l.k0.free_rank, l.k1.free_rank, r.k0.shape().free_rank, r.k1.shape().free_rank);
  });
  b.check("Gamma2", "LHS and RHS ranks agree with the table", ref, [&] {
    const SpectralPage l = gamma2_lhs(store);
    const auto r = gamma2_rhs(store);
    if (!r) return Outcome{false, "trivial action", "action not shown to be trivial"};
    return outcome(row("Gamma2"), l.k0, l.k1, r->k0.shape().free_rank, r->k1.shape().free_rank);
  });
  return b.take();
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Fixture: return "FIXTURE";
  }
  return "FAIL";
}

bool SuiteReport::passed() const {
  return count(Status::Fail) == 0;
}

int SuiteReport::count(Status s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; }));
}

const Check* SuiteReport::find(const std::string& id) const {
  for (const Check& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"sa-lhs", "sa-rhs", "ga-lhs", "ga-rhs", "gamma2-lhs",
                                              "gamma2-rhs", "wallpaper-bases", "summary", "all"};
  return names;
}

SuiteReport run_suite(const std::string& name, const FixtureStore& store) {
  if (name == "sa-lhs") return sa_lhs(store);
  if (name == "sa-rhs") return sa_rhs(store);
  if (name == "ga-lhs") return ga_lhs(store);
  if (name == "ga-rhs") return ga_rhs(store);
  if (name == "gamma2-lhs") return gamma2_lhs_suite(store);
  if (name == "gamma2-rhs") return gamma2_rhs_suite(store);
  if (name == "wallpaper-bases") return wallpaper_bases(store);
  if (name == "summary") return summary(store);
  if (name == "all") {
    SuiteReport all{"all", {}};
    for (const std::string& s : suite_names()) {
      if (s == "all") continue;
      const SuiteReport r = run_suite(s, store);
      all.checks.insert(all.checks.end(), r.checks.begin(), r.checks.end());
    }
    return all;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

json report_to_json(const SuiteReport& report) {
  json checks = json::array();
  for (const Check& c : report.checks)
    checks.push_back({{"id", c.id},
                      {"description", c.description},
                      {"status", status_name(c.status)},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"ref", c.ref}});
  return json{{"suite", report.suite},
              {"checks", checks},
              {"totals",
               {{"PASS", report.count(Status::Pass)},
                {"FAIL", report.count(Status::Fail)},
                {"FIXTURE", report.count(Status::Fixture)}}}};
}

std::string report_to_text(const SuiteReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << '\n';
  for (const Check& c : report.checks) {
    os << "[" << status_name(c.status) << "] " << c.id << ": " << c.description << '\n';
    os << "    expected: " << c.expected << '\n';
    os << "    actual:   " << c.actual << '\n';
    os << "    ref:      " << c.ref << '\n';
  }
  os << report.count(Status::Pass) << " passed, " << report.count(Status::Fail) << " failed, "
     << report.count(Status::Fixture) << " imported\n";
  return os.str();
}

CoordinateResult basis_coordinates(const FixtureStore& store, const std::string& group) {
  const WallpaperGroup W = wallpaper_group(group);
  const RowPermutation perm = store.permutation("PERM_" + group);
  if (perm.group != group) throw FixtureError("PERM_" + group, "group mismatch");
  const KBasis basis = store.projections(perm.basis, W);
  CoordinateResult out;
  out.computed = coordinate_matrix(W, realized(basis), perm.points);
  for (const auto& l : coordinate_labels(W, perm.points)) out.row_labels.push_back(l.text);
  out.col_labels = symbol_labels(basis);
  if (static_cast<Eigen::Index>(perm.rows.size()) != out.computed.rows())
    throw FixtureError("PERM_" + group, "permutation length does not match the coordinate rows");
  out.permuted = IntMatrix(out.computed.rows(), out.computed.cols());
  for (std::size_t i = 0; i < perm.rows.size(); ++i)
    out.permuted.row(static_cast<Eigen::Index>(i)) = out.computed.row(perm.rows[i]);
  return out;
}

IntMatrix reconstruct_iota(const FixtureStore& store, const std::string& target) {
  const WallpaperGroup src = wallpaper_group("cmm"), W = wallpaper_group(target);
  const RowPermutation perm = store.permutation("PERM_" + target);
  const std::vector<GroupAlgElem> basis = realized(store.projections(perm.basis, W));
  std::vector<IntVector> cols;
  // The cmm point group {+-I, +-s} sits inside both target point groups,
  // so the inclusion is the identity on group elements.
  for (const auto& x : realized(store.projections("BCMM", src))) {
    for (const auto& [g, c] : x.support())
      if (!W.contains(g)) throw std::logic_error("cmm element outside " + target);
    const auto col = express_in_basis(W, x, basis, perm.points);
    if (!col) throw std::runtime_error("image of a cmm projection has no integer coordinates in " + target);
    cols.push_back(*col);
  }
  return columns_to_matrix(cols, static_cast<Eigen::Index>(basis.size()));
}

const std::vector<std::string>& computed_ids() {
  static const std::vector<std::string> ids{"COORDS_CMM_COMPUTED", "COORDS_P4M_COMPUTED", "COORDS_P6M_COMPUTED",
                                            "IOTA24_COMPUTED",     "IOTA26_COMPUTED",     "CHARTABLE_p2",
                                            "CHARTABLE_p4",        "CHARTABLE_p6",        "CHARTABLE_cmm",
                                            "CHARTABLE_p4m",       "CHARTABLE_p6m"};
  return ids;
}

DumpOutput dump(const std::string& id, const FixtureStore& store) {
  if (id.rfind("COORDS_", 0) == 0 && id.size() > 16 && id.substr(id.size() - 9) == "_COMPUTED") {
    std::string g = id.substr(7, id.size() - 16);
    std::transform(g.begin(), g.end(), g.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    const CoordinateResult c = basis_coordinates(store, g);
    return {matrix_to_json(id, c.computed, c.row_labels, c.col_labels),
            matrix_to_text(id, c.computed, c.row_labels, c.col_labels)};
  }
  if (id == "IOTA24_COMPUTED" || id == "IOTA26_COMPUTED") {
    const std::string target = id == "IOTA24_COMPUTED" ? "p4m" : "p6m";
    const IntMatrix M = reconstruct_iota(store, target);
    const auto rows = symbol_labels(store.projections(basis_id(target), wallpaper_group(target)));
    const auto cols = symbol_labels(store.projections("BCMM", wallpaper_group("cmm")));
    return {matrix_to_json(id, M, rows, cols), matrix_to_text(id, M, rows, cols)};
  }
  if (id.rfind("CHARTABLE_", 0) == 0) {
    const CharacterTable t = character_table(wallpaper_group(id.substr(10)).point_group);
    return {character_table_to_json(t), character_table_to_text(t)};
  }
  if (!store.has(id)) throw std::invalid_argument("unknown id: " + id);
  const json j = store.raw(id);
  if (j.contains("entries")) {
    const IntMatrix M = store.matrix(id);
    return {j, matrix_to_text(id, M)};
  }
  return {j, j.dump(1) + "\n"};
}

}  // namespace bcwork
