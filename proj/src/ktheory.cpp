#include "bcwork/ktheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcwork {

namespace {

void require_free(const FreeAbPresentation& p, const char* name) {
  if (!p.shape().is_free()) throw std::invalid_argument(std::string("mislin_assemble: ") + name + " has torsion");
}

std::vector<std::string> kernel_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("ker" + std::to_string(i + 1));
  return out;
}

}  // namespace

SequenceResult amalgam_sequence(const IntMatrix& mA, const IntMatrix& mB, const std::vector<std::string>& basisA,
                                const std::vector<std::string>& basisB) {
  if (mA.cols() != mB.cols()) throw std::invalid_argument("amalgam_sequence: factors have different sources");
  if (static_cast<Eigen::Index>(basisA.size()) != mA.rows() || static_cast<Eigen::Index>(basisB.size()) != mB.rows())
    throw std::invalid_argument("amalgam_sequence: basis labels do not match matrix rows");
  SequenceResult r;
  r.connecting = vstack(mA, IntMatrix(-mB));
  r.kernel = kernel_basis(r.connecting);
  r.k0.presentation = cokernel(r.connecting);
  r.k0.basis = basisA;
  r.k0.basis.insert(r.k0.basis.end(), basisB.begin(), basisB.end());
  r.k1.presentation = free_group_of_rank(static_cast<Eigen::Index>(r.kernel.size()));
  r.k1.basis = kernel_labels(r.kernel.size());
  r.provenance = {"K0 = coker [iA; -iB]", "K1 = ker [iA; -iB] (K1 of the factors vanishes)"};
  return r;
}

bool verify_survival_basis(const SequenceResult& r, const IntMatrix& vectors) {
  return is_cokernel_basis(r.connecting, vectors);
}

BredonHomology bredon_mv(const BredonInput& in) {
  const auto check = [](bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("bredon_mv: " + what);
  };
  check(in.h0_into_a.rows() == in.factor_a.h0 && in.h0_into_b.rows() == in.factor_b.h0, "H0 target ranks");
  check(in.h0_into_a.cols() == in.common.h0 && in.h0_into_b.cols() == in.common.h0, "H0 source rank");
  check(in.factor_a.h1 == 0 && in.factor_b.h1 == 0, "factor H1 must vanish");

  BredonHomology out;
  const IntMatrix h0 = vstack(in.h0_into_a, IntMatrix(-in.h0_into_b));
  out.h0 = cokernel(h0);
  const Eigen::Index h1_rank = static_cast<Eigen::Index>(kernel_basis(h0).size());
  check(in.common.h1 == 0, "common subgroup H1 must vanish");
  if (in.h2_map) {
    check(in.h2_map->rows() == in.factor_a.h2 + in.factor_b.h2 && in.h2_map->cols() == in.common.h2, "H2 map size");
    out.h2 = cokernel(*in.h2_map);
    out.h3 = free_group_of_rank(static_cast<Eigen::Index>(kernel_basis(*in.h2_map).size()));
  } else {
    check(in.factor_a.h2 == 0 && in.factor_b.h2 == 0 && in.common.h2 == 0, "H2 map required for nonzero H2");
    out.h2 = free_group_of_rank(0);
    out.h3 = free_group_of_rank(0);
  }
  out.h1 = free_group_of_rank(h1_rank);
  return out;
}

KRanks mislin_assemble(const FreeAbPresentation& h0, const FreeAbPresentation& h1, const FreeAbPresentation& h2,
                       const FreeAbPresentation& h3) {
  require_free(h0, "H0");
  require_free(h1, "H1");
  require_free(h2, "H2");
  require_free(h3, "H3");
  KRanks k;
  k.k0.free_rank = h0.shape().free_rank + h2.shape().free_rank;
  k.k1.free_rank = h1.shape().free_rank + h3.shape().free_rank;
  return k;
}

SequenceResult pv_free_group(const std::vector<IntMatrix>& actions, Eigen::Index k0_rank) {
  IntMatrix beta(k0_rank, 0);
  for (const IntMatrix& a : actions) {
    if (a.rows() != k0_rank || a.cols() != k0_rank) throw std::invalid_argument("pv_free_group: action not square");
    beta = hstack(beta, IntMatrix(identity<Int>(k0_rank) - a));
  }
  SequenceResult r;
  r.connecting = beta;
  r.kernel = kernel_basis(beta);
  r.k0.presentation = cokernel(beta);
  for (Eigen::Index i = 0; i < k0_rank; ++i) r.k0.basis.push_back("b" + std::to_string(i + 1));
  r.k1.presentation = free_group_of_rank(static_cast<Eigen::Index>(r.kernel.size()));
  r.k1.basis = kernel_labels(r.kernel.size());
  r.provenance = {"K0 = coker beta", "K1 = ker beta (K1 of the coefficients vanishes)"};
  return r;
}

SpectralPage martinez_gamma2(const std::vector<long long>& bredon_ranks, const std::vector<long long>& free_group_ranks) {
  if (bredon_ranks.size() != 3 || free_group_ranks.size() != 2)
    throw std::invalid_argument("martinez_gamma2: expects Bredon ranks in degrees 0..2 and free-group ranks in 0..1");
  if (bredon_ranks[1] != 0) throw std::invalid_argument("martinez_gamma2: nonzero H1 is outside the validated pattern");
  SpectralPage page;
  page.e2.assign(2, std::vector<long long>(3, 0));
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 3; ++q) {
      page.e2[p][q] = free_group_ranks[p] * bredon_ranks[q];
      ((p + q) % 2 == 0 ? page.k0 : page.k1) += page.e2[p][q];
    }
  return page;
}

bool injectivity_check_p6(const IntMatrix& block) {
  const auto factors = invariant_factors(block);
  return static_cast<Eigen::Index>(factors.size()) == block.cols() &&
         std::all_of(factors.begin(), factors.end(), [](const Int& f) { return f == 1; });
}

std::vector<ActionCheck> verify_gamma2_action(const WallpaperGroup& p2, const KBasis& basis,
                                              const std::vector<std::pair<std::string, Mat2>>& generators) {
  std::vector<ActionCheck> out;
  for (const KSymbol& sym : basis)
    for (const auto& [gname, alpha] : generators) {
      ActionCheck c{sym.label, gname, CheckStatus::Fixture, std::nullopt};
      if (!sym.formal()) {
        const GroupAlgElem pushed = push_forward(*sym.projection, alpha);
        c.witness = find_conjugator(p2, pushed, *sym.projection);
        c.status = c.witness ? CheckStatus::Pass : CheckStatus::Fail;
      }
      out.push_back(std::move(c));
    }
  return out;
}

}  // namespace bcwork
