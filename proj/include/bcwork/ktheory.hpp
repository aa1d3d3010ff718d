#pragma once

#include "bcwork/linalg.hpp"
#include "bcwork/wallpaper.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bcwork {

// A basis label of K_0 of a group algebra: either a verified projection
// or a formal class with no group-ring realization.
struct KSymbol {
  std::string label;
  std::optional<GroupAlgElem> projection;

  bool formal() const { return !projection.has_value(); }
};
using KBasis = std::vector<KSymbol>;

struct KGroup {
  FreeAbPresentation presentation;
  std::vector<std::string> basis;  // generator labels of the presentation

  AbelianGroupShape shape() const { return presentation.shape(); }
};

struct SequenceResult {
  KGroup k0;
  KGroup k1;
  IntMatrix connecting;            // the map whose kernel and cokernel give K_1 and K_0
  std::vector<IntVector> kernel;   // canonical kernel basis of `connecting`
  std::vector<std::string> provenance;
};

// K_0 = coker [mA; -mB], K_1 = ker [mA; -mB], assuming K_1 of the factors vanishes.
SequenceResult amalgam_sequence(const IntMatrix& mA, const IntMatrix& mB, const std::vector<std::string>& basisA,
                                const std::vector<std::string>& basisB);

// True iff the given vectors (columns) form a basis of the free cokernel.
bool verify_survival_basis(const SequenceResult& r, const IntMatrix& vectors);

struct BredonRanks {
  std::string group;
  int h0 = 0, h1 = 0, h2 = 0;
};

struct BredonInput {
  // H_0 maps from the common subgroup into the two factors.
  IntMatrix h0_into_a, h0_into_b;
  // Degree-2 map from H_2 of the common subgroup into H_2(A) + H_2(B); optional.
  std::optional<IntMatrix> h2_map;
  BredonRanks factor_a, factor_b, common;
};

struct BredonHomology {
  FreeAbPresentation h0, h1, h2, h3;
};

// Throws std::invalid_argument when matrix sizes disagree with the ranks.
BredonHomology bredon_mv(const BredonInput& in);

struct KRanks {
  AbelianGroupShape k0, k1;
};

// 0 -> H1 -> K1 -> H3 -> H0 -> K0 -> H2 -> 0, split for torsion-free input
// with H3 -> H0 zero; torsion input is rejected.
KRanks mislin_assemble(const FreeAbPresentation& h0, const FreeAbPresentation& h1, const FreeAbPresentation& h2,
                       const FreeAbPresentation& h3);

// Crossed product by a free group with vanishing K_1 of the coefficients:
// beta = [I - alpha_1 | ... | I - alpha_n], K_0 = coker, K_1 = ker.
SequenceResult pv_free_group(const std::vector<IntMatrix>& actions, Eigen::Index k0_rank);

struct SpectralPage {
  // rank of E^2_{p,q}, p in {0,1}, q = 0..2
  std::vector<std::vector<long long>> e2;
  long long k0 = 0, k1 = 0;
};

// E^2_{p,q} = H_p(S) (x) H_q for a free group S; the page collapses because
// S has cohomological dimension one.
SpectralPage martinez_gamma2(const std::vector<long long>& bredon_ranks, const std::vector<long long>& free_group_ranks);

// True iff the block has full column rank and all invariant factors 1.
bool injectivity_check_p6(const IntMatrix& block);

enum class CheckStatus { Pass, Fail, Fixture };

struct ActionCheck {
  std::string symbol;
  std::string generator;
  CheckStatus status = CheckStatus::Fail;
  std::optional<WallElem> witness;
};

// For every projection-backed symbol x and every generator alpha, looks for
// w with w (alpha . x) w^-1 == x. Formal symbols are reported as Fixture.
std::vector<ActionCheck> verify_gamma2_action(const WallpaperGroup& p2, const KBasis& basis,
                                              const std::vector<std::pair<std::string, Mat2>>& generators);

}  // namespace bcwork
