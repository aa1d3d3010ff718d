#pragma once

#include <string>
#include <vector>

namespace bcwork::properties {

struct Result {
  std::string name;
  bool passed = false;
  std::string detail;
};

// U M V == S, unimodular U and V, divisibility chain; random integer matrices.
Result snf_contract(int trials = 200, unsigned seed = 7);
// <Ind chi, psi>_G == <chi, Res psi>_H over all irrep pairs for the standard inclusions.
Result frobenius_reciprocity();
// ev(xy) == ev(x) ev(y) for random group-ring elements at special and generic points.
Result evaluation_multiplicative(int pairs = 100, unsigned seed = 11);
// ev(x*) == ev(x)^*.
Result evaluation_star(int trials = 50, unsigned seed = 13);
// Evaluations of basis projections are idempotent with rank equal to trace.
Result rank_equals_trace();
// K0 coordinates of basis projections are unchanged by conjugation.
Result conjugation_invariance(unsigned seed = 17);

std::vector<Result> all();

}  // namespace bcwork::properties
