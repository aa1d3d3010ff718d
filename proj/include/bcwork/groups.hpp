#pragma once

#include "bcwork/cyclo.hpp"
#include "bcwork/linalg.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace bcwork {

using Mat2 = Eigen::Matrix2i;
using Vec2 = Eigen::Vector2i;

// Canonical total order on 2x2 integer matrices: row-major lexicographic.
bool mat_less(const Mat2& a, const Mat2& b);
int mat_det(const Mat2& A);
// Inverse of a determinant +-1 matrix.
Mat2 mat_inverse(const Mat2& A);
Mat2 mat_pow(const Mat2& A, long long k);
// Multiplicative order, or 0 when it exceeds the crystallographic bound.
int mat_order(const Mat2& A);

struct FiniteMatrixGroup {
  std::string name;
  std::vector<Mat2> generators;
  std::vector<Mat2> elements;  // canonical order, identity included

  int order() const { return static_cast<int>(elements.size()); }
  // Position in `elements`, or -1.
  int index_of(const Mat2& A) const;
  bool contains(const Mat2& A) const { return index_of(A) >= 0; }
  bool is_abelian() const;
};

// Closure of the generators; throws when the closure exceeds 24 elements.
FiniteMatrixGroup enumerate(const std::vector<Mat2>& generators, std::string name = "");
// The subgroup with the given element set, keeping those ambient generators
// that lie in it as preferred generators.
FiniteMatrixGroup subgroup(const FiniteMatrixGroup& ambient, const std::vector<Mat2>& elements,
                           std::string name = "");
bool is_subgroup(const FiniteMatrixGroup& H, const FiniteMatrixGroup& G);

enum class GroupKind { Cyclic, Dihedral };

// Isomorphism type plus the generators the irreps are built from:
// G = <c> for cyclic, G = <c, f> with c a rotation of order n and f a
// reflection for dihedral groups.
struct GroupStructure {
  GroupKind kind = GroupKind::Cyclic;
  int n = 1;
  Mat2 c = Mat2::Identity();
  Mat2 f = Mat2::Identity();
  std::string label() const;  // "C4", "D6", ...
};

// Throws std::invalid_argument for groups that are neither cyclic nor dihedral.
GroupStructure classify(const FiniteMatrixGroup& G);

using Character = std::vector<Cyclo>;  // indexed like G.elements

struct Irrep {
  int degree = 1;
  std::vector<CycloMatrix> images;  // indexed like G.elements
  int index = 0;
  std::string label;

  Character character() const;
};

struct CharacterTable {
  FiniteMatrixGroup group;
  GroupStructure structure;
  std::vector<std::vector<int>> conjugacy_classes;  // element indices
  std::vector<Irrep> irreps;                        // canonical order
};

CharacterTable character_table(const FiniteMatrixGroup& G);
std::vector<std::vector<int>> conjugacy_classes(const FiniteMatrixGroup& G);

// (1/|G|) sum chi(g) conj(psi(g))
Cyclo inner_product(const FiniteMatrixGroup& G, const Character& chi, const Character& psi);
// Multiplicities over the canonical irrep list; throws if not integral.
IntVector decompose(const CharacterTable& table, const Character& chi);
Character trivial_character(const FiniteMatrixGroup& G);
Character regular_character(const FiniteMatrixGroup& G);

// Frobenius induction and pointwise restriction; throw if H is not in G.
Character induce(const FiniteMatrixGroup& H, const FiniteMatrixGroup& G, const Character& chi);
Character restrict(const FiniteMatrixGroup& G, const FiniteMatrixGroup& H, const Character& chi);
// Column j = decomposition of the induced j-th irrep of H.
IntMatrix induction_matrix(const CharacterTable& H, const CharacterTable& G);

}  // namespace bcwork
