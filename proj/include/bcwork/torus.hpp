#pragma once

#include "bcwork/groups.hpp"
#include "bcwork/wallpaper.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bcwork {

// Point of R^2/Z^2 with coordinates in [0, 1); denominators divide 12.
struct TorusPoint {
  Rational x, y;

  TorusPoint() = default;
  TorusPoint(Rational a, Rational b);  // reduces mod 1, validates denominators

  bool operator==(const TorusPoint& o) const { return x == o.x && y == o.y; }
  bool operator<(const TorusPoint& o) const { return x < o.x || (x == o.x && y < o.y); }
  std::string str() const;
};

// A . theta = A^{-T} theta mod 1, the action making evaluation multiplicative.
TorusPoint dual_action(const Mat2& A, const TorusPoint& theta);
// exp(2 pi i theta . t) as an element of Q(zeta12).
Cyclo character_value(const TorusPoint& theta, const Vec2& t);

struct OrbitRep {
  std::vector<TorusPoint> orbit;  // sorted; base point first
  int base_index = 0;
  FiniteMatrixGroup stabilizer;
  std::vector<Mat2> coset_reps;  // coset_reps[i] . base == orbit[i]
  CharacterTable stabilizer_table;
};

OrbitRep orbit_of(const WallpaperGroup& W, const TorusPoint& theta);

// Image of x in the representation induced from the character theta
// twisted by the stabilizer irrep; blocks indexed by orbit position.
CycloMatrix evaluate(const GroupAlgElem& x, const OrbitRep& orb, int irrep_index);

struct CoordinateLabel {
  int point = 0;   // index into the evaluation point list
  int irrep = 0;   // canonical stabilizer irrep index
  std::string text;
};

std::vector<CoordinateLabel> coordinate_labels(const WallpaperGroup& W, const std::vector<TorusPoint>& points);
// Exact ranks of the evaluations; throws if x is not a projection.
IntVector k0_coordinates(const WallpaperGroup& W, const GroupAlgElem& x, const std::vector<TorusPoint>& points);
IntMatrix coordinate_matrix(const WallpaperGroup& W, const std::vector<GroupAlgElem>& basis,
                            const std::vector<TorusPoint>& points);

// Throws if the basis coordinate matrix is not injective with all-ones invariant factors.
std::optional<IntVector> express_in_basis(const WallpaperGroup& W, const GroupAlgElem& x,
                                          const std::vector<GroupAlgElem>& basis,
                                          const std::vector<TorusPoint>& points);

}  // namespace bcwork
