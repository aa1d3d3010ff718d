#pragma once

#include "bcwork/cyclo.hpp"
#include "bcwork/groups.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bcwork {

// (t, A) acting on the plane by x -> A x + t.
struct WallElem {
  Vec2 t = Vec2::Zero();
  Mat2 A = Mat2::Identity();

  bool operator==(const WallElem& o) const { return t == o.t && A == o.A; }
};

// Translation lexicographic, then point part row-major.
struct WallElemLess {
  bool operator()(const WallElem& a, const WallElem& b) const;
};

WallElem operator*(const WallElem& a, const WallElem& b);
WallElem inverse(const WallElem& g);
WallElem power(const WallElem& g, long long k);
WallElem translation(int a, int b);
WallElem point(const Mat2& A);
// Finite order, or nullopt for infinite order.
std::optional<int> element_order(const WallElem& g);

struct WallpaperGroup {
  std::string name;
  FiniteMatrixGroup point_group;
  std::map<std::string, WallElem> symbols;  // names usable in words

  bool contains(const WallElem& g) const { return point_group.contains(g.A); }
};

// One of p2, p4, p6, cmm, p4m, p6m.
WallpaperGroup wallpaper_group(const std::string& name);

// Words such as "uv^{-1}r^3s", "(uS)^2", "1" or "e"; throws on unknown symbols.
WallElem parse_word(const WallpaperGroup& W, const std::string& word);
std::string format_element(const WallElem& g);

// w with w g w^-1 == h, searched over point parts in canonical order.
std::optional<WallElem> are_conjugate(const WallpaperGroup& W, const WallElem& g, const WallElem& h);

// One representative per conjugacy class of nontrivial-or-trivial finite
// order elements, found among translations in [-radius, radius]^2.
std::vector<WallElem> torsion_class_reps(const WallpaperGroup& W, int radius = 2);

struct TorsionCertificate {
  bool pairwise_non_conjugate = false;
  bool complete = false;  // every finite-order element in the search box matches a listed rep
  int searched = 0;
};
TorsionCertificate certify_torsion_reps(const WallpaperGroup& W, const std::vector<WallElem>& reps,
                                        int radius = 2);

struct FiniteSubgroup {
  std::string label;  // claimed isomorphism type, e.g. "D4"
  std::vector<WallElem> elements;
};

struct SubgroupCheck {
  bool closed = false;
  bool type_matches = false;
  std::string computed_type;
};
SubgroupCheck check_finite_subgroup(const WallpaperGroup& W, const FiniteSubgroup& H);
// Conjugate as subgroups: w H w^-1 == K for some w.
std::optional<WallElem> subgroups_conjugate(const WallpaperGroup& W, const FiniteSubgroup& H,
                                            const FiniteSubgroup& K);

class GroupAlgElem {
 public:
  using Support = std::map<WallElem, Cyclo, WallElemLess>;

  GroupAlgElem() = default;
  static GroupAlgElem unit();
  static GroupAlgElem basis(const WallElem& g, const Cyclo& c = Cyclo(1));

  const Support& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  Cyclo coefficient(const WallElem& g) const;
  void add_term(const WallElem& g, const Cyclo& c);

  GroupAlgElem& operator+=(const GroupAlgElem& o);
  GroupAlgElem& operator-=(const GroupAlgElem& o);
  friend GroupAlgElem operator+(GroupAlgElem a, const GroupAlgElem& b) { return a += b; }
  friend GroupAlgElem operator-(GroupAlgElem a, const GroupAlgElem& b) { return a -= b; }
  friend GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b);
  friend GroupAlgElem operator*(const Cyclo& c, const GroupAlgElem& a);
  bool operator==(const GroupAlgElem& o) const { return support_ == o.support_; }

 private:
  Support support_;
};

GroupAlgElem star(const GroupAlgElem& x);
GroupAlgElem conjugate_by(const GroupAlgElem& x, const WallElem& g);
// Image under an automorphism acting by (t, A) -> (alpha t, alpha A alpha^-1).
GroupAlgElem push_forward(const GroupAlgElem& x, const Mat2& alpha);
bool is_projection(const GroupAlgElem& x);

// (1/n) sum_k zeta_n^{jk} g^k for g of order n.
GroupAlgElem spectral_projection(const WallElem& g, int j);
// deg/|H| sum_h conj(rho(A_h))_{11} h for an irrep of the point-group image of H.
GroupAlgElem minimal_projection(const WallpaperGroup& W, const std::vector<WallElem>& H, int irrep_index);

// Search for w with w x w^-1 == y: candidates come from are_conjugate
// applied to matching support elements, each confirmed exactly.
std::optional<WallElem> find_conjugator(const WallpaperGroup& W, const GroupAlgElem& x, const GroupAlgElem& y);

std::string format_algebra_element(const GroupAlgElem& x);

}  // namespace bcwork
