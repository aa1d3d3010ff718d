#include "bcwork/groups.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace bcwork {

namespace {

constexpr int kClosureCap = 24;

std::vector<Cyclo> sort_key(const Irrep& rho, const FiniteMatrixGroup& G, const GroupStructure& s) {
  const Character chi = rho.character();
  std::vector<Cyclo> key{chi[G.index_of(s.c)]};
  if (s.kind == GroupKind::Dihedral) key.push_back(chi[G.index_of(s.f)]);
  return key;
}

// Exponents (a, b) with h = c^a f^b.
std::pair<int, int> decompose_element(const GroupStructure& s, const Mat2& h) {
  const int reflections = s.kind == GroupKind::Dihedral ? 2 : 1;
  Mat2 ca = Mat2::Identity();
  for (int a = 0; a < s.n; ++a, ca = ca * s.c)
    for (int b = 0; b < reflections; ++b)
      if ((b ? Mat2(ca * s.f) : ca) == h) return {a, b};
  throw std::logic_error("element not expressible in the chosen generators");
}

CycloMatrix scalar(const Cyclo& x) {
  CycloMatrix m(1, 1);
  m(0, 0) = x;
  return m;
}

// First preferred generator satisfying the predicate, else the canonical minimum.
template <class Pred>
Mat2 choose_generator(const FiniteMatrixGroup& G, Pred pred) {
  for (const Mat2& g : G.generators)
    if (G.contains(g) && pred(g)) return g;
  for (const Mat2& g : G.elements)
    if (pred(g)) return g;
  throw std::invalid_argument("no element with the required property in " + G.name);
}

}  // namespace

bool mat_less(const Mat2& a, const Mat2& b) {
  return std::tie(a(0, 0), a(0, 1), a(1, 0), a(1, 1)) < std::tie(b(0, 0), b(0, 1), b(1, 0), b(1, 1));
}

int mat_det(const Mat2& A) {
  return A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
}

Mat2 mat_inverse(const Mat2& A) {
  const int d = mat_det(A);
  if (d != 1 && d != -1) throw std::invalid_argument("matrix not invertible over Z");
  Mat2 B;
  B << A(1, 1), -A(0, 1), -A(1, 0), A(0, 0);
  return d * B;
}

Mat2 mat_pow(const Mat2& A, long long k) {
  Mat2 base = k < 0 ? mat_inverse(A) : A;
  if (k < 0) k = -k;
  Mat2 out = Mat2::Identity();
  for (long long i = 0; i < k; ++i) out = out * base;
  return out;
}

int mat_order(const Mat2& A) {
  Mat2 p = A;
  for (int k = 1; k <= kClosureCap; ++k, p = p * A)
    if (p == Mat2::Identity()) return k;
  return 0;
}

int FiniteMatrixGroup::index_of(const Mat2& A) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), A, mat_less);
  if (it == elements.end() || *it != A) return -1;
  return static_cast<int>(it - elements.begin());
}

bool FiniteMatrixGroup::is_abelian() const {
  for (const Mat2& a : elements)
    for (const Mat2& b : elements)
      if (a * b != b * a) return false;
  return true;
}

FiniteMatrixGroup enumerate(const std::vector<Mat2>& generators, std::string name) {
  std::vector<Mat2> elems{Mat2::Identity()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Mat2& g : generators) {
      const Mat2 p = elems[i] * g;
      if (std::find(elems.begin(), elems.end(), p) == elems.end()) {
        elems.push_back(p);
        if (static_cast<int>(elems.size()) > kClosureCap)
          throw std::invalid_argument("closure exceeds " + std::to_string(kClosureCap) +
                                      " elements; a generator has infinite order");
      }
    }
  }
  std::sort(elems.begin(), elems.end(), mat_less);
  return {std::move(name), generators, std::move(elems)};
}

FiniteMatrixGroup subgroup(const FiniteMatrixGroup& ambient, const std::vector<Mat2>& elements,
                           std::string name) {
  std::vector<Mat2> elems = elements;
  std::sort(elems.begin(), elems.end(), mat_less);
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  FiniteMatrixGroup H{std::move(name), {}, std::move(elems)};
  for (const Mat2& a : H.elements)
    for (const Mat2& b : H.elements)
      if (!H.contains(a * b)) throw std::invalid_argument("element set is not closed under products");
  for (const Mat2& g : ambient.generators)
    if (H.contains(g)) H.generators.push_back(g);
  return H;
}

bool is_subgroup(const FiniteMatrixGroup& H, const FiniteMatrixGroup& G) {
  return std::all_of(H.elements.begin(), H.elements.end(), [&](const Mat2& h) { return G.contains(h); });
}

std::string GroupStructure::label() const {
  return (kind == GroupKind::Cyclic ? "C" : "D") + std::to_string(n);
}

GroupStructure classify(const FiniteMatrixGroup& G) {
  const int order = G.order();
  GroupStructure s;
  if (order == 1) return s;
  const bool has_full_order = std::any_of(G.elements.begin(), G.elements.end(),
                                          [&](const Mat2& g) { return mat_order(g) == order; });
  if (G.is_abelian() && has_full_order) {
    s.n = order;
    s.c = choose_generator(G, [&](const Mat2& g) { return mat_order(g) == order; });
    return s;
  }
  const int rotations = static_cast<int>(std::count_if(
      G.elements.begin(), G.elements.end(), [](const Mat2& g) { return mat_det(g) == 1; }));
  const int n = order / 2;
  const bool reflections_involutive = std::all_of(G.elements.begin(), G.elements.end(), [](const Mat2& g) {
    return mat_det(g) == 1 || mat_order(g) == 2;
  });
  const auto is_rotation_generator = [&](const Mat2& g) { return mat_det(g) == 1 && mat_order(g) == n; };
  const bool cyclic_rotations = std::any_of(G.elements.begin(), G.elements.end(), is_rotation_generator);
  if (rotations != n || !reflections_involutive || !cyclic_rotations)
    throw std::invalid_argument("group " + G.name + " is neither cyclic nor dihedral");
  s.kind = GroupKind::Dihedral;
  s.n = n;
  s.c = choose_generator(G, is_rotation_generator);
  s.f = choose_generator(G, [](const Mat2& g) { return mat_det(g) == -1; });
  return s;
}

Character Irrep::character() const {
  Character chi;
  chi.reserve(images.size());
  for (const CycloMatrix& m : images) chi.push_back(trace(m));
  return chi;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteMatrixGroup& G) {
  std::vector<int> seen(G.elements.size(), 0);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < G.order(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cls;
    for (const Mat2& x : G.elements) {
      const int j = G.index_of(x * G.elements[i] * mat_inverse(x));
      if (!seen[j]) {
        seen[j] = 1;
        cls.push_back(j);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

CharacterTable character_table(const FiniteMatrixGroup& G) {
  CharacterTable table{G, classify(G), conjugacy_classes(G), {}};
  const GroupStructure& s = table.structure;
  std::vector<std::pair<int, int>> exps;
  for (const Mat2& g : G.elements) exps.push_back(decompose_element(s, g));

  auto make = [&](int degree, std::string label, auto image) {
    Irrep rho{degree, {}, 0, std::move(label)};
    for (const auto& [a, b] : exps) rho.images.push_back(image(a, b));
    table.irreps.push_back(std::move(rho));
  };

  if (s.kind == GroupKind::Cyclic) {
    for (int j = 0; j < s.n; ++j)
      make(1, "chi" + std::to_string(j), [&](int a, int) { return scalar(root_of_unity(s.n, j * a)); });
  } else {
    for (int ec : {1, -1}) {
      if (ec == -1 && s.n % 2 == 1) continue;
      for (int ef : {1, -1}) {
        std::string label = std::string("c") + (ec > 0 ? "+" : "-") + "f" + (ef > 0 ? "+" : "-");
        make(1, label, [&](int a, int b) {
          int v = (ec == -1 && a % 2 == 1 ? -1 : 1) * (ef == -1 && b == 1 ? -1 : 1);
          return scalar(Cyclo(v));
        });
      }
    }
    for (int k = 1; 2 * k < s.n; ++k) {
      make(2, "rho" + std::to_string(k), [&](int a, int b) {
        CycloMatrix d = CycloMatrix::Constant(2, 2, Cyclo(0));
        d(0, 0) = root_of_unity(s.n, k * a);
        d(1, 1) = root_of_unity(s.n, -k * a);
        if (b == 1) d.col(0).swap(d.col(1));
        return d;
      });
    }
  }

  std::stable_sort(table.irreps.begin(), table.irreps.end(), [&](const Irrep& x, const Irrep& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return sort_key(x, G, s) > sort_key(y, G, s);
  });
  for (std::size_t i = 0; i < table.irreps.size(); ++i) table.irreps[i].index = static_cast<int>(i);
  return table;
}

Cyclo inner_product(const FiniteMatrixGroup& G, const Character& chi, const Character& psi) {
  Cyclo sum;
  for (int i = 0; i < G.order(); ++i) sum += chi[i] * conj(psi[i]);
  return sum * Cyclo(Rational(1, G.order()));
}

IntVector decompose(const CharacterTable& table, const Character& chi) {
  IntVector m(static_cast<Eigen::Index>(table.irreps.size()));
  for (std::size_t i = 0; i < table.irreps.size(); ++i) {
    const Rational q = inner_product(table.group, chi, table.irreps[i].character()).to_rational();
    if (denominator(q) != 1) throw std::domain_error("character is not a virtual character");
    m(static_cast<Eigen::Index>(i)) = numerator(q);
  }
  return m;
}

Character trivial_character(const FiniteMatrixGroup& G) {
  return Character(G.elements.size(), Cyclo(1));
}

Character regular_character(const FiniteMatrixGroup& G) {
  Character chi(G.elements.size(), Cyclo(0));
  chi[G.index_of(Mat2::Identity())] = Cyclo(G.order());
  return chi;
}

Character induce(const FiniteMatrixGroup& H, const FiniteMatrixGroup& G, const Character& chi) {
  if (!is_subgroup(H, G)) throw std::invalid_argument("induce: " + H.name + " is not a subgroup of " + G.name);
  Character out(G.elements.size(), Cyclo(0));
  for (int i = 0; i < G.order(); ++i) {
    for (const Mat2& x : G.elements) {
      const int j = H.index_of(mat_inverse(x) * G.elements[i] * x);
      if (j >= 0) out[i] += chi[j];
    }
    out[i] *= Cyclo(Rational(1, H.order()));
  }
  return out;
}

Character restrict(const FiniteMatrixGroup& G, const FiniteMatrixGroup& H, const Character& chi) {
  if (!is_subgroup(H, G)) throw std::invalid_argument("restrict: " + H.name + " is not a subgroup of " + G.name);
  Character out;
  for (const Mat2& h : H.elements) out.push_back(chi[G.index_of(h)]);
  return out;
}

IntMatrix induction_matrix(const CharacterTable& H, const CharacterTable& G) {
  IntMatrix M(static_cast<Eigen::Index>(G.irreps.size()), static_cast<Eigen::Index>(H.irreps.size()));
  for (std::size_t j = 0; j < H.irreps.size(); ++j)
    M.col(static_cast<Eigen::Index>(j)) = decompose(G, induce(H.group, G.group, H.irreps[j].character()));
  return M;
}

}  // namespace bcwork
