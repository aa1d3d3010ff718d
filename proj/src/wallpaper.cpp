#include "bcwork/wallpaper.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace bcwork {

namespace {

Mat2 make_mat(int a, int b, int c, int d) {
  Mat2 m;
  m << a, b, c, d;
  return m;
}

IntMatrix to_int(const Mat2& A) {
  IntMatrix M(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) M(i, j) = Int(A(i, j));
  return M;
}

bool has_finite_order(const WallElem& g) {
  return element_order(g).has_value();
}

// All w = (x, C) with w g w^-1 == h, one per admissible point part C.
std::vector<WallElem> conjugators(const WallpaperGroup& W, const WallElem& g, const WallElem& h) {
  if (!has_finite_order(g) || !has_finite_order(h))
    throw std::invalid_argument("are_conjugate: infinite-order elements are out of scope");
  std::vector<WallElem> out;
  const IntMatrix lhs = to_int(Mat2(Mat2::Identity() - h.A));
  for (const Mat2& C : W.point_group.elements) {
    if (C * g.A * mat_inverse(C) != h.A) continue;
    const Vec2 rhs = h.t - C * g.t;
    IntVector b(2);
    b << Int(rhs(0)), Int(rhs(1));
    if (auto x = solve_integer(lhs, b)) {
      const WallElem w{Vec2(static_cast<int>((*x)(0)), static_cast<int>((*x)(1))), C};
      if (w * g * inverse(w) != h) throw std::logic_error("conjugacy witness failed verification");
      out.push_back(w);
    }
  }
  return out;
}

using QVec = std::array<Rational, 2>;

// Barycenter of the orbit of the origin; always fixed by the subgroup.
QVec barycenter(const std::vector<WallElem>& H) {
  QVec p{Rational(0), Rational(0)};
  for (const WallElem& h : H) {
    p[0] += Rational(h.t(0));
    p[1] += Rational(h.t(1));
  }
  const Rational n(static_cast<long long>(H.size()));
  return {p[0] / n, p[1] / n};
}

std::vector<WallElem> sorted_set(std::vector<WallElem> v) {
  std::sort(v.begin(), v.end(), WallElemLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

class WordParser {
 public:
  WordParser(const WallpaperGroup& W, const std::string& text) : W_(W), s_(text) {
    s_.erase(std::remove_if(s_.begin(), s_.end(), [](unsigned char c) { return std::isspace(c); }), s_.end());
  }

  WallElem parse() {
    WallElem g = sequence();
    if (pos_ != s_.size()) fail("unexpected character");
    return g;
  }

 private:
  WallElem sequence() {
    WallElem g;
    while (pos_ < s_.size() && s_[pos_] != ')') g = g * factor();
    return g;
  }

  WallElem factor() {
    WallElem base;
    if (s_[pos_] == '(') {
      ++pos_;
      base = sequence();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else {
      base = atom();
    }
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      return power(base, exponent());
    }
    return base;
  }

  WallElem atom() {
    std::string best;
    for (const auto& [name, _] : W_.symbols)
      if (s_.compare(pos_, name.size(), name) == 0 && name.size() > best.size()) best = name;
    if (best.empty() && (s_[pos_] == '1' || s_[pos_] == 'e')) {
      ++pos_;
      return WallElem{};
    }
    if (best.empty()) fail("unknown symbol");
    pos_ += best.size();
    return W_.symbols.at(best);
  }

  long long exponent() {
    const bool braced = pos_ < s_.size() && s_[pos_] == '{';
    if (braced) ++pos_;
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("missing exponent");
    const long long k = std::stoll(s_.substr(start, pos_ - start));
    if (braced) {
      if (pos_ >= s_.size() || s_[pos_] != '}') fail("missing '}'");
      ++pos_;
    }
    return k;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse word '" + s_ + "' in " + W_.name + " at position " +
                                std::to_string(pos_) + ": " + why);
  }

  const WallpaperGroup& W_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

bool WallElemLess::operator()(const WallElem& a, const WallElem& b) const {
  if (a.t(0) != b.t(0)) return a.t(0) < b.t(0);
  if (a.t(1) != b.t(1)) return a.t(1) < b.t(1);
  return mat_less(a.A, b.A);
}

WallElem operator*(const WallElem& a, const WallElem& b) {
  return {Vec2(a.t + a.A * b.t), Mat2(a.A * b.A)};
}

WallElem inverse(const WallElem& g) {
  const Mat2 Ai = mat_inverse(g.A);
  return {Vec2(-(Ai * g.t)), Ai};
}

WallElem power(const WallElem& g, long long k) {
  const WallElem base = k < 0 ? inverse(g) : g;
  WallElem out;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

WallElem translation(int a, int b) {
  return {Vec2(a, b), Mat2::Identity()};
}

WallElem point(const Mat2& A) {
  return {Vec2::Zero(), A};
}

std::optional<int> element_order(const WallElem& g) {
  const int n = mat_order(g.A);
  if (n == 0) return std::nullopt;
  Vec2 sum = Vec2::Zero();
  Mat2 Ai = Mat2::Identity();
  for (int i = 0; i < n; ++i, Ai = Ai * g.A) sum += Ai * g.t;
  if (sum != Vec2::Zero()) return std::nullopt;
  return n;
}

WallpaperGroup wallpaper_group(const std::string& name) {
  const Mat2 s = make_mat(0, 1, 1, 0);
  WallpaperGroup W;
  W.name = name;
  W.symbols["u"] = translation(1, 0);
  W.symbols["v"] = translation(0, 1);
  if (name == "p2") {
    const Mat2 eps = -Mat2::Identity();
    W.point_group = enumerate({eps}, "C2");
    W.symbols["eps"] = point(eps);
  } else if (name == "p4") {
    const Mat2 S = make_mat(0, -1, 1, 0);
    W.point_group = enumerate({S}, "C4");
    W.symbols["S"] = point(S);
    W.symbols["eps"] = point(Mat2(S * S));
  } else if (name == "p6") {
    const Mat2 R = make_mat(0, -1, 1, 1);
    W.point_group = enumerate({R}, "C6");
    W.symbols["R"] = point(R);
    W.symbols["eps"] = point(mat_pow(R, 3));
  } else if (name == "cmm" || name == "p4m" || name == "p6m") {
    const Mat2 r = name == "cmm" ? Mat2(-Mat2::Identity())
                   : name == "p4m" ? make_mat(0, 1, -1, 0)
                                   : make_mat(0, 1, -1, 1);
    W.point_group = enumerate({r, s}, name == "cmm" ? "D2" : name == "p4m" ? "D4" : "D6");
    W.symbols["r"] = point(r);
    W.symbols["s"] = point(s);
  } else {
    throw std::invalid_argument("unknown wallpaper group: " + name);
  }
  return W;
}

WallElem parse_word(const WallpaperGroup& W, const std::string& word) {
  return WordParser(W, word).parse();
}

std::string format_element(const WallElem& g) {
  std::ostringstream os;
  os << "(" << g.t(0) << "," << g.t(1) << ")|[[" << g.A(0, 0) << "," << g.A(0, 1) << "],[" << g.A(1, 0) << ","
     << g.A(1, 1) << "]]";
  return os.str();
}

std::optional<WallElem> are_conjugate(const WallpaperGroup& W, const WallElem& g, const WallElem& h) {
  auto all = conjugators(W, g, h);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<WallElem> torsion_class_reps(const WallpaperGroup& W, int radius) {
  std::vector<Vec2> ts;
  for (int a = -radius; a <= radius; ++a)
    for (int b = -radius; b <= radius; ++b) ts.emplace_back(a, b);
  std::stable_sort(ts.begin(), ts.end(), [](const Vec2& x, const Vec2& y) {
    return x.cwiseAbs().sum() < y.cwiseAbs().sum();
  });
  std::vector<WallElem> reps;
  for (const Vec2& t : ts)
    for (const Mat2& A : W.point_group.elements) {
      const WallElem g{t, A};
      if (!has_finite_order(g)) continue;
      const bool known = std::any_of(reps.begin(), reps.end(), [&](const WallElem& r) {
        return are_conjugate(W, g, r).has_value();
      });
      if (!known) reps.push_back(g);
    }
  return reps;
}

TorsionCertificate certify_torsion_reps(const WallpaperGroup& W, const std::vector<WallElem>& reps, int radius) {
  TorsionCertificate cert;
  cert.pairwise_non_conjugate = true;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (are_conjugate(W, reps[i], reps[j])) cert.pairwise_non_conjugate = false;
  cert.complete = true;
  for (int a = -radius; a <= radius; ++a)
    for (int b = -radius; b <= radius; ++b)
      for (const Mat2& A : W.point_group.elements) {
        const WallElem g{Vec2(a, b), A};
        if (!has_finite_order(g)) continue;
        ++cert.searched;
        const bool matched = std::any_of(reps.begin(), reps.end(), [&](const WallElem& r) {
          return are_conjugate(W, g, r).has_value();
        });
        cert.complete = cert.complete && matched;
      }
  return cert;
}

SubgroupCheck check_finite_subgroup(const WallpaperGroup& W, const FiniteSubgroup& H) {
  SubgroupCheck out;
  const std::vector<WallElem> elems = sorted_set(H.elements);
  auto member = [&](const WallElem& g) { return std::binary_search(elems.begin(), elems.end(), g, WallElemLess{}); };
  out.closed = member(WallElem{}) && elems.size() == H.elements.size();
  for (const WallElem& a : elems) {
    out.closed = out.closed && W.contains(a) && member(inverse(a));
    for (const WallElem& b : elems) out.closed = out.closed && member(a * b);
  }
  if (!out.closed) return out;
  std::vector<Mat2> points;
  for (const WallElem& g : elems) points.push_back(g.A);
  try {
    const FiniteMatrixGroup P = subgroup(W.point_group, points);
    if (P.order() != static_cast<int>(elems.size())) return out;
    out.computed_type = classify(P).label();
  } catch (const std::invalid_argument&) {
    return out;
  }
  out.type_matches = out.computed_type == H.label;
  return out;
}

std::optional<WallElem> subgroups_conjugate(const WallpaperGroup& W, const FiniteSubgroup& H,
                                            const FiniteSubgroup& K) {
  if (H.elements.size() != K.elements.size()) return std::nullopt;
  const QVec pH = barycenter(H.elements), pK = barycenter(K.elements);
  const std::vector<WallElem> target = sorted_set(K.elements);
  for (const Mat2& C : W.point_group.elements) {
    // w = (x, C) must carry the fixed point of H to that of K.
    const Rational x0 = pK[0] - (Rational(C(0, 0)) * pH[0] + Rational(C(0, 1)) * pH[1]);
    const Rational x1 = pK[1] - (Rational(C(1, 0)) * pH[0] + Rational(C(1, 1)) * pH[1]);
    if (denominator(x0) != 1 || denominator(x1) != 1) continue;
    const WallElem w{Vec2(static_cast<int>(numerator(x0)), static_cast<int>(numerator(x1))), C};
    std::vector<WallElem> image;
    for (const WallElem& h : H.elements) image.push_back(w * h * inverse(w));
    if (sorted_set(image) == target) return w;
  }
  return std::nullopt;
}

GroupAlgElem GroupAlgElem::unit() {
  return basis(WallElem{});
}

GroupAlgElem GroupAlgElem::basis(const WallElem& g, const Cyclo& c) {
  GroupAlgElem x;
  x.add_term(g, c);
  return x;
}

Cyclo GroupAlgElem::coefficient(const WallElem& g) const {
  auto it = support_.find(g);
  return it == support_.end() ? Cyclo(0) : it->second;
}

void GroupAlgElem::add_term(const WallElem& g, const Cyclo& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = support_.try_emplace(g, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) support_.erase(it);
}

GroupAlgElem& GroupAlgElem::operator+=(const GroupAlgElem& o) {
  for (const auto& [g, c] : o.support_) add_term(g, c);
  return *this;
}

GroupAlgElem& GroupAlgElem::operator-=(const GroupAlgElem& o) {
  for (const auto& [g, c] : o.support_) add_term(g, -c);
  return *this;
}

GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b) {
  GroupAlgElem out;
  for (const auto& [g, x] : a.support_)
    for (const auto& [h, y] : b.support_) out.add_term(g * h, x * y);
  return out;
}

GroupAlgElem operator*(const Cyclo& c, const GroupAlgElem& a) {
  GroupAlgElem out;
  for (const auto& [g, x] : a.support_) out.add_term(g, c * x);
  return out;
}

GroupAlgElem star(const GroupAlgElem& x) {
  GroupAlgElem out;
  for (const auto& [g, c] : x.support()) out.add_term(inverse(g), conj(c));
  return out;
}

GroupAlgElem conjugate_by(const GroupAlgElem& x, const WallElem& g) {
  const WallElem gi = inverse(g);
  GroupAlgElem out;
  for (const auto& [h, c] : x.support()) out.add_term(g * h * gi, c);
  return out;
}

GroupAlgElem push_forward(const GroupAlgElem& x, const Mat2& alpha) {
  const Mat2 ai = mat_inverse(alpha);
  GroupAlgElem out;
  for (const auto& [h, c] : x.support()) out.add_term(WallElem{Vec2(alpha * h.t), Mat2(alpha * h.A * ai)}, c);
  return out;
}

bool is_projection(const GroupAlgElem& x) {
  return x * x == x && star(x) == x;
}

GroupAlgElem spectral_projection(const WallElem& g, int j) {
  const auto n = element_order(g);
  if (!n) throw std::invalid_argument("spectral_projection: element of infinite order");
  GroupAlgElem out;
  const Cyclo scale(Rational(1, *n));
  WallElem gk;
  for (int k = 0; k < *n; ++k, gk = gk * g) out.add_term(gk, scale * root_of_unity(*n, static_cast<long long>(j) * k));
  return out;
}

GroupAlgElem minimal_projection(const WallpaperGroup& W, const std::vector<WallElem>& H, int irrep_index) {
  std::vector<Mat2> points;
  for (const WallElem& h : H) points.push_back(h.A);
  const FiniteMatrixGroup P = subgroup(W.point_group, points);
  if (P.order() != static_cast<int>(H.size())) throw std::invalid_argument("minimal_projection: not a finite subgroup");
  const FiniteSubgroup sub{"", H};
  if (!check_finite_subgroup(W, sub).closed) throw std::invalid_argument("minimal_projection: not a subgroup");
  const CharacterTable table = character_table(P);
  if (irrep_index < 0 || irrep_index >= static_cast<int>(table.irreps.size()))
    throw std::out_of_range("minimal_projection: irrep index");
  const Irrep& rho = table.irreps[irrep_index];
  const Cyclo scale(Rational(rho.degree, P.order()));
  GroupAlgElem out;
  for (const WallElem& h : H) out.add_term(h, scale * conj(rho.images[P.index_of(h.A)](0, 0)));
  return out;
}

std::optional<WallElem> find_conjugator(const WallpaperGroup& W, const GroupAlgElem& x, const GroupAlgElem& y) {
  if (x == y) return WallElem{};
  if (x.support().size() != y.support().size()) return std::nullopt;
  const WallElem identity{};
  for (const auto& [g, cg] : x.support()) {
    if (g == identity) continue;
    const auto og = element_order(g);
    if (!og) continue;
    for (const auto& [h, ch] : y.support()) {
      if (ch != cg || element_order(h) != og) continue;
      for (const WallElem& w : conjugators(W, g, h))
        if (conjugate_by(x, w) == y) return w;
    }
    break;  // any witness must move this support element onto some support element of y
  }
  return std::nullopt;
}

std::string format_algebra_element(const GroupAlgElem& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [g, c] : x.support()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")" + format_element(g);
  }
  return out;
}

}  // namespace bcwork
