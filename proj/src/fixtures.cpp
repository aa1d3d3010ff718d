#include "bcwork/fixtures.hpp"

#include "bcwork/serialize.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

namespace bcwork {

using nlohmann::json;

namespace {

Mat2 mat2_from_json(const json& j) {
  Mat2 A;
  A << j.at(0).at(0).get<int>(), j.at(0).at(1).get<int>(), j.at(1).at(0).get<int>(), j.at(1).at(1).get<int>();
  return A;
}

// Wraps parse failures of one fixture into FixtureError.
template <class F>
auto guarded(const std::string& id, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FixtureError&) {
    throw;
  } catch (const std::exception& e) {
    throw FixtureError(id, e.what());
  }
}

void require_group(const std::string& id, const json& j, const WallpaperGroup& W) {
  if (j.at("group").get<std::string>() != W.name)
    throw FixtureError(id, "belongs to group " + j.at("group").get<std::string>() + ", not " + W.name);
}

}  // namespace

FixtureStore::FixtureStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path FixtureStore::resolve_dir(const std::optional<std::string>& flag, const std::string& fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BCWORK_FIXTURES"); env && *env) return env;
  return fallback;
}

std::vector<std::string> FixtureStore::ids() const {
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir_, ec))
    if (entry.path().extension() == ".json") out.push_back(entry.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

bool FixtureStore::has(const std::string& id) const {
  return std::filesystem::exists(dir_ / (id + ".json"));
}

json FixtureStore::raw(const std::string& id) const {
  const auto path = dir_ / (id + ".json");
  std::ifstream in(path);
  if (!in) throw FixtureError(id, "missing (looked for " + path.string() + ")");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FixtureError(id, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("name", "") != id) throw FixtureError(id, "name field does not match the fixture id");
  return j;
}

IntMatrix FixtureStore::matrix(const std::string& id) const {
  return guarded(id, [&] { return matrix_from_json(raw(id)); });
}

std::vector<std::pair<int, int>> FixtureStore::starred(const std::string& id) const {
  return guarded(id, [&] {
    std::vector<std::pair<int, int>> out;
    for (const json& p : raw(id).value("starred", json::array())) out.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    return out;
  });
}

LabeledVectors FixtureStore::basis_vectors(const std::string& id) const {
  return guarded(id, [&] {
    const json j = raw(id);
    const auto dim = j.at("dim").get<Eigen::Index>();
    const json& vs = j.at("vectors");
    LabeledVectors out{{}, IntMatrix::Zero(dim, static_cast<Eigen::Index>(vs.size()))};
    for (std::size_t k = 0; k < vs.size(); ++k) {
      out.labels.push_back(vs[k].at("label").get<std::string>());
      for (const json& t : vs[k].at("terms")) {
        const auto i = t.at(0).get<Eigen::Index>();
        if (i < 1 || i > dim) throw std::out_of_range("basis index out of range");
        out.vectors(i - 1, static_cast<Eigen::Index>(k)) += int_from_json(t.at(1));
      }
    }
    return out;
  });
}

std::string FixtureStore::projection_group(const std::string& id) const {
  return guarded(id, [&] { return raw(id).at("group").get<std::string>(); });
}

KBasis FixtureStore::projections(const std::string& id, const WallpaperGroup& W) const {
  return guarded(id, [&] {
    const json j = raw(id);
    require_group(id, j, W);
    KBasis out;
    for (const json& s : j.at("symbols")) {
      KSymbol sym{s.at("label").get<std::string>(), std::nullopt};
      if (!s.value("formal", false)) {
        const Cyclo scale(parse_rational(s.at("scale").get<std::string>()));
        GroupAlgElem x;
        for (const json& t : s.at("terms"))
          x.add_term(parse_word(W, t.at("word").get<std::string>()), scale * cyclo_from_json(t.at("coeff")));
        sym.projection = std::move(x);
      }
      out.push_back(std::move(sym));
    }
    return out;
  });
}

std::vector<BredonRanks> FixtureStore::table(const std::string& id) const {
  return guarded(id, [&] {
    std::vector<BredonRanks> out;
    const json j = raw(id);
    for (const json& g : j.at("groups"))
      out.push_back({g.at("group").get<std::string>(), g.at("H0").get<int>(), g.at("H1").get<int>(), g.at("H2").get<int>()});
    return out;
  });
}

std::vector<FiniteSubgroup> FixtureStore::maximal_finite(const std::string& id, const WallpaperGroup& W) const {
  return guarded(id, [&] {
    const json j = raw(id);
    require_group(id, j, W);
    std::vector<FiniteSubgroup> out;
    for (const json& s : j.at("subgroups")) {
      FiniteSubgroup H{s.at("label").get<std::string>(), {}};
      for (const json& w : s.at("elements")) H.elements.push_back(parse_word(W, w.get<std::string>()));
      out.push_back(std::move(H));
    }
    return out;
  });
}

std::vector<std::optional<std::pair<Rational, Rational>>> FixtureStore::fixed_points(const std::string& id) const {
  return guarded(id, [&] {
    std::vector<std::optional<std::pair<Rational, Rational>>> out;
    const json j = raw(id);
    for (const json& s : j.at("subgroups")) {
      if (!s.contains("fixed_point")) {
        out.emplace_back();
        continue;
      }
      const json& p = s.at("fixed_point");
      out.emplace_back(std::pair{parse_rational(p.at(0).get<std::string>()), parse_rational(p.at(1).get<std::string>())});
    }
    return out;
  });
}

std::vector<WallElem> FixtureStore::torsion(const std::string& id, const WallpaperGroup& W) const {
  return guarded(id, [&] {
    const json j = raw(id);
    require_group(id, j, W);
    std::vector<WallElem> out;
    for (const json& w : j.at("reps")) out.push_back(parse_word(W, w.get<std::string>()));
    return out;
  });
}

RowPermutation FixtureStore::permutation(const std::string& id) const {
  return guarded(id, [&] {
    const json j = raw(id);
    RowPermutation p{j.at("group").get<std::string>(), j.at("basis").get<std::string>(), {}, {}};
    for (const json& pt : j.at("points"))
      p.points.emplace_back(parse_rational(pt.at(0).get<std::string>()), parse_rational(pt.at(1).get<std::string>()));
    p.rows = j.at("rows").get<std::vector<int>>();
    std::vector<int> sorted = p.rows;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i)) throw std::invalid_argument("rows is not a permutation");
    return p;
  });
}

std::vector<SummaryRow> FixtureStore::summary(const std::string& id) const {
  return guarded(id, [&] {
    std::vector<SummaryRow> out;
    const json j = raw(id);
    for (const json& r : j.at("groups"))
      out.push_back({r.at("group").get<std::string>(), r.at("K0").get<long long>(), r.at("K1").get<long long>()});
    return out;
  });
}

Gamma2Data FixtureStore::gamma2(const std::string& id) const {
  return guarded(id, [&] {
    const json j = raw(id);
    Gamma2Data d;
    for (const json& g : j.at("generators")) d.generators.emplace_back(g.at("label").get<std::string>(), mat2_from_json(g.at("matrix")));
    d.free_group_ranks = j.at("free_group_ranks").get<std::vector<long long>>();
    d.basis = j.at("basis").get<std::string>();
    return d;
  });
}

}  // namespace bcwork
