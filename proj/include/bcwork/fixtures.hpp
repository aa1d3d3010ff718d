#pragma once

#include "bcwork/ktheory.hpp"
#include "bcwork/torus.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcwork {

class FixtureError : public std::runtime_error {
 public:
  FixtureError(std::string id, const std::string& what)
      : std::runtime_error("fixture " + id + ": " + what), id_(std::move(id)) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

struct LabeledVectors {
  std::vector<std::string> labels;
  IntMatrix vectors;  // one column per label
};

struct RowPermutation {
  std::string group;
  std::string basis;
  std::vector<TorusPoint> points;
  std::vector<int> rows;  // rows[i] = computed row placed at reference row i
};

struct SummaryRow {
  std::string group;
  long long k0 = 0, k1 = 0;
};

struct Gamma2Data {
  std::vector<std::pair<std::string, Mat2>> generators;
  std::vector<long long> free_group_ranks;
  std::string basis;
};

// Reads <dir>/<ID>.json on demand; every accessor throws FixtureError.
class FixtureStore {
 public:
  explicit FixtureStore(std::filesystem::path dir);

  // --fixtures value, else $BCWORK_FIXTURES, else the compiled-in default.
  static std::filesystem::path resolve_dir(const std::optional<std::string>& flag, const std::string& fallback);

  const std::filesystem::path& dir() const { return dir_; }
  std::vector<std::string> ids() const;
  bool has(const std::string& id) const;

  nlohmann::json raw(const std::string& id) const;
  IntMatrix matrix(const std::string& id) const;
  std::vector<std::pair<int, int>> starred(const std::string& id) const;
  LabeledVectors basis_vectors(const std::string& id) const;
  // Materializes the group-ring elements; callers verify projection properties.
  KBasis projections(const std::string& id, const WallpaperGroup& W) const;
  std::string projection_group(const std::string& id) const;
  std::vector<BredonRanks> table(const std::string& id) const;
  std::vector<FiniteSubgroup> maximal_finite(const std::string& id, const WallpaperGroup& W) const;
  std::vector<std::optional<std::pair<Rational, Rational>>> fixed_points(const std::string& id) const;
  std::vector<WallElem> torsion(const std::string& id, const WallpaperGroup& W) const;
  RowPermutation permutation(const std::string& id) const;
  std::vector<SummaryRow> summary(const std::string& id) const;
  Gamma2Data gamma2(const std::string& id) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace bcwork
