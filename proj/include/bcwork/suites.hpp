#pragma once

#include "bcwork/fixtures.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace bcwork {

enum class Status { Pass, Fail, Fixture };

std::string status_name(Status s);

struct Check {
  std::string id;
  std::string description;
  Status status = Status::Fail;
  std::string expected;
  std::string actual;
  std::string ref;  // which table, matrix or statement the check reproduces
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;  // no Fail entries
  int count(Status s) const;
  const Check* find(const std::string& id) const;
};

// sa-lhs, sa-rhs, ga-lhs, ga-rhs, gamma2-lhs, gamma2-rhs, wallpaper-bases, summary, all
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for unknown names; fixture problems become Fail checks.
SuiteReport run_suite(const std::string& name, const FixtureStore& store);

nlohmann::json report_to_json(const SuiteReport& report);
std::string report_to_text(const SuiteReport& report);

// Matrices computed from first principles, addressable like fixtures.
const std::vector<std::string>& computed_ids();

struct DumpOutput {
  nlohmann::json json;
  std::string text;
};
// Fixture ids or computed ids; throws std::invalid_argument for unknown ids.
DumpOutput dump(const std::string& id, const FixtureStore& store);

// Shared pipelines, also used by the acceptance driver.
struct CoordinateResult {
  IntMatrix computed;      // canonical row order
  IntMatrix permuted;      // rows reordered by the permutation fixture
  std::vector<std::string> row_labels;  // canonical labels
  std::vector<std::string> col_labels;
};
CoordinateResult basis_coordinates(const FixtureStore& store, const std::string& group);
// Columns = coordinates of the cmm basis pushed into p4m or p6m.
IntMatrix reconstruct_iota(const FixtureStore& store, const std::string& target);

}  // namespace bcwork
