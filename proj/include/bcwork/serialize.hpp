#pragma once

#include "bcwork/groups.hpp"
#include "bcwork/ktheory.hpp"
#include "bcwork/wallpaper.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace bcwork {

// [[num, den] x 4] in the basis 1, zeta, zeta^2, zeta^3.
nlohmann::json cyclo_to_json(const Cyclo& x);
// Accepts the array form, a JSON integer, or a "p/q" string.
Cyclo cyclo_from_json(const nlohmann::json& j);

nlohmann::json int_to_json(const Int& x);
Int int_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const IntVector& v);

// {"name", "rows", "cols", "entries"} plus optional label arrays.
nlohmann::json matrix_to_json(const std::string& name, const IntMatrix& M,
                              const std::vector<std::string>& row_labels = {},
                              const std::vector<std::string>& col_labels = {});
IntMatrix matrix_from_json(const nlohmann::json& j);
std::string matrix_to_text(const std::string& name, const IntMatrix& M,
                           const std::vector<std::string>& row_labels = {},
                           const std::vector<std::string>& col_labels = {});

// Records {t, A, coeff} in support order.
nlohmann::json algebra_to_json(const GroupAlgElem& x);
nlohmann::json sequence_to_json(const SequenceResult& r);
nlohmann::json character_table_to_json(const CharacterTable& table);
std::string character_table_to_text(const CharacterTable& table);

std::string shape_to_string(const AbelianGroupShape& s);
std::string list_to_string(const std::vector<Int>& v);

}  // namespace bcwork
