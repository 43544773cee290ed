#pragma once

#include <nlohmann/json.hpp>

#include "feitlab/adams.hpp"
#include "feitlab/brauer.hpp"
#include "feitlab/chartab.hpp"
#include "feitlab/cyclo.hpp"

namespace feitlab {

/// Rationals become an integer or a "num/den" string; anything else becomes
/// {"level": e, "terms": [[exp, num, den], ...]}.
nlohmann::ordered_json cyclotomic_to_json(const Cyclotomic& value);
Cyclotomic cyclotomic_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json table_to_json(const CharacterTable& table);

nlohmann::ordered_json to_json(const SReport& report);
nlohmann::ordered_json to_json(const FeitReport& report);
/// {subgroup, phi, coefficient} records in canonical order.
nlohmann::ordered_json to_json(const RPlusElement& element);

}  // namespace feitlab
