#pragma once

// JSON reports shared by the CLI and the acceptance runner. Keys are sorted
// by nlohmann::json, so a report depends only on its contents.

#include <nlohmann/json.hpp>

#include "turan/extremal.hpp"
#include "turan/lagrangian.hpp"
#include "turan/minors.hpp"

namespace turan::verify {

nlohmann::json elements_json(ElementSet s);

nlohmann::json search_json(const SearchReport& report);
nlohmann::json binary_search_json(const BinarySearchReport& report);
/// `digits` places for the exact bound's decimal expansion.
nlohmann::json lagrangian_json(const LagrangianResult& result, int digits);
nlohmann::json decomposition_json(const Rank3Decomposition& d);
nlohmann::json classification_json(const U35Classification& c);
nlohmann::json minor_json(int s, int t, const std::optional<MinorWitness>& w);
nlohmann::json restriction_json(int s, int t, const std::optional<ElementSet>& set);

}  // namespace turan::verify
