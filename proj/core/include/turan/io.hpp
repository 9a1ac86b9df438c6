#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "turan/hypergraph.hpp"
#include "turan/matroid.hpp"

namespace turan {

/// Canonical text form:
///
///   MATROID v1
///   n <n> r <r>
///   bases <count>
///   <ascending 0-based indices of one basis per line>
///
/// Lines end in LF and follow bitmask order. `comments` are appended as
/// "# ..." lines, which the parser skips.
std::string to_text(const Matroid& m, const std::vector<std::string>& comments = {});
std::string to_text(const UniformHypergraph& h);

nlohmann::json to_json(const Matroid& m);
nlohmann::json to_json(const UniformHypergraph& h);

/// Accepts MATROID v1 text or the JSON mirror {n, r, bases}. Validates the
/// exchange axiom; every failure is a ParseError carrying its line number.
Matroid parse_matroid(std::string_view input);
Matroid matroid_from_json(const nlohmann::json& j);

UniformHypergraph parse_hypergraph(std::string_view input);

std::string format_set(ElementSet s);

}  // namespace turan
