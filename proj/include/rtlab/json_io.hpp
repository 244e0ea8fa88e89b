#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rtlab/constructions.hpp"
#include "rtlab/core.hpp"
#include "rtlab/optcheck.hpp"
#include "rtlab/patterns.hpp"
#include "rtlab/scenario.hpp"
#include "rtlab/search.hpp"

// JSON forms of every report and document exchanged by the library.
// Parsers throw InputError on malformed input.
namespace rtlab::json_io {

using nlohmann::json;

json to_json(const ColoredDigraph& g);
ColoredDigraph graph_from_json(const json& j);
ColoredDigraph parse_graph(std::string_view text);
/// Canonical text: compact, edges sorted and deduplicated.
std::string dump_graph(const ColoredDigraph& g);

json to_json(const RainbowWitness& w);

json to_json(const SearchProblem& p, const SearchResult& r);

json to_json(const scenario::Scenario& s);
scenario::Scenario scenario_from_json(const json& j);
/// A catalogue document is a JSON array of scenarios.
json catalogue_to_json(const std::vector<scenario::Scenario>& scenarios);
std::vector<scenario::Scenario> catalogue_from_json(const json& j);

json to_json(const scenario::BoundEntry& e);
json entries_to_json(const std::vector<scenario::BoundEntry>& entries);

json to_json(const optcheck::LemmaResult& r);
json to_json(const optcheck::ScanReport& r);
json to_json(const optcheck::ThresholdTable& t);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace rtlab::json_io
