#include "rtlab/json_io.hpp"

#include <cstdio>

namespace rtlab::json_io {

using namespace scenario;

namespace {

[[noreturn]] void fail(const std::string& what) { throw InputError(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < INT32_MIN || v > INT32_MAX) fail(std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::int64_t as_int64(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

std::vector<int> int_list(const json& j, const char* what) {
  std::vector<int> out;
  for (const auto& v : as_array(j, what)) out.push_back(as_int(v, what));
  return out;
}

json pair_json(const VertexPair& p) { return json::array({p.first, p.second}); }

VertexPair pair_from(const json& j) {
  const auto v = int_list(j, "pair");
  if (v.size() != 2) fail("a pair needs exactly two vertices");
  return {v[0], v[1]};
}

json pairs_json(const std::vector<VertexPair>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(pair_json(p));
  return out;
}

std::vector<VertexPair> pairs_from(const json& j) {
  std::vector<VertexPair> out;
  for (const auto& p : as_array(j, "pairs")) out.push_back(pair_from(p));
  return out;
}

PairClass class_from(const json& j) {
  auto c = parse_pair_class(as_string(j, "class"));
  if (!c) fail("unknown pair class '" + j.get<std::string>() + "'");
  return *c;
}

json constraint_json(const Constraint& con) {
  return std::visit(
      [](const auto& r) -> json {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, rule::NoRainbow>) {
          return {{"rule", "no_rainbow"}, {"pattern", to_string(r.pattern)}};
        } else if constexpr (std::is_same_v<T, rule::MaxPairEdges>) {
          return {{"rule", "max_pair_edges"}, {"max", r.max}, {"pairs", pairs_json(r.pairs)}};
        } else if constexpr (std::is_same_v<T, rule::MaxDoubles>) {
          return {{"rule", "max_doubles"}, {"max", r.max}, {"pairs", pairs_json(r.pairs)}};
        } else if constexpr (std::is_same_v<T, rule::ForbidClass>) {
          return {{"rule", "forbid_class"}, {"class", to_string(r.cls)}, {"pairs", pairs_json(r.pairs)}};
        } else if constexpr (std::is_same_v<T, rule::AtMostOne>) {
          return {{"rule", "at_most_one"},
                  {"class", to_string(r.cls)},
                  {"vertex", r.vertex},
                  {"pair", pair_json(r.pair)}};
        } else if constexpr (std::is_same_v<T, rule::PairEdges>) {
          json j = {{"rule", "pair_edges"}, {"pair", pair_json(r.pair)}, {"colors", r.colors}, {"min", r.min}};
          if (r.max) j["max"] = *r.max;
          return j;
        } else if constexpr (std::is_same_v<T, rule::MinDirected>) {
          return {{"rule", "min_directed"}, {"from", r.from}, {"to", r.to}, {"min", r.min}};
        } else if constexpr (std::is_same_v<T, rule::Oriented>) {
          return {{"rule", "oriented"}};
        } else if constexpr (std::is_same_v<T, rule::NoCommonColor>) {
          return {{"rule", "no_common_color"},
                  {"first", pair_json(r.first)},
                  {"second", pair_json(r.second)},
                  {"colors", r.colors}};
        } else {
          return {{"rule", "no_thick_path"}};
        }
      },
      con);
}

Constraint constraint_from(const json& j) {
  const std::string kind = as_string(field(j, "rule"), "rule");
  auto opt_pairs = [&]() {
    return j.contains("pairs") ? pairs_from(j["pairs"]) : std::vector<VertexPair>{};
  };
  if (kind == "no_rainbow") {
    auto p = parse_triangle_kind(as_string(field(j, "pattern"), "pattern"));
    if (!p) fail("unknown pattern in no_rainbow");
    return rule::NoRainbow{*p};
  }
  if (kind == "max_pair_edges") return rule::MaxPairEdges{as_int(field(j, "max"), "max"), opt_pairs()};
  if (kind == "max_doubles") return rule::MaxDoubles{as_int(field(j, "max"), "max"), opt_pairs()};
  if (kind == "forbid_class") return rule::ForbidClass{class_from(field(j, "class")), opt_pairs()};
  if (kind == "at_most_one")
    return rule::AtMostOne{class_from(field(j, "class")), as_int(field(j, "vertex"), "vertex"),
                           pair_from(field(j, "pair"))};
  if (kind == "pair_edges") {
    rule::PairEdges r;
    r.pair = pair_from(field(j, "pair"));
    if (j.contains("colors")) r.colors = int_list(j["colors"], "colors");
    r.min = j.contains("min") ? as_int(j["min"], "min") : 0;
    if (j.contains("max")) r.max = as_int(j["max"], "max");
    return r;
  }
  if (kind == "min_directed")
    return rule::MinDirected{as_int(field(j, "from"), "from"), as_int(field(j, "to"), "to"),
                             as_int(field(j, "min"), "min")};
  if (kind == "oriented") return rule::Oriented{};
  if (kind == "no_common_color")
    return rule::NoCommonColor{pair_from(field(j, "first")), pair_from(field(j, "second")),
                               int_list(field(j, "colors"), "colors")};
  if (kind == "no_thick_path") return rule::NoThickPath{};
  fail("unknown rule '" + kind + "'");
}

json rational_json(const scenario::Rational& r) { return {{"num", r.num}, {"den", r.den}}; }

scenario::Rational rational_from(const json& j) {
  return {as_int64(field(j, "num"), "num"), as_int64(field(j, "den"), "den")};
}

json point_json(const optcheck::Point& p) { return {{"u", p.u}, {"y", p.y}, {"z", p.z}, {"r", p.r}}; }

}  // namespace

json to_json(const ColoredDigraph& g) {
  json edges = json::array();
  for (const EdgeRef& e : g.edges()) edges.push_back({e.color, e.from, e.to});
  return {{"n", g.n()}, {"c", g.c()}, {"edges", edges}};
}

ColoredDigraph graph_from_json(const json& j) {
  const int n = as_int(field(j, "n"), "n");
  const int c = as_int(field(j, "c"), "c");
  if (n < 0 || c < 0) fail("n and c must be non-negative");
  if (n > 100000) fail("n too large");
  GraphBuilder b(n, c);
  for (const auto& e : as_array(field(j, "edges"), "edges")) {
    if (!e.is_array() || e.size() != 3) fail("each edge must be [color, from, to]");
    b.add_edge(as_int(e[0], "color"), as_int(e[1], "from"), as_int(e[2], "to"));
  }
  return b.build();
}

ColoredDigraph parse_graph(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  return graph_from_json(j);
}

std::string dump_graph(const ColoredDigraph& g) { return to_json(g).dump(); }

json to_json(const RainbowWitness& w) {
  json edges = json::array();
  for (const EdgeRef& e : w.edges) edges.push_back({e.color, e.from, e.to});
  return {{"pattern", to_string(w.kind)},
          {"vertices", {w.vertices[0], w.vertices[1], w.vertices[2]}},
          {"edges", edges}};
}

json to_json(const SearchProblem& p, const SearchResult& r) {
  return {{"n", p.n},
          {"c", p.c},
          {"pattern", to_string(p.pattern)},
          {"class", to_string(p.graph_class)},
          {"objective", to_string(p.objective)},
          {"optimum", r.optimum},
          {"exhaustive", r.exhaustive},
          {"explored", r.explored},
          {"witness", to_json(r.witness)}};
}

json to_json(const Scenario& s) {
  json groups = json::array();
  for (const Group& g : s.groups)
    groups.push_back({{"name", g.name}, {"type", to_string(g.type)}, {"vertices", g.vertices}});
  json fixed = json::array();
  for (const FixedEdge& e : s.fixed_edges) fixed.push_back({e.color, e.from, e.to, e.present});
  json cons = json::array();
  for (const Constraint& c : s.constraints) cons.push_back(constraint_json(c));
  json j = {{"id", s.id},
            {"source", s.source},
            {"description", s.description},
            {"c", s.c},
            {"vertices", s.vertices},
            {"groups", groups},
            {"fixed_edges", fixed},
            {"constraints", cons},
            {"objective",
             {{"colors", s.objective.colors}, {"side_a", s.objective.side_a}, {"side_b", s.objective.side_b}}},
            {"bound", rational_json(s.bound)}};
  if (!s.entry.empty() && s.entry != s.id) j["entry"] = s.entry;
  return j;
}

Scenario scenario_from_json(const json& j) {
  Scenario s;
  s.id = as_string(field(j, "id"), "id");
  if (j.contains("entry")) s.entry = as_string(j["entry"], "entry");
  if (j.contains("source")) s.source = as_string(j["source"], "source");
  if (j.contains("description")) s.description = as_string(j["description"], "description");
  s.c = j.contains("c") ? as_int(j["c"], "c") : 3;
  for (const auto& v : as_array(field(j, "vertices"), "vertices")) s.vertices.push_back(as_string(v, "vertex"));
  if (j.contains("groups"))
    for (const auto& g : as_array(j["groups"], "groups")) {
      Group grp;
      grp.name = g.contains("name") ? as_string(g["name"], "group name") : "";
      const std::string type = as_string(field(g, "type"), "group type");
      auto t = parse_pair_type(type);
      if (!t) fail("unknown pair type '" + type + "'");
      grp.type = *t;
      grp.vertices = int_list(field(g, "vertices"), "group vertices");
      s.groups.push_back(std::move(grp));
    }
  if (j.contains("fixed_edges"))
    for (const auto& e : as_array(j["fixed_edges"], "fixed_edges")) {
      if (!e.is_array() || e.size() != 4 || !e[3].is_boolean())
        fail("each fixed edge must be [color, from, to, present]");
      s.fixed_edges.push_back({as_int(e[0], "color"), as_int(e[1], "from"), as_int(e[2], "to"), e[3].get<bool>()});
    }
  if (j.contains("constraints"))
    for (const auto& c : as_array(j["constraints"], "constraints")) s.constraints.push_back(constraint_from(c));
  const json& obj = field(j, "objective");
  s.objective.colors = int_list(field(obj, "colors"), "objective colors");
  s.objective.side_a = int_list(field(obj, "side_a"), "objective side_a");
  s.objective.side_b = int_list(field(obj, "side_b"), "objective side_b");
  s.bound = rational_from(field(j, "bound"));
  validate(s);
  return s;
}

json catalogue_to_json(const std::vector<Scenario>& scenarios) {
  json out = json::array();
  for (const Scenario& s : scenarios) out.push_back(to_json(s));
  return out;
}

std::vector<Scenario> catalogue_from_json(const json& j) {
  std::vector<Scenario> out;
  for (const auto& s : as_array(j, "catalogue")) out.push_back(scenario_from_json(s));
  return out;
}

json to_json(const BoundEntry& e) {
  json j = {{"id", e.id},
            {"source", e.source},
            {"bound", rational_json(e.bound)},
            {"bound_text", e.bound.str()},
            {"computed", e.computed ? json(*e.computed) : json(nullptr)},
            {"feasible", e.computed.has_value()},
            {"status", to_string(e.status)},
            {"cases", e.cases.size()},
            {"nodes", e.nodes}};
  if (e.computed) {
    j["argmax_case"] = e.argmax_case;
    j["witness"] = to_json(e.witness);
  }
  return j;
}

json entries_to_json(const std::vector<BoundEntry>& entries) {
  json list = json::array();
  std::size_t verified = 0, tight = 0, violated = 0;
  for (const BoundEntry& e : entries) {
    list.push_back(to_json(e));
    switch (e.status) {
      case BoundStatus::Verified: ++verified; break;
      case BoundStatus::Tight: ++tight; break;
      case BoundStatus::Violated: ++violated; break;
    }
  }
  json violated_ids = json::array();
  for (const BoundEntry& e : entries)
    if (e.status == BoundStatus::Violated) violated_ids.push_back(e.id);
  return {{"entries", list},
          {"summary",
           {{"total", entries.size()},
            {"verified", verified},
            {"tight", tight},
            {"violated", violated},
            {"violated_ids", violated_ids}}}};
}

json to_json(const optcheck::LemmaResult& r) {
  json edges = json::array();
  for (const auto& e : r.witness) edges.push_back({e[0], e[1]});
  return {{"a", r.a},
          {"b", r.b},
          {"maximum", r.maximum},
          {"bound", r.bound},
          {"strong_bound", r.strong_bound},
          {"within_bound", r.maximum <= r.bound},
          {"witness_edges", edges},
          {"nodes", r.nodes}};
}

json to_json(const optcheck::ScanReport& r) {
  return {{"step", r.step},
          {"polish_iters", r.polish_iters},
          {"strict", r.strict},
          {"grid_points", r.grid_points},
          {"grid_max", r.grid_max},
          {"grid_argmax", point_json(r.grid_argmax)},
          {"max_slack", r.max_slack},
          {"argmax", point_json(r.argmax)},
          {"slacks_at_argmax", {r.slacks_at_argmax[0], r.slacks_at_argmax[1]}},
          {"distance_to_expected", r.distance_to_expected},
          {"linear_violation", r.linear_violation},
          {"feasible", r.feasible},
          {"pass", r.pass}};
}

json to_json(const optcheck::ThresholdTable& t) {
  json constants = json::array();
  for (const auto& c : t.constants)
    constants.push_back({{"name", c.name},
                         {"description", c.description},
                         {"rational_part", c.value.a().str()},
                         {"sqrt7_part", c.value.b().str()},
                         {"exact", c.value.str()},
                         {"decimal", c.decimal}});
  json identities = json::array();
  for (const auto& i : t.identities) identities.push_back({{"identity", i.name}, {"holds", i.holds}});
  return {{"constants", constants}, {"identities", identities}, {"pass", t.pass}};
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace rtlab::json_io
