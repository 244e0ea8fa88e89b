#include <array>
#include <set>

#include "rtlab/scenario.hpp"

// Built-in catalogues. Each scenario carries its own explicit constraint list;
// the shipped JSON files under data/catalogues are serializations of these.
namespace rtlab::scenario {

namespace {

const std::array<std::string, 10> kTableTypes = {"X12", "X13", "X23", "Y1", "Y2",
                                                 "Y3",  "Z1",  "Z2",  "Z3", "R"};

// Maximum edges between two blocks of the matching decomposition, all colors.
constexpr int kTable[10][10] = {
    {16, 12, 12, 12, 12, 12, 14, 14, 12, 7}, {12, 16, 12, 12, 12, 12, 14, 12, 14, 7},
    {12, 12, 16, 12, 12, 12, 12, 14, 14, 7}, {12, 12, 12, 13, 12, 12, 13, 12, 12, 7},
    {12, 12, 12, 12, 13, 12, 12, 13, 12, 7}, {12, 12, 12, 12, 12, 13, 12, 12, 13, 7},
    {14, 14, 12, 13, 12, 12, 12, 12, 12, 6}, {14, 12, 14, 12, 13, 12, 12, 12, 12, 6},
    {12, 14, 14, 12, 12, 13, 12, 12, 12, 6}, {7, 7, 7, 7, 7, 7, 6, 6, 6, 3},
};

PairType type_of(const std::string& s) { return *parse_pair_type(s); }

bool is_x(const PairType& t) { return t.kind == PairKind::X; }
bool is_xy(const PairType& t) { return t.kind == PairKind::X || t.kind == PairKind::Y; }
bool is_r(const PairType& t) { return t.kind == PairKind::R; }

// Rules valid between the blocks of the matching decomposition after the
// pruning step: no rainbow directed triangle, no pair with 6 edges,
// maximality of the X, Y and Z matchings, and the one-partner rules.
std::vector<Constraint> decomposition_rules(const std::vector<Group>& groups, int k) {
  std::vector<PairType> role(static_cast<std::size_t>(k), PairType{PairKind::Free, 0, 0});
  for (const Group& g : groups)
    for (int v : g.vertices) role[static_cast<std::size_t>(v)] = g.type;

  std::vector<Constraint> out;
  out.push_back(rule::NoRainbow{TriangleKind::Directed});
  out.push_back(rule::MaxPairEdges{5, {}});

  rule::ForbidClass outside_x{PairClass::DoubleDouble, {}};
  rule::ForbidClass outside_xy{PairClass::FourEdges, {}};
  rule::ForbidClass inside_r{PairClass::DoubleSingle, {}};
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const auto& ra = role[static_cast<std::size_t>(a)];
      const auto& rb = role[static_cast<std::size_t>(b)];
      if (!is_x(ra) && !is_x(rb)) outside_x.pairs.push_back({a, b});
      if (!is_xy(ra) && !is_xy(rb)) outside_xy.pairs.push_back({a, b});
      if (is_r(ra) && is_r(rb)) inside_r.pairs.push_back({a, b});
    }
  if (!outside_x.pairs.empty()) out.push_back(outside_x);
  if (!outside_xy.pairs.empty()) out.push_back(outside_xy);
  if (!inside_r.pairs.empty()) out.push_back(inside_r);

  for (const Group& g : groups) {
    if (g.vertices.size() != 2) continue;
    const VertexPair pr{g.vertices[0], g.vertices[1]};
    for (int w = 0; w < k; ++w) {
      if (w == pr.first || w == pr.second) continue;
      const auto& rw = role[static_cast<std::size_t>(w)];
      if (g.type.kind == PairKind::X && !is_x(rw))
        out.push_back(rule::AtMostOne{PairClass::DoubleDouble, w, pr});
      if (g.type.kind == PairKind::Y && !is_xy(rw))
        out.push_back(rule::AtMostOne{PairClass::FourEdges, w, pr});
      if (g.type.kind == PairKind::Z && is_r(rw))
        out.push_back(rule::AtMostOne{PairClass::DoubleSingle, w, pr});
    }
  }
  return out;
}

// Two blocks (pairs or R vertices) of the decomposition; the objective counts
// `colors` between them.
Scenario block_scenario(const std::string& id, const std::string& entry, const std::string& source,
                        const std::string& first, const std::string& second,
                        std::vector<Color> colors, Rational bound) {
  Scenario s;
  s.id = id;
  s.entry = entry;
  s.source = source;
  s.c = 3;
  const PairType ta = type_of(first);
  const PairType tb = type_of(second);
  auto add_block = [&](const PairType& t, const std::string& label) {
    Group g;
    g.name = label;
    g.type = t;
    const int width = is_r(t) ? 1 : 2;
    for (int w = 0; w < width; ++w) {
      g.vertices.push_back(static_cast<int>(s.vertices.size()));
      s.vertices.push_back(label + (width == 1 ? "" : std::to_string(w)));
    }
    s.groups.push_back(g);
    return g.vertices;
  };
  const auto va = add_block(ta, "P");
  const auto vb = add_block(tb, "Q");
  s.description = "edges in colors {";
  for (std::size_t t = 0; t < colors.size(); ++t)
    s.description += (t ? "," : "") + std::to_string(colors[t]);
  s.description += "} between blocks of types " + first + " and " + second;
  s.constraints = decomposition_rules(s.groups, static_cast<int>(s.vertices.size()));
  s.objective = Objective{std::move(colors), va, vb};
  s.bound = bound;
  return s;
}

std::vector<Scenario> table10x10() {
  std::vector<Scenario> out;
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t c = 0; c < 10; ++c) {
      const std::string id = "table/" + kTableTypes[r] + "-" + kTableTypes[c];
      out.push_back(block_scenario(id, id, "total-edge table between decomposition blocks",
                                   kTableTypes[r], kTableTypes[c], {1, 2, 3},
                                   Rational{kTable[r][c], 1}));
    }
  return out;
}

std::string x_name(Color a, Color b) {
  return "X" + std::to_string(std::min(a, b)) + std::to_string(std::max(a, b));
}
std::string y_name(Color a) { return "Y" + std::to_string(a); }
std::string z_name(Color a) { return "Z" + std::to_string(a); }

std::vector<Scenario> pair_sum_bounds() {
  const std::string src = "two-color edge bounds between decomposition blocks";
  std::vector<Scenario> out;
  const std::array<std::pair<Color, Color>, 3> color_pairs{{{1, 2}, {1, 3}, {2, 3}}};
  for (const auto& [i, j] : color_pairs) {
    const Color k = 6 - i - j;
    const std::string tag = std::to_string(i) + std::to_string(j);
    auto add = [&](const std::string& entry, const std::string& a, const std::string& b,
                   Rational bound) {
      out.push_back(block_scenario("pair_sum/" + entry + "/c" + tag + "/" + a + "-" + b,
                                   "pair_sum/" + entry, src, a, b, {i, j}, bound));
    };
    const std::string xij = x_name(i, j);
    const std::vector<std::string> ys{y_name(i), y_name(j)};
    const std::vector<std::string> zs{z_name(i), z_name(j)};

    add("X_ij-X_ij", xij, xij, {16, 1});
    for (const auto& y : ys) add("X_ij-Y_ij", xij, y, {40, 3});
    for (const auto& z : zs) add("X_ij-Z_ij", xij, z, {14, 1});
    add("Y_ij-Y_ij", ys[0], ys[0], {104, 9});
    add("Y_ij-Y_ij", ys[0], ys[1], {104, 9});
    add("Y_ij-Y_ij", ys[1], ys[1], {104, 9});
    for (const auto& y : ys)
      for (const auto& z : zs) add("Y_ij-Z_ij", y, z, {12, 1});
    add("Z_ij-Z_ij", zs[0], zs[0], {12, 1});
    add("Z_ij-Z_ij", zs[0], zs[1], {12, 1});
    add("Z_ij-Z_ij", zs[1], zs[1], {12, 1});

    // Every remaining block combination involves a block with a double edge in k.
    const std::vector<std::string> relevant{xij, ys[0], ys[1], zs[0], zs[1]};
    const std::vector<std::string> other{x_name(i, k), x_name(j, k), y_name(k), z_name(k)};
    std::vector<std::string> all = relevant;
    all.insert(all.end(), other.begin(), other.end());
    std::set<std::pair<std::string, std::string>> done;
    for (const auto& a : other)
      for (const auto& b : all) {
        auto key = std::minmax(a, b);
        if (!done.insert({key.first, key.second}).second) continue;
        add("other-other", key.first, key.second, {8, 1});
      }

    add("X_ij-R", xij, "R", {7, 1});
    for (const auto& y : ys) add("Y_ij-R", y, "R", {6, 1});
    for (const auto& z : zs) add("Z_ij-R", z, "R", {11, 2});
    for (const auto& o : other) add("other-R", o, "R", {4, 1});
    add("R-R", "R", "R", {2, 1});
  }
  return out;
}

std::vector<Scenario> total_bounds() {
  const std::string src = "total edge bounds between decomposition blocks";
  std::vector<Scenario> out;
  auto add = [&](const std::string& entry, const std::string& a, const std::string& b, Rational bound) {
    out.push_back(block_scenario("total/" + entry + "/" + a + "-" + b, "total/" + entry, src, a, b,
                                 {1, 2, 3}, bound));
  };
  const std::array<std::pair<Color, Color>, 3> color_pairs{{{1, 2}, {1, 3}, {2, 3}}};
  for (const auto& [i, j] : color_pairs) add("X_ij-X_ij", x_name(i, j), x_name(i, j), {16, 1});
  for (const auto& [i, j] : color_pairs)
    for (Color y : {i, j}) add("X_ij-Y_ij", x_name(i, j), y_name(y), {27, 2});
  for (const auto& [i, j] : color_pairs)
    for (Color z : {i, j}) add("X_ij-Z_ij", x_name(i, j), z_name(z), {14, 1});
  for (Color i = 1; i <= 3; ++i) add("Y_i-Y_i", y_name(i), y_name(i), {105, 8});
  for (Color i = 1; i <= 3; ++i)
    for (Color j = i + 1; j <= 3; ++j) add("Y_i-Y_j", y_name(i), y_name(j), {201, 16});
  for (Color i = 1; i <= 3; ++i) add("Y_i-Z_i", y_name(i), z_name(i), {13, 1});
  for (Color i = 1; i <= 3; ++i)
    for (Color j = 1; j <= 3; ++j)
      if (i != j) add("Y_i-Z_j", y_name(i), z_name(j), {25, 2});
  // Remaining combinations: distinct X types, X with the Y or Z of its missing
  // color, and any two Z blocks.
  for (const auto& [i, j] : color_pairs) {
    const Color k = 6 - i - j;
    for (const auto& [a, b] : color_pairs)
      if (std::pair{a, b} > std::pair{i, j}) add("other", x_name(i, j), x_name(a, b), {12, 1});
    add("other", x_name(i, j), y_name(k), {12, 1});
    add("other", x_name(i, j), z_name(k), {12, 1});
  }
  for (Color i = 1; i <= 3; ++i)
    for (Color j = i; j <= 3; ++j) add("other", z_name(i), z_name(j), {12, 1});
  // Only Z blocks meet the 6-edge bound to an R vertex locally; X and Y blocks
  // can reach 7 and are handled by the global bipartite counting argument.
  for (Color i = 1; i <= 3; ++i) add("block-R", z_name(i), "R", {6, 1});
  add("R-R", "R", "R", {3, 1});
  return out;
}

// Plain scenario on named vertices without decomposition roles.
Scenario plain(const std::string& id, const std::string& entry, const std::string& source, int c,
               std::vector<std::string> names) {
  Scenario s;
  s.id = id;
  s.entry = entry;
  s.source = source;
  s.c = c;
  s.vertices = std::move(names);
  return s;
}

void add_double(Scenario& s, Color color, int u, int v) {
  s.fixed_edges.push_back({color, u, v, true});
  s.fixed_edges.push_back({color, v, u, true});
}

std::vector<Color> all_colors(int c) {
  std::vector<Color> out;
  for (Color i = 1; i <= c; ++i) out.push_back(i);
  return out;
}

std::vector<Scenario> local_claims() {
  std::vector<Scenario> out;

  // Pair with double edges in colors 1 and 3: every outside vertex sends at
  // most 4 edges to it in any two cyclically consecutive colors.
  for (int c : {4, 5}) {
    const std::string entry = "local/two-double-pair-consecutive-colors/c" + std::to_string(c);
    for (Color k = 1; k <= c; ++k) {
      const Color k2 = k == c ? 1 : k + 1;
      Scenario s = plain(entry + "/k" + std::to_string(k), entry,
                         "directed, c>=4: pair with two double edges", c, {"u", "v", "x"});
      add_double(s, 1, 0, 1);
      add_double(s, 3, 0, 1);
      s.constraints = {rule::NoRainbow{TriangleKind::Directed}};
      s.objective = Objective{{k, k2}, {2}, {0, 1}};
      s.bound = {4, 1};
      s.description = "e_k + e_k+1 from x to a pair doubled in colors 1 and 3";
      out.push_back(std::move(s));
    }
  }

  // Two heavy pairs (c+1 edges, >=3 one way) sharing their tail or head leave
  // at most 2 edges between the other endpoints.
  for (int c : {4, 5}) {
    const std::string entry = "local/heavy-star-ends/c" + std::to_string(c);
    for (bool out_star : {true, false}) {
      Scenario s = plain(entry + (out_star ? "/out" : "/in"), entry,
                         "directed, c>=4: heavy pairs with a common endpoint", c, {"u", "v", "w"});
      s.constraints = {rule::NoRainbow{TriangleKind::Directed},
                       rule::PairEdges{{0, 1}, {}, c + 1, c + 1},
                       rule::PairEdges{{0, 2}, {}, c + 1, c + 1}};
      if (out_star) {
        s.constraints.push_back(rule::MinDirected{0, 1, 3});
        s.constraints.push_back(rule::MinDirected{0, 2, 3});
      } else {
        s.constraints.push_back(rule::MinDirected{1, 0, 3});
        s.constraints.push_back(rule::MinDirected{2, 0, 3});
      }
      s.objective = Objective{all_colors(c), {1}, {2}};
      s.bound = {2, 1};
      s.description = "edges between v and w when uv, uw (or vu, wu) are heavy";
      out.push_back(std::move(s));
    }
  }

  // Pair with double edges in all three colors: any vertex sends at most 4
  // edges to it in any two colors.
  {
    const std::string entry = "local/triple-double-pair";
    for (auto [i, j] : std::array<std::pair<Color, Color>, 3>{{{1, 2}, {1, 3}, {2, 3}}}) {
      Scenario s = plain(entry + "/c" + std::to_string(i) + std::to_string(j), entry,
                         "directed, c=3: pair with six edges", 3, {"x", "y", "v"});
      for (Color col = 1; col <= 3; ++col) add_double(s, col, 0, 1);
      s.constraints = {rule::NoRainbow{TriangleKind::Directed}};
      s.objective = Objective{{i, j}, {2}, {0, 1}};
      s.bound = {4, 1};
      s.description = "e_i + e_j from v to a pair doubled in every color";
      out.push_back(std::move(s));
    }
  }

  // Edge of color k inside {u, v} limits colors i, j from any w to {u, v}.
  for (bool dbl : {false, true}) {
    const std::string entry = dbl ? "local/third-color-double" : "local/third-color-single";
    for (Color k = 1; k <= 3; ++k) {
      const Color i = k == 1 ? 2 : 1;
      const Color j = 6 - k - i;
      for (bool forward : {true, false}) {
        if (dbl && !forward) continue;
        Scenario s = plain(entry + "/k" + std::to_string(k) + (dbl ? "" : (forward ? "/uv" : "/vu")),
                           entry, "directed, c=3: edge of the third color inside a pair", 3,
                           {"u", "v", "w"});
        s.fixed_edges.push_back({k, 0, 1, dbl || forward});
        s.fixed_edges.push_back({k, 1, 0, dbl || !forward});
        s.constraints = {rule::NoRainbow{TriangleKind::Directed}};
        s.objective = Objective{{i, j}, {2}, {0, 1}};
        s.bound = {dbl ? 4 : 6, 1};
        s.description = "e_i + e_j from w to {u,v} when e_k(u,v) = " + std::string(dbl ? "2" : "1");
        out.push_back(std::move(s));
      }
    }
  }

  // Transitive, c=4: pair doubled in colors 1 and 2, x adjacent to both.
  {
    const std::string entry = "local/two-double-pair-touching/c4";
    Scenario s = plain(entry, entry, "transitive, c>=4: pair with two double edges", 4,
                       {"u", "v", "x"});
    add_double(s, 1, 0, 1);
    add_double(s, 2, 0, 1);
    s.constraints = {rule::NoRainbow{TriangleKind::Transitive}, rule::PairEdges{{2, 0}, {}, 1, {}},
                     rule::PairEdges{{2, 1}, {}, 1, {}}};
    s.objective = Objective{all_colors(4), {2}, {0, 1}};
    s.bound = {8, 1};
    s.description = "edges from x to a doubly-doubled pair when x touches both ends";
    out.push_back(std::move(s));
  }

  // Transitive, c=4, at most one double color per pair: pair doubled in
  // color 1, split by whether x meets both ends in a common other color.
  {
    const std::string common = "local/double-pair-common-color/c4";
    for (Color j = 2; j <= 4; ++j) {
      Scenario s = plain(common + "/j" + std::to_string(j), common,
                         "transitive, c>=4: pair with one double edge", 4, {"u", "v", "x"});
      add_double(s, 1, 0, 1);
      s.constraints = {rule::NoRainbow{TriangleKind::Transitive}, rule::MaxDoubles{1, {}},
                       rule::PairEdges{{2, 0}, {j}, 1, {}}, rule::PairEdges{{2, 1}, {j}, 1, {}}};
      s.objective = Objective{all_colors(4), {2}, {0, 1}};
      s.bound = {6, 1};
      s.description = "edges from x to a pair doubled in color 1, x meets both ends in color j";
      out.push_back(std::move(s));
    }
    const std::string other = "local/double-pair-no-common-color/c4";
    Scenario s = plain(other, other, "transitive, c>=4: pair with one double edge", 4,
                       {"u", "v", "x"});
    add_double(s, 1, 0, 1);
    s.constraints = {rule::NoRainbow{TriangleKind::Transitive}, rule::MaxDoubles{1, {}},
                     rule::NoCommonColor{{2, 0}, {2, 1}, {2, 3, 4}}};
    s.objective = Objective{all_colors(4), {2}, {0, 1}};
    s.bound = {4 + 3, 1};
    s.description = "edges from x to a pair doubled in color 1, no common other color";
    out.push_back(std::move(s));
  }

  // Oriented, transitive pattern.
  for (int c : {3, 4}) {
    const std::string entry = "local/thick-path-neighbour/c" + std::to_string(c);
    Scenario s = plain(entry, entry, "oriented, c>=3: thick path", c, {"u", "v", "w", "x"});
    s.constraints = {rule::Oriented{}, rule::NoRainbow{TriangleKind::Transitive},
                     rule::MinDirected{0, 1, 3}, rule::MinDirected{1, 2, 3}};
    s.objective = Objective{all_colors(c), {3}, {0, 1, 2}};
    s.bound = {2 * c, 1};
    s.description = "edges from x to a thick path u->v->w";
    out.push_back(std::move(s));
  }
  for (int c : {3, 4}) {
    const std::string entry = "local/heavy-pair-neighbour/c" + std::to_string(c);
    Scenario s = plain(entry, entry, "oriented, c>=3: pair with at least 3 edges", c,
                       {"u", "v", "x"});
    s.constraints = {rule::Oriented{}, rule::NoRainbow{TriangleKind::Transitive},
                     rule::NoThickPath{}, rule::PairEdges{{0, 1}, {}, 3, {}}};
    s.objective = Objective{all_colors(c), {2}, {0, 1}};
    s.bound = {c + 1, 1};
    s.description = "edges from x to a pair with at least 3 edges, no thick path";
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<std::string> builtin_catalogue_names() {
  return {"table10x10", "pair_sum_bounds", "total_bounds", "local_claims"};
}

std::vector<Scenario> builtin_catalogue(std::string_view name) {
  if (name == "table10x10") return table10x10();
  if (name == "pair_sum_bounds") return pair_sum_bounds();
  if (name == "total_bounds") return total_bounds();
  if (name == "local_claims") return local_claims();
  throw InputError("unknown catalogue '" + std::string(name) + "'");
}

}  // namespace rtlab::scenario
