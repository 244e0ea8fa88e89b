#include <algorithm>
#include <stdexcept>

#include "rtlab/optcheck.hpp"

namespace rtlab::optcheck {

namespace {

QuadraticRational q(std::int64_t a_num, std::int64_t b_num, std::int64_t den) {
  return {Rational(a_num, den), Rational(b_num, den)};
}

}  // namespace

ThresholdTable thresholds() {
  ThresholdTable t;
  auto add = [&](std::string name, std::string description, QuadraticRational v) {
    std::string dec = v.decimal(12);
    t.constants.push_back({std::move(name), std::move(description), std::move(v), std::move(dec)});
  };
  add("directed_4plus_per_color", "c >= 4 colors, directed or transitive pattern, per color", q(1, 0, 2));
  add("directed_4plus_total", "c >= 4 colors, directed or transitive pattern, sum over colors / c", q(1, 0, 2));
  add("directed3_per_color", "3 colors, directed pattern, per color", q(5, 0, 9));
  add("directed3_color_pair_sum", "3 colors, directed pattern, any two colors", q(10, 0, 9));
  add("transitive3_per_color", "3 colors, transitive pattern, per color (+3n/2)", q(52, -4, 81));
  add("transitive3_color_pair_sum", "3 colors, transitive pattern, any two colors (+3n)", q(104, -8, 81));
  add("undirected3_per_color", "3 undirected colors, rainbow triangle, per color", q(26, -2, 81));
  add("undirected3_color_pair_sum", "3 undirected colors, rainbow triangle, any two colors (+3n/2)",
      q(52, -4, 81));
  add("oriented_transitive_per_color", "c >= 3 oriented colors, transitive pattern, per color", q(1, 0, 3));
  add("oriented_transitive_total", "c >= 3 oriented colors, transitive pattern, sum over colors / c",
      q(1, 0, 3));
  add("transitive3_small_part", "relative size of each small set of the 3-color transitive construction",
      q(4, -1, 9));
  add("transitive3_large_part", "relative size of the large set of the 3-color transitive construction",
      q(1, 2, 9));

  auto value = [&](const std::string& name) -> const QuadraticRational& {
    for (const auto& c : t.constants)
      if (c.name == name) return c.value;
    throw std::logic_error("missing constant " + name);
  };
  const QuadraticRational two(2);
  const auto& small = value("transitive3_small_part");
  const auto& large = value("transitive3_large_part");

  t.identities = {
      {"transitive3_color_pair_sum == 2 * undirected3_color_pair_sum",
       value("transitive3_color_pair_sum") == two * value("undirected3_color_pair_sum")},
      {"transitive3_per_color == 2 * undirected3_per_color",
       value("transitive3_per_color") == two * value("undirected3_per_color")},
      {"directed3_color_pair_sum == 2 * directed3_per_color",
       value("directed3_color_pair_sum") == two * value("directed3_per_color")},
      {"undirected3_per_color rounds to 0.2557", value("undirected3_per_color").decimal(4) == "0.2557"},
      {"transitive3_per_color rounds to 0.51132", value("transitive3_per_color").decimal(5) == "0.51132"},
      {"2 * small + large == 1", two * small + large == QuadraticRational(1)},
      {"construction colors 1, 2: small^2 + large^2 == transitive3_per_color",
       small * small + large * large == value("transitive3_per_color")},
      {"construction color 3: 4 small^2 + 4 small large == transitive3_per_color",
       QuadraticRational(4) * small * small + QuadraticRational(4) * small * large ==
           value("transitive3_per_color")},
      {"directed3_per_color > transitive3_per_color > directed_4plus_per_color",
       value("directed3_per_color") > value("transitive3_per_color") &&
           value("transitive3_per_color") > value("directed_4plus_per_color")},
  };
  t.pass = std::all_of(t.identities.begin(), t.identities.end(), [](const Identity& i) { return i.holds; });
  return t;
}

}  // namespace rtlab::optcheck
