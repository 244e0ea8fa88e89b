#include "rtlab/rtlab.h"

#include <cstring>
#include <new>
#include <string>

#include "rtlab/constructions.hpp"
#include "rtlab/json_io.hpp"
#include "rtlab/optcheck.hpp"
#include "rtlab/patterns.hpp"
#include "rtlab/scenario.hpp"
#include "rtlab/search.hpp"

struct rt_graph {
  rtlab::ColoredDigraph g;
};

namespace {

using rtlab::json_io::json;

thread_local std::string last_error;

rt_status fail(rt_status code, std::string msg) {
  last_error = std::move(msg);
  return code;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
rt_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const rtlab::InputError& e) {
    return fail(RT_E_INVALID_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RT_E_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(RT_E_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RT_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RT_E_INTERNAL, e.what());
  } catch (...) {
    return fail(RT_E_INTERNAL, "unknown error");
  }
}

char* copy_out(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rtlab::TriangleKind pattern_of(const char* s) {
  if (!s) throw rtlab::InputError("pattern is null");
  auto k = rtlab::parse_triangle_kind(s);
  if (!k) throw rtlab::InputError(std::string("unknown pattern '") + s + "'");
  return *k;
}

rtlab::ConstructionSpec spec_of(const char* id, int n, int c) {
  if (!id) throw rtlab::InputError("construction id is null");
  auto cid = rtlab::parse_construction_id(id);
  if (!cid) throw rtlab::InputError(std::string("unknown construction '") + id + "'");
  return {*cid, n, c};
}

json parse_json(const char* text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw rtlab::InputError(std::string("malformed JSON: ") + e.what());
  }
}

#define RT_REQUIRE(ptr) \
  if (!(ptr)) return fail(RT_E_NULL_POINTER, #ptr " is null")

}  // namespace

extern "C" {

const char* rt_version(void) { return "1.0.0"; }

const char* rt_last_error(void) { return last_error.c_str(); }

void rt_string_free(char* s) { delete[] s; }

rt_status rt_graph_new(int n, int c, rt_graph** out) {
  RT_REQUIRE(out);
  return guarded([&] {
    *out = new rt_graph{rtlab::GraphBuilder(n, c).build()};
    return RT_OK;
  });
}

rt_status rt_graph_from_json(const char* text, rt_graph** out) {
  RT_REQUIRE(text);
  RT_REQUIRE(out);
  return guarded([&] {
    *out = new rt_graph{rtlab::json_io::parse_graph(text)};
    return RT_OK;
  });
}

void rt_graph_free(rt_graph* g) { delete g; }

rt_status rt_graph_add_edge(rt_graph* g, int color, int from, int to) {
  RT_REQUIRE(g);
  return guarded([&] {
    g->g = rtlab::add_edge(g->g, {color, from, to});
    return RT_OK;
  });
}

rt_status rt_graph_to_json(const rt_graph* g, char** out) {
  RT_REQUIRE(g);
  RT_REQUIRE(out);
  return guarded([&] {
    *out = copy_out(rtlab::json_io::dump_graph(g->g));
    return RT_OK;
  });
}

rt_status rt_graph_dims(const rt_graph* g, int* n, int* c) {
  RT_REQUIRE(g);
  if (n) *n = g->g.n();
  if (c) *c = g->g.c();
  return RT_OK;
}

rt_status rt_graph_count_color(const rt_graph* g, int color, uint64_t* out) {
  RT_REQUIRE(g);
  RT_REQUIRE(out);
  return guarded([&] {
    *out = g->g.count_color(color);
    return RT_OK;
  });
}

rt_status rt_graph_count_total(const rt_graph* g, uint64_t* out) {
  RT_REQUIRE(g);
  RT_REQUIRE(out);
  *out = g->g.count_total();
  return RT_OK;
}

rt_status rt_graph_is_oriented(const rt_graph* g, int* out) {
  RT_REQUIRE(g);
  RT_REQUIRE(out);
  *out = g->g.is_oriented() ? 1 : 0;
  return RT_OK;
}

rt_status rt_graph_count_between(const rt_graph* g, int color, const int* u, int nu, const int* v,
                                 int nv, uint64_t* out) {
  RT_REQUIRE(g);
  RT_REQUIRE(out);
  if ((nu > 0 && !u) || (nv > 0 && !v)) return fail(RT_E_NULL_POINTER, "vertex list is null");
  if (nu < 0 || nv < 0) return fail(RT_E_INVALID_ARGUMENT, "negative vertex list length");
  return guarded([&] {
    *out = g->g.count_between(color, std::span<const int>(u, static_cast<std::size_t>(nu)),
                              std::span<const int>(v, static_cast<std::size_t>(nv)));
    return RT_OK;
  });
}

rt_status rt_graph_equal(const rt_graph* a, const rt_graph* b, int* out) {
  RT_REQUIRE(a);
  RT_REQUIRE(b);
  RT_REQUIRE(out);
  *out = a->g == b->g ? 1 : 0;
  return RT_OK;
}

rt_status rt_detect(const rt_graph* g, const char* pattern, int* found, char** witness_json) {
  RT_REQUIRE(pattern);
  RT_REQUIRE(g);
  RT_REQUIRE(found);
  return guarded([&] {
    const auto w = rtlab::find_rainbow(g->g, pattern_of(pattern));
    *found = w ? 1 : 0;
    if (witness_json) *witness_json = w ? copy_out(rtlab::json_io::to_json(*w).dump()) : nullptr;
    return RT_OK;
  });
}

rt_status rt_count_rainbow(const rt_graph* g, const char* pattern, uint64_t* out) {
  RT_REQUIRE(pattern);
  RT_REQUIRE(g);
  RT_REQUIRE(out);
  return guarded([&] {
    *out = rtlab::count_rainbow(g->g, pattern_of(pattern));
    return RT_OK;
  });
}

rt_status rt_build_h(const rt_graph* g, rt_graph** out) {
  RT_REQUIRE(g);
  RT_REQUIRE(out);
  return guarded([&] {
    *out = new rt_graph{rtlab::build_H(g->g)};
    return RT_OK;
  });
}

rt_status rt_construct(const char* id, int n, int c, rt_graph** out) {
  RT_REQUIRE(id);
  RT_REQUIRE(out);
  return guarded([&] {
    *out = new rt_graph{rtlab::build_construction(spec_of(id, n, c))};
    return RT_OK;
  });
}

rt_status rt_expected_count(const char* id, int n, int c, int color, uint64_t* out) {
  RT_REQUIRE(id);
  RT_REQUIRE(out);
  return guarded([&] {
    *out = rtlab::expected_count(spec_of(id, n, c), color);
    return RT_OK;
  });
}

rt_status rt_construction_report(const char* id, int n, int c, char** out_json) {
  RT_REQUIRE(id);
  RT_REQUIRE(out_json);
  return guarded([&] {
    const auto spec = spec_of(id, n, c);
    const auto g = rtlab::build_construction(spec);
    const auto pattern = rtlab::avoided_pattern(spec.id);
    json counts = json::array(), expected = json::array();
    bool match = true;
    for (int col = 1; col <= g.c(); ++col) {
      const auto got = g.count_color(col);
      const auto want = rtlab::expected_count(spec, col);
      counts.push_back(got);
      expected.push_back(want);
      match = match && got == want;
    }
    const bool pattern_free = !rtlab::find_rainbow(g, pattern);
    json per_color_ratio = json::array();
    for (const auto& v : counts)
      per_color_ratio.push_back(n > 0 ? v.get<double>() / (static_cast<double>(n) * n) : 0.0);
    const json report = {{"id", rtlab::to_string(spec.id)},
                         {"n", g.n()},
                         {"c", g.c()},
                         {"pattern", rtlab::to_string(pattern)},
                         {"counts", counts},
                         {"expected", expected},
                         {"counts_match", match},
                         {"pattern_free", pattern_free},
                         {"density", per_color_ratio},
                         {"pass", match && pattern_free}};
    *out_json = copy_out(report.dump());
    return RT_OK;
  });
}

rt_status rt_search(int n, int c, const char* pattern, const char* graph_class, const char* objective,
                    uint64_t max_nodes, char** out_json) {
  RT_REQUIRE(pattern);
  RT_REQUIRE(graph_class);
  RT_REQUIRE(objective);
  RT_REQUIRE(out_json);
  return guarded([&] {
    rtlab::SearchProblem p;
    p.n = n;
    p.c = c;
    p.pattern = pattern_of(pattern);
    auto gc = rtlab::parse_graph_class(graph_class);
    if (!gc) throw rtlab::InputError(std::string("unknown graph class '") + graph_class + "'");
    auto ob = rtlab::parse_objective(objective);
    if (!ob) throw rtlab::InputError(std::string("unknown objective '") + objective + "'");
    p.graph_class = *gc;
    p.objective = *ob;
    rtlab::SearchBudget budget;
    budget.max_nodes = max_nodes;
    const auto r = rtlab::solve(p, budget);
    *out_json = copy_out(rtlab::json_io::to_json(p, r).dump());
    return RT_OK;
  });
}

rt_status rt_catalogue_names(char** out_json) {
  RT_REQUIRE(out_json);
  return guarded([&] {
    *out_json = copy_out(json(rtlab::scenario::builtin_catalogue_names()).dump());
    return RT_OK;
  });
}

rt_status rt_catalogue_builtin(const char* name, char** out_json) {
  RT_REQUIRE(name);
  RT_REQUIRE(out_json);
  return guarded([&] {
    *out_json = copy_out(rtlab::json_io::catalogue_to_json(rtlab::scenario::builtin_catalogue(name)).dump(1));
    return RT_OK;
  });
}

namespace {

rt_status run_scenarios(const std::vector<rtlab::scenario::Scenario>& scenarios, int jobs, int* violated,
                        char** out_json) {
  const auto entries = rtlab::scenario::run_catalogue(scenarios, jobs);
  if (violated) *violated = rtlab::scenario::any_violated(entries) ? 1 : 0;
  *out_json = copy_out(rtlab::json_io::entries_to_json(entries).dump());
  return RT_OK;
}

}  // namespace

rt_status rt_catalogue_run(const char* catalogue_json, int jobs, int* violated, char** out_json) {
  RT_REQUIRE(catalogue_json);
  RT_REQUIRE(out_json);
  return guarded([&] {
    return run_scenarios(rtlab::json_io::catalogue_from_json(parse_json(catalogue_json)), jobs, violated,
                         out_json);
  });
}

rt_status rt_catalogue_run_builtin(const char* name, int jobs, int* violated, char** out_json) {
  RT_REQUIRE(name);
  RT_REQUIRE(out_json);
  return guarded([&] {
    return run_scenarios(rtlab::scenario::builtin_catalogue(name), jobs, violated, out_json);
  });
}

rt_status rt_lemma21(int a, int b, char** out_json) {
  RT_REQUIRE(out_json);
  return guarded([&] {
    *out_json = copy_out(rtlab::json_io::to_json(rtlab::optcheck::lemma21_oracle(a, b)).dump());
    return RT_OK;
  });
}

rt_status rt_optscan(double step, int polish_iters, int strict, int jobs, char** out_json) {
  RT_REQUIRE(out_json);
  return guarded([&] {
    rtlab::optcheck::ScanParams p;
    p.step = step;
    p.polish_iters = polish_iters;
    p.strict = strict != 0;
    p.jobs = jobs;
    *out_json = copy_out(rtlab::json_io::to_json(rtlab::optcheck::scan_constraint_system(p)).dump());
    return RT_OK;
  });
}

rt_status rt_thresholds(char** out_json) {
  RT_REQUIRE(out_json);
  return guarded([&] {
    *out_json = copy_out(rtlab::json_io::to_json(rtlab::optcheck::thresholds()).dump());
    return RT_OK;
  });
}

rt_status rt_digest(const char* bytes, uint64_t len, char** out_hex) {
  RT_REQUIRE(out_hex);
  if (len > 0 && !bytes) return fail(RT_E_NULL_POINTER, "bytes is null");
  return guarded([&] {
    *out_hex = copy_out(rtlab::json_io::fnv1a_hex(std::string_view(bytes ? bytes : "", len)));
    return RT_OK;
  });
}

}  // extern "C"
