#include "stonedual/stonedual.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"

#include "stonedual/duality.hpp"
#include "stonedual/filtercomp.hpp"
#include "stonedual/formats.hpp"
#include "stonedual/selftest.hpp"

using nlohmann::json;
using namespace stonedual;

struct sd_table {
  MulTable table;
};
struct sd_graph {
  std::shared_ptr<DirectedGraph> graph;
};

namespace {

thread_local std::string last_error;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

sd_status fail(sd_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
sd_status guard(F&& f) {
  last_error.clear();
  try {
    f();
    return SD_OK;
  } catch (const UsageError& e) {
    return fail(SD_ERR_USAGE, e.what());
  } catch (const ParseError& e) {
    return fail(SD_ERR_PARSE, e.what());
  } catch (const DomainError& e) {
    return fail(SD_ERR_DOMAIN, e.what());
  } catch (const LimitError& e) {
    return fail(SD_ERR_LIMIT, e.what());
  } catch (const InternalError& e) {
    return fail(SD_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SD_ERR_BUFFER, "out of memory");
  } catch (const std::exception& e) {
    return fail(SD_ERR_INTERNAL, e.what());
  }
}

void need(const void* p, const char* what) {
  if (!p) throw UsageError(std::string(what) + " must not be null");
}

void put(char** out, const std::string& s) {
  need(out, "output pointer");
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
}

PolyParams params(unsigned n, unsigned r) {
  if (n < 1 || r < 1) throw UsageError("n and r must be at least 1");
  return {n, r};
}

json names(const MulTable& s, const Bits& b) {
  json a = json::array();
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) a.push_back(s.name(static_cast<Elem>(i)));
  return a;
}

json names(const MulTable& s, const std::vector<Elem>& xs) {
  json a = json::array();
  for (Elem x : xs) a.push_back(s.name(x));
  return a;
}

json group_names(const FiniteGroupoid& g, const Bits& b) {
  json a = json::array();
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) a.push_back(g.names[i]);
  return a;
}

const MulTable& table_of(const sd_table* t) {
  need(t, "table");
  return t->table;
}

}  // namespace

extern "C" {

const char* sd_version(void) { return "0.1.0"; }
const char* sd_last_error(void) { return last_error.c_str(); }
void sd_string_free(char* s) { std::free(s); }

// --- polycyclic -------------------------------------------------------------

sd_status sd_poly_mul(unsigned n, unsigned r, const char* a, const char* b, char** out) {
  return guard([&] {
    need(a, "a"), need(b, "b");
    auto p = params(n, r);
    put(out, format_poly(poly_mul(parse_poly(a, p), parse_poly(b, p))));
  });
}

sd_status sd_poly_meet(unsigned n, unsigned r, const char* a, const char* b, char** out) {
  return guard([&] {
    need(a, "a"), need(b, "b");
    auto p = params(n, r);
    put(out, format_poly(poly_meet(parse_poly(a, p), parse_poly(b, p))));
  });
}

sd_status sd_poly_leq(unsigned n, unsigned r, const char* a, const char* b, int* out) {
  return guard([&] {
    need(a, "a"), need(b, "b"), need(out, "out");
    auto p = params(n, r);
    *out = poly_leq(parse_poly(a, p), parse_poly(b, p));
  });
}

sd_status sd_poly_arrow(unsigned n, unsigned r, const char* a, const char* targets, int* out) {
  return guard([&] {
    need(a, "a"), need(targets, "targets"), need(out, "out");
    auto p = params(n, r);
    auto t = parse_poly_list(targets, p);
    *out = lenz_arrow(parse_poly(a, p), t);
  });
}

sd_status sd_mpc_check(unsigned n, const char* code, int* maximal) {
  return guard([&] {
    need(code, "code"), need(maximal, "out");
    Alphabet a(params(n, 1).n);
    auto c = parse_word_list(code, a);
    *maximal = is_maximal_prefix_code(c, a);
  });
}

sd_status sd_mpc_kraft(unsigned n, const char* code, char** out) {
  return guard([&] {
    need(code, "code");
    Alphabet a(params(n, 1).n);
    auto c = parse_word_list(code, a);
    put(out, kraft_sum(c, a).str());
  });
}

// --- graphs -----------------------------------------------------------------

sd_status sd_graph_parse(const char* text, sd_graph** out) {
  return guard([&] {
    need(text, "text"), need(out, "out");
    *out = new sd_graph{parse_graph(text)};
  });
}

sd_status sd_graph_load(const char* path, sd_graph** out) {
  return guard([&] {
    need(path, "path"), need(out, "out");
    *out = new sd_graph{parse_graph(read_file(path))};
  });
}

void sd_graph_free(sd_graph* g) { delete g; }

sd_status sd_graph_analyze(const sd_graph* g, char** out) {
  return guard([&] {
    need(g, "graph");
    auto p = semilattice_predicates(*g->graph);
    json src = json::array();
    for (auto v : p.sources) src.push_back(g->graph->vertex_name(v));
    json j{{"vertices", g->graph->vertex_count()},
           {"edges", g->graph->edge_count()},
           {"no_zero_minimal", p.no_zero_minimal},
           {"zero_disjunctive", p.zero_disjunctive},
           {"pseudofinite", p.pseudofinite},
           {"pre_boolean", p.pre_boolean},
           {"sources", src}};
    put(out, j.dump());
  });
}

sd_status sd_graph_mul(const sd_graph* g, const char* a, const char* b, char** out) {
  return guard([&] {
    need(g, "graph"), need(a, "a"), need(b, "b");
    put(out, format_graph_element(gisg_mul(parse_graph_element(a, g->graph), parse_graph_element(b, g->graph))));
  });
}

sd_status sd_graph_arrow(const sd_graph* g, const char* a, const char* targets, int* out) {
  return guard([&] {
    need(g, "graph"), need(a, "a"), need(targets, "targets"), need(out, "out");
    auto t = parse_graph_element_list(targets, g->graph);
    *out = gisg_lenz_arrow(parse_graph_element(a, g->graph), t);
  });
}

// --- finite tables ----------------------------------------------------------

sd_status sd_table_parse(const char* text, sd_table** out) {
  return guard([&] {
    need(text, "text"), need(out, "out");
    *out = new sd_table{parse_table(text)};
  });
}

sd_status sd_table_load(const char* path, sd_table** out) {
  return guard([&] {
    need(path, "path"), need(out, "out");
    *out = new sd_table{parse_table(read_file(path))};
  });
}

sd_status sd_table_symmetric(unsigned k, sd_table** out) {
  return guard([&] {
    need(out, "out");
    *out = new sd_table{symmetric_inverse_monoid(k)};
  });
}

void sd_table_free(sd_table* t) { delete t; }

size_t sd_table_size(const sd_table* t) { return t ? t->table.size() : 0; }

sd_status sd_table_format(const sd_table* t, char** out) {
  return guard([&] { put(out, format_table(table_of(t))); });
}

sd_status sd_table_validate(const sd_table* t, char** out) {
  return guard([&] {
    const auto& s = table_of(t);
    auto v = validate(s);
    json j{{"valid", v.ok}, {"size", s.size()}};
    if (!v.ok) {
      j["axiom"] = v.axiom;
      j["witness"] = names(s, v.witness);
      j["message"] = v.message();
    }
    put(out, j.dump());
  });
}

sd_status sd_table_predicates(const sd_table* t, char** out) {
  return guard([&] {
    const auto& s = table_of(t);
    auto p = predicates(s);
    json j{{"size", s.size()},
           {"idempotents", s.idempotents().size()},
           {"d_classes", s.d_class_count()},
           {"monoid", s.identity().has_value()},
           {"fundamental", p.fundamental},
           {"zero_simple", p.zero_simple},
           {"zero_disjunctive", p.zero_disjunctive},
           {"e_star_unitary", p.e_star_unitary},
           {"unambiguous", p.unambiguous},
           {"meet_semigroup", p.meet_semigroup},
           {"distributive", p.distributive},
           {"boolean", p.boolean}};
    put(out, j.dump());
  });
}

sd_status sd_table_congruence_free(const sd_table* t, char** out) {
  return guard([&] {
    const auto& s = table_of(t);
    auto r = congruence_free_report(s);
    json j{{"congruence_free", r.congruence_free},
           {"fundamental", r.fundamental},
           {"zero_simple", r.zero_simple},
           {"zero_disjunctive", r.zero_disjunctive}};
    if (r.witness) {
      std::vector<std::vector<Elem>> blocks(r.witness->classes());
      for (Elem x = 0; x < s.size(); ++x) blocks[r.witness->cls[x]].push_back(x);
      json w = json::array();
      for (const auto& b : blocks)
        if (b.size() > 1) w.push_back(names(s, b));
      j["witness_classes"] = w;
    }
    put(out, j.dump());
  });
}

sd_status sd_table_zero_simplifying(const sd_table* t, char** out) {
  return guard([&] {
    const auto& s = table_of(t);
    auto r = zero_simplifying_report(s);
    json j{{"zero_simplifying", r.zero_simplifying}};
    if (r.witness) j["witness_ideal"] = names(s, *r.witness);
    put(out, j.dump());
  });
}

sd_status sd_table_complete(const sd_table* t, char** out) {
  return guard([&] {
    const auto& s = table_of(t);
    auto c = distributive_completion(s);
    json records = json::array();
    const auto& q = c.lenz.table;
    for (std::size_t k = 0; k < c.classes.size(); ++k) {
      json gens = json::array();
      for (Elem g : c.classes[k].representative.generators) gens.push_back(q.name(g));
      records.push_back({{"class", c.table.name(static_cast<Elem>(k))},
                         {"support", names(q, c.classes[k].support)},
                         {"generators", gens}});
    }
    json delta = json::object();
    for (Elem x = 0; x < s.size(); ++x) delta[s.name(x)] = c.table.name(c.delta[x]);
    json summary{{"size", s.size()},
                 {"lenz_quotient_size", q.size()},
                 {"completion_size", c.table.size()},
                 {"distributive", is_distributive(c.table)},
                 {"boolean", is_boolean(c.table)},
                 {"delta", delta},
                 {"part1_isomorphic", part1_isomorphism(s, c).has_value()}};
    if (is_boolean(c.table)) summary["comparison_ok"] = comparison_check(s, c).ok;
    records.push_back(summary);
    put(out, records.dump());
  });
}

sd_status sd_table_dualize(const sd_table* t, char** out, char** dump) {
  return guard([&] {
    const auto& s = table_of(t);
    auto rt = duality_roundtrip(s);
    const auto& g = rt.groupoid;
    json j{{"objects", g.objects().size()},
           {"arrows", g.size()},
           {"principal", g.is_principal()},
           {"bisections", rt.bisections.table.size()},
           {"roundtrip", rt.ok}};
    if (!rt.ok) j["message"] = rt.message;
    std::string gm;
    j["groupoid_roundtrip"] = groupoid_roundtrip(g, &gm);
    if (!gm.empty()) j["groupoid_message"] = gm;
    put(out, j.dump());
    if (dump) put(dump, format_groupoid(g));
  });
}

sd_status sd_table_classify(const sd_table* t, char** out) {
  return guard([&] {
    auto c = classify_symmetric(table_of(t));
    json j{{"symmetric", c.k.has_value()}};
    if (c.k) j["k"] = *c.k;
    else j["failure"] = c.failure;
    put(out, j.dump());
  });
}

sd_status sd_table_ideals(const sd_table* t, char** out) {
  return guard([&] {
    const auto& s = table_of(t);
    auto ic = ideal_correspondence(s);
    auto g = atom_groupoid(s);
    json records = json::array();
    for (std::size_t k = 0; k < ic.ideals.size(); ++k)
      records.push_back({{"ideal", names(s, ic.ideals[k])},
                         {"invariant_set", group_names(g, ic.invariant_sets[ic.o_of_ideal[k]])}});
    json summary{{"tightly_closed_ideals", ic.ideals.size()}, {"correspondence", ic.ok}};
    if (!ic.ok) summary["message"] = ic.message;
    records.push_back(summary);
    put(out, records.dump());
  });
}

// --- Thompson ---------------------------------------------------------------

sd_status sd_tp_mul(unsigned n, unsigned r, const char* g, const char* h, char** out) {
  return guard([&] {
    need(g, "g"), need(h, "h");
    auto p = params(n, r);
    put(out, format_tree_pair(tp_mul(parse_tree_pair(g, p), parse_tree_pair(h, p))));
  });
}

sd_status sd_tp_inv(unsigned n, unsigned r, const char* g, char** out) {
  return guard([&] {
    need(g, "g");
    put(out, format_tree_pair(tp_inv(parse_tree_pair(g, params(n, r)))));
  });
}

sd_status sd_tp_reduce(unsigned n, unsigned r, const char* g, char** out) {
  return guard([&] {
    need(g, "g");
    put(out, format_tree_pair(tp_reduce(parse_tree_pair(g, params(n, r)))));
  });
}

sd_status sd_tp_eq(unsigned n, unsigned r, const char* g, const char* h, int* out) {
  return guard([&] {
    need(g, "g"), need(h, "h"), need(out, "out");
    auto p = params(n, r);
    *out = tp_eq(parse_tree_pair(g, p), parse_tree_pair(h, p));
  });
}

sd_status sd_tp_from_unit(unsigned n, unsigned r, const char* unit, char** out) {
  return guard([&] {
    need(unit, "unit");
    put(out, format_tree_pair(tp_from_unit(cuntz_normalize(parse_cuntz(unit, params(n, r))))));
  });
}

sd_status sd_tp_to_unit(unsigned n, unsigned r, const char* g, char** out) {
  return guard([&] {
    need(g, "g");
    put(out, format_cuntz(tp_to_unit(parse_tree_pair(g, params(n, r)))));
  });
}

sd_status sd_selftest(const char* suite, uint64_t seed, uint64_t count, char** out) {
  return guard([&] {
    need(suite, "suite");
    json records = json::array();
    for (const auto& r : run_selftest(suite, seed, count)) {
      json j{{"suite", r.suite}, {"seed", seed}, {"cases", r.cases}, {"failures", r.failures}, {"ok", r.failures == 0}};
      if (r.failures) j["first_failure"] = r.first_failure;
      records.push_back(j);
    }
    put(out, records.dump());
  });
}

}  // extern "C"
