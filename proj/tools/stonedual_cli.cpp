// Command-line front end. Links only the C API.
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stonedual/stonedual.h"

using nlohmann::json;

namespace {

bool json_mode = false;

// Thrown to leave with a given exit code after printing a diagnostic.
struct Exit {
  int code;
};

int exit_code(sd_status s) { return s == SD_ERR_USAGE || s == SD_ERR_PARSE ? 2 : 1; }

void check(sd_status s) {
  if (s == SD_OK) return;
  std::cerr << "error: " << sd_last_error() << '\n';
  throw Exit{exit_code(s)};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  sd_string_free(s);
  return out;
}

std::string get_string(const std::function<sd_status(char**)>& f) {
  char* out = nullptr;
  check(f(&out));
  return take(out);
}

bool get_bool(const std::function<sd_status(int*)>& f) {
  int out = 0;
  check(f(&out));
  return out != 0;
}

std::string show(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "{";
    for (const auto& x : v) s += (s.size() > 1 ? "," : "") + show(x);
    return s + "}";
  }
  return v.dump();
}

void emit_literal(const std::string& command, const std::string& value) {
  if (json_mode) std::cout << json{{"command", command}, {"result", value}}.dump() << '\n';
  else std::cout << value << '\n';
}

void emit_bool(const std::string& command, const std::string& label, bool value) {
  if (json_mode) std::cout << json{{"command", command}, {"result", value}}.dump() << '\n';
  else std::cout << (label.empty() ? "" : label + ": ") << (value ? "true" : "false") << '\n';
}

// A report is an object or an array of records; JSON mode prints one per line.
void emit_report(const std::string& command, const std::string& text,
                 const std::function<void(const json&)>& human = nullptr) {
  json report = json::parse(text);
  json records = report.is_array() ? report : json::array({report});
  for (auto& r : records) {
    if (json_mode) {
      r["command"] = command;
      std::cout << r.dump() << '\n';
    } else if (human) {
      human(r);
    } else {
      for (auto it = r.begin(); it != r.end(); ++it) std::cout << it.key() << ": " << show(it.value()) << '\n';
    }
  }
}

struct TableHandle {
  sd_table* t = nullptr;
  explicit TableHandle(const std::string& path) { check(sd_table_load(path.c_str(), &t)); }
  ~TableHandle() { sd_table_free(t); }
};

struct GraphHandle {
  sd_graph* g = nullptr;
  explicit GraphHandle(const std::string& path) { check(sd_graph_load(path.c_str(), &g)); }
  ~GraphHandle() { sd_graph_free(g); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite inverse semigroups, their Boolean completions and groupoid duals"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", json_mode, "Emit JSON-lines records");
  app.set_version_flag("--version", sd_version());

  unsigned n = 2, r = 1;
  std::string a, b, file, dump_path, suite;
  std::uint64_t seed = 0, count = 200;
  std::function<void()> action;

  auto params = [&](CLI::App* c) {
    c->add_option("-n", n, "Alphabet size")->check(CLI::Range(1u, 1000u));
    c->add_option("-r", r, "Number of roots")->check(CLI::Range(1u, 1000u));
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<void()> f) {
    auto* c = parent->add_subcommand(name, help);
    c->callback([&action, f] { action = f; });
    return c;
  };

  // poly
  auto* poly = app.add_subcommand("poly", "Polycyclic monoids P_{n,r}")->require_subcommand(1);
  for (auto* c : {leaf(poly, "mul", "Product a b",
                       [&] { emit_literal("poly mul", get_string([&](char** o) { return sd_poly_mul(n, r, a.c_str(), b.c_str(), o); })); }),
                  leaf(poly, "meet", "Meet of a and b",
                       [&] { emit_literal("poly meet", get_string([&](char** o) { return sd_poly_meet(n, r, a.c_str(), b.c_str(), o); })); }),
                  leaf(poly, "leq", "Natural order a <= b",
                       [&] { emit_bool("poly leq", "", get_bool([&](int* o) { return sd_poly_leq(n, r, a.c_str(), b.c_str(), o); })); }),
                  leaf(poly, "arrow", "a -> B for a comma separated list B",
                       [&] { emit_bool("poly arrow", "", get_bool([&](int* o) { return sd_poly_arrow(n, r, a.c_str(), b.c_str(), o); })); })}) {
    params(c);
    c->add_option("a", a, "Element literal")->required();
    c->add_option("b", b, "Element literal or list")->required();
  }

  // mpc
  auto* mpc = app.add_subcommand("mpc", "Prefix codes")->require_subcommand(1);
  for (auto* c : {leaf(mpc, "check", "Is the code a maximal prefix code",
                       [&] { emit_bool("mpc check", "maximal prefix code", get_bool([&](int* o) { return sd_mpc_check(n, a.c_str(), o); })); }),
                  leaf(mpc, "kraft", "Kraft sum of a prefix code", [&] {
                    auto v = get_string([&](char** o) { return sd_mpc_kraft(n, a.c_str(), o); });
                    if (json_mode) emit_literal("mpc kraft", v);
                    else std::cout << "kraft sum: " << v << '\n';
                  })}) {
    c->add_option("-n", n, "Alphabet size")->check(CLI::Range(1u, 1000u));
    c->add_option("code", a, "Comma separated words")->required();
  }

  // graph
  auto* graph = app.add_subcommand("graph", "Graph inverse semigroups")->require_subcommand(1);
  leaf(graph, "analyze", "Semilattice predicates of the graph", [&] {
    GraphHandle g(file);
    emit_report("graph analyze", get_string([&](char** o) { return sd_graph_analyze(g.g, o); }));
  })->add_option("file", file, "Graph file")->required();
  {
    auto* c = leaf(graph, "mul", "Product of two elements u / v", [&] {
      GraphHandle g(file);
      emit_literal("graph mul", get_string([&](char** o) { return sd_graph_mul(g.g, a.c_str(), b.c_str(), o); }));
    });
    c->add_option("file", file, "Graph file")->required();
    c->add_option("a", a, "Element literal")->required();
    c->add_option("b", b, "Element literal")->required();
    c = leaf(graph, "arrow", "a -> B for a comma separated list B", [&] {
      GraphHandle g(file);
      emit_bool("graph arrow", "", get_bool([&](int* o) { return sd_graph_arrow(g.g, a.c_str(), b.c_str(), o); }));
    });
    c->add_option("file", file, "Graph file")->required();
    c->add_option("a", a, "Element literal")->required();
    c->add_option("targets", b, "Comma separated element literals")->required();
  }

  // finite
  auto* finite = app.add_subcommand("finite", "Finite inverse semigroups given by tables")->require_subcommand(1);
  auto table_cmd = [&](const std::string& name, const std::string& help, std::function<void(sd_table*)> f) {
    auto* c = leaf(finite, name, help, [&file, f] {
      TableHandle t(file);
      f(t.t);
    });
    c->add_option("file", file, "Table file")->required();
    return c;
  };
  table_cmd("validate", "Check the inverse semigroup axioms", [&](sd_table* t) {
    auto text = get_string([&](char** o) { return sd_table_validate(t, o); });
    auto j = json::parse(text);
    emit_report("finite validate", text, [](const json& r) {
      if (r["valid"]) std::cout << "valid inverse semigroup with zero, " << r["size"] << " elements\n";
      else std::cout << "invalid: " << r["message"].get<std::string>() << '\n';
    });
    if (!j["valid"]) throw Exit{1};
  });
  table_cmd("predicates", "Structural predicates", [&](sd_table* t) {
    emit_report("finite predicates", get_string([&](char** o) { return sd_table_predicates(t, o); }));
  });
  table_cmd("congfree", "Decide congruence-freeness", [&](sd_table* t) {
    emit_report("finite congfree", get_string([&](char** o) { return sd_table_congruence_free(t, o); }));
  });
  table_cmd("simplifying", "Decide 0-simplifying", [&](sd_table* t) {
    emit_report("finite simplifying", get_string([&](char** o) { return sd_table_zero_simplifying(t, o); }));
  });
  table_cmd("complete", "Distributive completion D(S)", [&](sd_table* t) {
    emit_report("finite complete", get_string([&](char** o) { return sd_table_complete(t, o); }), [](const json& r) {
      if (r.contains("class"))
        std::cout << "class " << show(r["class"]) << ": support " << show(r["support"]) << ", generators "
                  << show(r["generators"]) << '\n';
      else
        for (auto it = r.begin(); it != r.end(); ++it) std::cout << it.key() << ": " << show(it.value()) << '\n';
    });
  });
  table_cmd("dualize", "Groupoid of atoms and the duality round trip", [&](sd_table* t) {
    char *out = nullptr, *dump = nullptr;
    check(sd_table_dualize(t, &out, &dump));
    auto report = take(out), groupoid = take(dump);
    emit_report("finite dualize", report);
    if (!dump_path.empty()) {
      std::ofstream f(dump_path);
      if (!(f << groupoid)) {
        std::cerr << "error: cannot write " << dump_path << '\n';
        throw Exit{1};
      }
    } else if (!json_mode) {
      std::cout << groupoid;
    }
    if (!json::parse(report)["roundtrip"]) throw Exit{1};
  })->add_option("--dump", dump_path, "Write the groupoid to this file");
  table_cmd("classify", "Recognize finite symmetric inverse monoids", [&](sd_table* t) {
    emit_report("finite classify", get_string([&](char** o) { return sd_table_classify(t, o); }), [](const json& r) {
      if (r["symmetric"]) std::cout << "I(" << r["k"] << ")\n";
      else std::cout << "not a symmetric inverse monoid: " << r["failure"].get<std::string>() << '\n';
    });
  });
  table_cmd("ideals", "Tightly closed ideals and invariant sets", [&](sd_table* t) {
    emit_report("finite ideals", get_string([&](char** o) { return sd_table_ideals(t, o); }), [](const json& r) {
      if (r.contains("ideal"))
        std::cout << "ideal " << show(r["ideal"]) << " <-> invariant set " << show(r["invariant_set"]) << '\n';
      else
        for (auto it = r.begin(); it != r.end(); ++it) std::cout << it.key() << ": " << show(it.value()) << '\n';
    });
  });

  // thompson
  auto* th = app.add_subcommand("thompson", "Thompson-Higman groups G_{n,r}")->require_subcommand(1);
  auto unary = [&](const std::string& name, const std::string& help, auto fn) {
    auto* c = leaf(th, name, help, [&, name, fn] {
      emit_literal("thompson " + name, get_string([&](char** o) { return fn(n, r, a.c_str(), o); }));
    });
    params(c);
    c->add_option("g", a, name == "fromunit" ? "Cuntz element literal" : "Tree pair literal")->required();
  };
  unary("inv", "Inverse", sd_tp_inv);
  unary("reduce", "Reduced tree pair", sd_tp_reduce);
  unary("fromunit", "Tree pair of a unit of the Cuntz monoid", sd_tp_from_unit);
  unary("tounit", "Unit of the Cuntz monoid of a tree pair", sd_tp_to_unit);
  {
    auto* c = leaf(th, "mul", "Product g h (h first)", [&] {
      emit_literal("thompson mul", get_string([&](char** o) { return sd_tp_mul(n, r, a.c_str(), b.c_str(), o); }));
    });
    params(c);
    c->add_option("g", a, "Tree pair literal")->required();
    c->add_option("second", b, "Tree pair literal")->required();
    c = leaf(th, "eq", "Equality in the group", [&] {
      emit_bool("thompson eq", "", get_bool([&](int* o) { return sd_tp_eq(n, r, a.c_str(), b.c_str(), o); }));
    });
    params(c);
    c->add_option("g", a, "Tree pair literal")->required();
    c->add_option("second", b, "Tree pair literal")->required();
  }

  // selftest
  {
    auto* c = leaf(&app, "selftest", "Randomized law checks", [&] {
      auto text = get_string([&](char** o) { return sd_selftest(suite.c_str(), seed, count, o); });
      bool ok = true;
      emit_report("selftest", text, [&](const json& rec) {
        std::cout << rec["suite"].get<std::string>() << ": " << rec["cases"] << " cases, " << rec["failures"]
                  << " failures";
        if (rec.contains("first_failure")) std::cout << " (first: " << rec["first_failure"].get<std::string>() << ")";
        std::cout << '\n';
      });
      for (const auto& rec : json::parse(text)) ok = ok && rec["ok"].get<bool>();
      if (!ok) throw Exit{1};
    });
    c->add_option("suite", suite, "words, poly, graph, finite, filters, duality, thompson or all")->required();
    c->add_option("--seed", seed, "Random seed");
    c->add_option("--count", count, "Iterations per suite");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (action) action();
  } catch (const Exit& e) {
    return e.code;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed report: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
