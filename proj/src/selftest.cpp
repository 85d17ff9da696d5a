#include "stonedual/selftest.hpp"

#include <functional>
#include <map>
#include <random>

#include "stonedual/duality.hpp"
#include "stonedual/filtercomp.hpp"
#include "stonedual/formats.hpp"
#include "stonedual/graphisg.hpp"
#include "stonedual/multable.hpp"
#include "stonedual/polycyclic.hpp"
#include "stonedual/thompson.hpp"

namespace stonedual {

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

Word random_word(Rng& rng, Alphabet a, std::size_t max_len) {
  std::vector<Letter> l(pick(rng, max_len + 1));
  for (auto& x : l) x = static_cast<Letter>(pick(rng, a.size()));
  return Word(a, std::move(l));
}

PolyElement random_poly(Rng& rng, PolyParams p, std::size_t max_len) {
  if (pick(rng, 10) == 0) return PolyElement::zero(p);
  Alphabet a(p.n);
  return PolyElement::make(p, static_cast<unsigned>(pick(rng, p.r)), random_word(rng, a, max_len),
                           random_word(rng, a, max_len), static_cast<unsigned>(pick(rng, p.r)));
}

// Random maximal prefix code: split leaves of the one-node tree.
std::vector<Word> random_maximal_code(Rng& rng, Alphabet a, std::size_t splits, std::size_t max_len) {
  std::vector<Word> code{Word(a)};
  for (std::size_t s = 0; s < splits; ++s) {
    std::size_t k = pick(rng, code.size());
    if (code[k].size() >= max_len) continue;
    Word w = code[k];
    code.erase(code.begin() + static_cast<std::ptrdiff_t>(k));
    for (Letter l = 0; l < a.size(); ++l) code.push_back(w.appended(l));
  }
  return code;
}

struct Counter {
  SelftestResult& r;
  void check(bool ok, const std::function<std::string()>& what) {
    ++r.cases;
    if (!ok) {
      if (r.failures++ == 0) r.first_failure = what();
    }
  }
};

void suite_words(Rng& rng, std::uint64_t count, Counter& c) {
  for (std::uint64_t t = 0; t < count; ++t) {
    Alphabet a(2 + static_cast<unsigned>(pick(rng, 2)));
    auto code = random_maximal_code(rng, a, 1 + pick(rng, 8), 8);
    if (pick(rng, 2) && code.size() > 1) code.erase(code.begin() + static_cast<std::ptrdiff_t>(pick(rng, code.size())));
    bool maximal = is_maximal_prefix_code(code, a);
    c.check(maximal == (kraft_sum(code, a) == 1), [&] {
      std::string s;
      for (const auto& w : code) s += format_word(w) + ",";
      return "depth criterion disagrees with Kraft sum on " + s;
    });
  }
}

void suite_poly(Rng& rng, std::uint64_t count, Counter& c) {
  for (std::uint64_t t = 0; t < count; ++t) {
    PolyParams p{2 + static_cast<unsigned>(pick(rng, 2)), 1 + static_cast<unsigned>(pick(rng, 2))};
    auto s = random_poly(rng, p, 3), u = random_poly(rng, p, 3), v = random_poly(rng, p, 3);
    auto show = [&] { return format_poly(s) + " " + format_poly(u) + " " + format_poly(v); };
    c.check(poly_mul(poly_mul(s, u), v) == poly_mul(s, poly_mul(u, v)), [&] { return "associativity: " + show(); });
    c.check(poly_mul(poly_mul(s, s.inverse()), s) == s, [&] { return "s s^-1 s = s: " + show(); });
    RootedWord w{static_cast<unsigned>(pick(rng, p.r)), random_word(rng, Alphabet(p.n), 6)};
    auto lhs = poly_act(poly_mul(s, u), w);
    auto inner = poly_act(u, w);
    auto rhs = inner ? poly_act(s, *inner) : std::nullopt;
    c.check(lhs == rhs, [&] { return "action of a product: " + show(); });
    c.check(poly_leq(s, u) == (poly_mul(poly_mul(u, s.inverse()), s) == s), [&] { return "order: " + show(); });
  }
}

void suite_graph(Rng& rng, std::uint64_t count, Counter& c) {
  auto g = parse_graph("vertex p\nvertex q\nedge x q p\nedge y p p\nedge z p q\nedge w q q\n");
  GraphPtr gp = g;
  std::map<VertexId, std::vector<Path>> by_domain;
  std::vector<Path> frontier;
  for (VertexId v = 0; v < g->vertex_count(); ++v) frontier.emplace_back(gp, v);
  for (int depth = 0; depth <= 3; ++depth) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      by_domain[p.domain()].push_back(p);
      for (EdgeId e : g->in_edges(p.domain())) next.push_back(p.extended(e));
    }
    frontier = std::move(next);
  }
  std::vector<Path> all;
  for (auto& [_, v] : by_domain) all.insert(all.end(), v.begin(), v.end());
  auto random_elem = [&] {
    if (pick(rng, 10) == 0) return GraphElement::zero(gp);
    const Path& u = all[pick(rng, all.size())];
    const auto& bucket = by_domain[u.domain()];
    return GraphElement::make(u, bucket[pick(rng, bucket.size())]);
  };
  for (std::uint64_t t = 0; t < count; ++t) {
    auto s = random_elem(), u = random_elem(), v = random_elem();
    auto show = [&] {
      return format_graph_element(s) + " ; " + format_graph_element(u) + " ; " + format_graph_element(v);
    };
    c.check(gisg_mul(gisg_mul(s, u), v) == gisg_mul(s, gisg_mul(u, v)), [&] { return "associativity: " + show(); });
    c.check(gisg_mul(gisg_mul(s, s.inverse()), s) == s, [&] { return "s s^-1 s = s: " + show(); });
    const Path& w = all[pick(rng, all.size())];
    auto inner = gisg_act(u, w);
    auto rhs = inner ? gisg_act(s, *inner) : std::nullopt;
    c.check(gisg_act(gisg_mul(s, u), w) == rhs, [&] { return "action of a product: " + show(); });
  }
}

std::vector<MulTable> small_tables() {
  std::vector<MulTable> out;
  for (unsigned k = 1; k <= 3; ++k) out.push_back(symmetric_inverse_monoid(k));
  out.push_back(rees_b_r(zero_cyclic_group(1), 2));
  out.push_back(zero_cyclic_group(2));
  out.push_back(chain(3));
  out.push_back(boolean_algebra(2));
  out.push_back(zero_direct_union(symmetric_inverse_monoid(1), symmetric_inverse_monoid(2)));
  return out;
}

void suite_finite(Rng& rng, std::uint64_t count, Counter& c) {
  auto tables = small_tables();
  for (std::uint64_t t = 0; t < count; ++t) {
    const auto& s = tables[pick(rng, tables.size())];
    c.check(validate(s).ok, [&] { return "validation: " + validate(s).message(); });
    // Both decision procedures run internally and throw on disagreement.
    congruence_free_report(s);
    zero_simplifying_report(s);
    Elem a = static_cast<Elem>(pick(rng, s.size())), b = static_cast<Elem>(pick(rng, s.size()));
    c.check(s.leq(a, b) == (s.mul(s.mul(b, s.inv(a)), a) == a), [&] { return "order characterizations differ"; });
    c.check(s.leq(a, b) == (s.mul(s.mul(a, s.inv(a)), b) == a), [&] { return "order characterizations differ"; });
    c.check(is_congruence(s, mu_congruence(s)), [&] { return "mu is not a congruence"; });
  }
}

void suite_filters(Rng& rng, std::uint64_t count, Counter& c) {
  std::vector<MulTable> lattices;
  for (unsigned m = 1; m <= 5; ++m)
    for (auto& e : enumerate_meet_semilattices(m)) lattices.push_back(std::move(e));
  for (std::uint64_t t = 0; t < count; ++t) {
    const auto& e = lattices[pick(rng, lattices.size())];
    for (Elem x = 0; x < e.size(); ++x)
      if (x != e.zero())
        c.check(is_tight_filter(e, x) == is_tight_filter_bruteforce(e, x), [&] { return "tight filter criteria differ"; });
    auto rep = booleanization_report(e);
    c.check(rep.tight_eq_ultra && rep.d_boolean, [&] { return "booleanization flags"; });
  }
}

void suite_duality(Rng& rng, std::uint64_t count, Counter& c) {
  std::vector<MulTable> tables;
  for (unsigned k = 1; k <= 3; ++k) tables.push_back(symmetric_inverse_monoid(k));
  tables.push_back(zero_cyclic_group(2));
  tables.push_back(boolean_algebra(2));
  for (std::uint64_t t = 0; t < count; ++t) {
    const auto& s = tables[pick(rng, tables.size())];
    auto rt = duality_roundtrip(s);
    c.check(rt.ok, [&] { return "duality round trip: " + rt.message; });
    std::string msg;
    c.check(groupoid_roundtrip(rt.groupoid, &msg), [&] { return "groupoid round trip: " + msg; });
    auto ic = ideal_correspondence(s);
    c.check(ic.ok, [&] { return "ideal correspondence: " + ic.message; });
  }
}

void suite_thompson(Rng& rng, std::uint64_t count, Counter& c) {
  const PolyParams params[] = {{2, 1}, {2, 2}, {3, 1}, {3, 2}};
  for (std::uint64_t t = 0; t < count; ++t) {
    PolyParams p = params[pick(rng, 4)];
    auto g = tp_random(p, pick(rng, 5), rng), h = tp_random(p, pick(rng, 5), rng), k = tp_random(p, pick(rng, 5), rng);
    auto show = [&] { return format_tree_pair(g) + " " + format_tree_pair(h) + " " + format_tree_pair(k); };
    c.check(tp_eq(tp_mul(tp_mul(g, h), k), tp_mul(g, tp_mul(h, k))), [&] { return "associativity: " + show(); });
    c.check(tp_eq(tp_mul(g, tp_inv(g)), tp_identity(p)), [&] { return "inverse law: " + show(); });
    auto x = tp_to_unit(g), y = tp_to_unit(h);
    c.check(is_unit(x), [&] { return "to_unit is not a unit: " + show(); });
    c.check(tp_eq(tp_from_unit(cuntz_mul(x, y)), tp_mul(g, h)), [&] { return "unit product: " + show(); });
  }
}

const std::map<std::string, void (*)(Rng&, std::uint64_t, Counter&), std::less<>>& registry() {
  static const std::map<std::string, void (*)(Rng&, std::uint64_t, Counter&), std::less<>> r{
      {"words", suite_words},   {"poly", suite_poly},       {"graph", suite_graph},       {"finite", suite_finite},
      {"filters", suite_filters}, {"duality", suite_duality}, {"thompson", suite_thompson}};
  return r;
}

}  // namespace

const std::vector<std::string>& selftest_suites() {
  static const std::vector<std::string> names{"words", "poly", "graph", "finite", "filters", "duality", "thompson"};
  return names;
}

std::vector<SelftestResult> run_selftest(std::string_view suite, std::uint64_t seed, std::uint64_t count) {
  std::vector<std::string> which;
  if (suite == "all") which = selftest_suites();
  else if (registry().contains(suite)) which.emplace_back(suite);
  else throw DomainError("unknown self-test suite '" + std::string(suite) + "'");
  std::vector<SelftestResult> out;
  for (const auto& name : which) {
    SelftestResult r;
    r.suite = name;
    Rng rng(seed);
    Counter c{r};
    try {
      registry().find(name)->second(rng, count, c);
    } catch (const std::exception& e) {
      ++r.failures;
      if (r.first_failure.empty()) r.first_failure = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace stonedual
