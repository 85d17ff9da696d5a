// One line per acceptance criterion; nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "stonedual/duality.hpp"
#include "stonedual/filtercomp.hpp"
#include "stonedual/formats.hpp"
#include "stonedual/graphisg.hpp"
#include "stonedual/thompson.hpp"

using namespace stonedual;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  // Records the first failure only.
  void fail(const std::string& why) {
    if (ok) detail << "first failure: " << why << "; ";
    ok = false;
  }
  void check(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::string fmt(const MulTable& s) { return std::to_string(s.size()) + "-element table"; }

PolyElement random_poly(std::mt19937_64& rng, PolyParams p, std::size_t max_len, bool allow_zero = true) {
  if (allow_zero && rng() % 12 == 0) return PolyElement::zero(p);
  auto rw = [&](std::size_t len) {
    std::string s;
    for (std::size_t k = rng() % (len + 1); k > 0; --k) s += static_cast<char>('a' + rng() % p.n);
    return oracle::word(s, p.n);
  };
  return PolyElement::make(p, static_cast<unsigned>(rng() % p.r), rw(max_len), rw(max_len),
                           static_cast<unsigned>(rng() % p.r));
}

// Maximal prefix code over n letters from random leaf expansions.
std::vector<std::string> random_maximal_code(std::mt19937_64& rng, unsigned n, std::size_t splits, std::size_t max_len) {
  std::vector<std::string> code{""};
  for (std::size_t s = 0; s < splits; ++s) {
    std::size_t k = rng() % code.size();
    if (code[k].size() >= max_len) continue;
    std::string w = code[k];
    code.erase(code.begin() + static_cast<std::ptrdiff_t>(k));
    for (unsigned l = 0; l < n; ++l) code.push_back(w + static_cast<char>('a' + l));
  }
  return code;
}

// ---------------------------------------------------------------------------

void criterion1(Outcome& o) {
  const std::size_t sizes[] = {2, 7, 34, 209};
  for (unsigned k = 1; k <= 4; ++k) {
    auto t0 = std::chrono::steady_clock::now();
    auto s = symmetric_inverse_monoid(k);
    auto rt = duality_roundtrip(s);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto& g = rt.groupoid;
    o.check(rt.ok, "I(" + std::to_string(k) + ") round trip: " + rt.message);
    o.check(g.objects().size() == k, "object count for I(" + std::to_string(k) + ")");
    o.check(g.size() == k * k, "arrow count for I(" + std::to_string(k) + ")");
    o.check(rt.bisections.table.size() == sizes[k - 1], "bisection count for I(" + std::to_string(k) + ")");
    const auto comp = g.components();
    o.check(g.is_principal() && comp.size() == g.size() && std::set<std::uint32_t>(comp.begin(), comp.end()).size() == 1,
            "groupoid of I(" + std::to_string(k) + ") is not a connected pair groupoid");
    o.check(groupoid_roundtrip(g), "groupoid round trip for I(" + std::to_string(k) + ")");
    o.check(secs < 30.0, "I(" + std::to_string(k) + ") took " + std::to_string(secs) + " s");
    o.detail << "I(" << k << "): " << g.objects().size() << " objects, " << g.size() << " arrows, "
             << rt.bisections.table.size() << " bisections, " << static_cast<int>(secs * 1000) << " ms; ";
  }
}

void criterion2(Outcome& o) {
  for (unsigned k = 1; k <= 4; ++k) {
    auto s = symmetric_inverse_monoid(k);
    auto c = classify_symmetric(s);
    o.check(c.k == k, "I(" + std::to_string(k) + ") not recognised: " + c.failure);
    o.check(c.k && is_homomorphism(s, symmetric_inverse_monoid(*c.k), c.iso), "classifier isomorphism");
  }
  // Relabelled I(3).
  auto s = symmetric_inverse_monoid(3);
  std::vector<Elem> perm(s.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(2);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Elem> prod(s.size() * s.size());
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem b = 0; b < s.size(); ++b) prod[perm[a] * s.size() + perm[b]] = perm[s.mul(a, b)];
  o.check(classify_symmetric(MulTable(s.size(), perm[s.zero()], prod)).k == 3u, "shuffled I(3)");

  struct Counter {
    const char* label;
    MulTable t;
    const char* reason;
  };
  const Counter cs[] = {
      {"B_2", rees_b_r(symmetric_inverse_monoid(1), 2), "monoid"},
      {"I(2)xI(2)", direct_product(symmetric_inverse_monoid(2), symmetric_inverse_monoid(2)), "0-simplifying"},
      {"Z_2 with zero", zero_cyclic_group(2), "fundamental"},
      {"3-chain", chain(3), "Boolean"},
      {"2-atom Boolean algebra", boolean_algebra(2), "0-simplifying"},
  };
  for (const auto& c : cs) {
    auto r = classify_symmetric(c.t);
    o.check(!r.k && r.failure.find(c.reason) != std::string::npos,
            std::string(c.label) + " gave '" + r.failure + "'");
  }
  o.detail << "I(1..4) recognised, 5 counterexamples rejected with the expected reason; ";
}

void criterion3(Outcome& o) {
  const std::size_t expected[] = {1, 1, 2, 5, 15, 53};
  for (unsigned m = 1; m <= 6; ++m) {
    auto all = enumerate_meet_semilattices(m);
    o.check(all.size() == expected[m - 1], "semilattice count for m=" + std::to_string(m));
    for (const auto& e : all) {
      auto r = booleanization_report(e);
      bool tight_ultra = true;
      for (Elem x = 0; x < e.size(); ++x)
        if (x != e.zero() && oracle::tight(e, x) != oracle::is_ultrafilter_generator(e, x)) tight_ultra = false;
      o.check(tight_ultra && r.tight_eq_ultra, "tight != ultra on a " + fmt(e));
      o.check(r.d_boolean, "D(E) not Boolean on a " + fmt(e));
      o.check(r.unital == r.compactable, "unital vs compactable on a " + fmt(e));
      o.check(!r.zero_disjunctive || r.densely_embedded, "0-disjunctive but not dense on a " + fmt(e));
    }
    o.detail << "m=" << m << ":" << all.size() << " ";
  }
}

std::vector<std::pair<std::string, MulTable>> finite_corpus() {
  const char* witness =
      "elements 4 zero 0 identity 2\n0 0 0 0\n0 1 1 1\n0 1 2 3\n0 1 3 2\nname 1 f\nname 2 e\nname 3 g\n";
  auto i1 = symmetric_inverse_monoid(1), i2 = symmetric_inverse_monoid(2);
  return {{"I(1)", i1},
          {"I(2)", i2},
          {"B_2", rees_b_r(i1, 2)},
          {"B_3", rees_b_r(i1, 3)},
          {"B_2(Z_2 with zero)", rees_b_r(zero_cyclic_group(2), 2)},
          {"Z_2 with zero", zero_cyclic_group(2)},
          {"Z_3 with zero", zero_cyclic_group(3)},
          {"3-chain", chain(3)},
          {"4-chain", chain(4)},
          {"2-atom Boolean algebra", boolean_algebra(2)},
          {"3-atom Boolean algebra", boolean_algebra(3)},
          {"I(1)+I(2)", zero_direct_union(i1, i2)},
          {"Lenz witness", parse_table(witness)}};
}

void criterion4(Outcome& o) {
  auto i3 = symmetric_inverse_monoid(3);
  std::size_t maps = 0, tables = 0;
  for (const auto& [label, s] : finite_corpus()) {
    if (s.size() > 20) continue;
    ++tables;
    auto c = distributive_completion(s);
    o.check(c.delta[s.zero()] == c.table.zero(), label + ": delta not 0-restricted");
    o.check(is_homomorphism(s, c.table, c.delta), label + ": delta not a homomorphism");
    o.check(is_cover_to_join_bruteforce(s, c.table, c.delta), label + ": delta not cover-to-join");
    o.check(is_distributive(c.table), label + ": D(S) not distributive");
    o.check(part1_isomorphism(s, c).has_value(), label + ": E(D(S)) and D(E(S)) differ");
    if (is_boolean(c.table)) {
      auto cmp = comparison_check(s, c);
      o.check(cmp.ok, label + ": " + cmp.message);
    }
    for (const auto& theta : enumerate_homomorphisms(s, i3)) {
      if (!is_cover_to_join(s, i3, theta)) continue;
      ++maps;
      auto r = check_universal_property(s, c, i3, theta);
      o.check(r.ok, label + ": universal property: " + r.message);
    }
  }
  o.detail << tables << " tables, " << maps << " cover-to-join maps into I(3); ";
}

void criterion5(Outcome& o) {
  std::mt19937_64 rng(5);
  std::size_t yes = 0;
  for (int t = 0; t < 10000; ++t) {
    PolyParams p{2 + static_cast<unsigned>(rng() % 2), 1};
    auto a = random_poly(rng, p, 3, false);
    const std::size_t room = 5 - std::max(a.x().size(), a.y().size());
    std::vector<PolyElement> b;
    for (int k = static_cast<int>(rng() % 3); k > 0; --k) b.push_back(random_poly(rng, p, 5));
    if (room > 0 && rng() % 2) {
      // Elements below a along a maximal code, some dropped.
      for (auto& ext : random_maximal_code(rng, p.n, rng() % 4, room)) {
        if (rng() % 6 == 0) continue;
        b.push_back(PolyElement::make(p, a.y() + oracle::word(ext, p.n), a.x() + oracle::word(ext, p.n)));
      }
    }
    std::shuffle(b.begin(), b.end(), rng);
    bool lib = lenz_arrow(a, b);
    yes += lib;
    if (lib != oracle::lenz_arrow(a, b)) {
      o.fail("instance " + std::to_string(t) + " a=" + format_poly(a));
      break;
    }
  }
  o.detail << "10000 instances, " << yes << " true; ";
}

void criterion6(Outcome& o) {
  std::mt19937_64 rng(6);
  std::size_t points = 0;
  const std::vector<oracle::Point> pts[2][2] = {
      {oracle::all_points(2, 1, 5), oracle::all_points(2, 2, 5)},
      {oracle::all_points(3, 1, 4), oracle::all_points(3, 2, 4)}};
  for (int t = 0; t < 100000 && o.ok; ++t) {
    PolyParams p{2 + static_cast<unsigned>(rng() % 2), 1 + static_cast<unsigned>(rng() % 2)};
    auto s = random_poly(rng, p, 2), u = random_poly(rng, p, 2), v = random_poly(rng, p, 2);
    auto su = poly_mul(s, u);
    for (const auto& w : pts[p.n - 2][p.r - 1]) {
      ++points;
      if (oracle::act(su, w) != oracle::act_composite(s, u, w)) {
        o.fail("poly " + format_poly(s) + " * " + format_poly(u));
        break;
      }
    }
    o.check(poly_mul(su, v) == poly_mul(s, poly_mul(u, v)), "poly associativity");
  }

  auto g = parse_graph("vertex p\nvertex q\nedge x q p\nedge y p p\nedge z p q\nedge w q q\n");
  std::vector<VertexId> dom;
  auto paths = oracle::all_paths(*g, 2, &dom);
  std::vector<GraphElement> els{GraphElement::zero(g)};
  auto mk = [&](std::size_t k) { return paths[k].empty() ? Path(g, dom[k]) : Path(g, paths[k]); };
  for (std::size_t a = 0; a < paths.size(); ++a)
    for (std::size_t b = 0; b < paths.size(); ++b)
      if (dom[a] == dom[b]) els.push_back(GraphElement::make(mk(a), mk(b)));
  std::vector<VertexId> pdom;
  auto ppaths = oracle::all_paths(*g, 5, &pdom);
  for (int t = 0; t < 100000 && o.ok; ++t) {
    const auto &s = els[rng() % els.size()], &u = els[rng() % els.size()], &v = els[rng() % els.size()];
    auto su = gisg_mul(s, u);
    for (std::size_t k = 0; k < ppaths.size(); ++k) {
      ++points;
      oracle::PathPoint w{pdom[k], ppaths[k]};
      auto inner = oracle::act(u, w);
      if (oracle::act(su, w) != (inner ? oracle::act(s, *inner) : std::nullopt)) {
        o.fail("graph " + format_graph_element(s) + " * " + format_graph_element(u));
        break;
      }
    }
    o.check(gisg_mul(su, v) == gisg_mul(s, gisg_mul(u, v)), "graph associativity");
  }
  o.detail << "100000 polycyclic and 100000 graph pairs, " << points << " points; ";
}

void criterion7(Outcome& o) {
  std::mt19937_64 rng(7);
  std::size_t maximal = 0;
  for (int t = 0; t < 10000; ++t) {
    unsigned n = 2 + rng() % 2;
    PolyParams p{n, 1};
    auto code = random_maximal_code(rng, n, 1 + rng() % 5, 4);
    // Drop leaves, or extend one into a non-maximal code.
    if (rng() % 2)
      for (std::size_t k = code.size(); k-- > 0;)
        if (code.size() > 1 && rng() % 4 == 0) code.erase(code.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<Word> words;
    std::vector<PolyElement> idem;
    for (auto& w : code) {
      words.push_back(oracle::word(w, n));
      idem.push_back(PolyElement::make(p, words.back(), words.back()));
    }
    bool depth = is_maximal_prefix_code(words, Alphabet(n));
    maximal += depth;
    o.check(depth == oracle::kraft_is_one(code, n), "depth criterion vs Kraft");
    o.check(depth == (kraft_sum(words, Alphabet(n)) == 1), "library Kraft sum");
    o.check(depth == lenz_arrow(PolyElement::one(p), idem), "1 -> {x x^-1} vs maximality");
    if (!o.ok) break;
  }
  o.detail << "10000 codes, " << maximal << " maximal; ";
}

void criterion8(Outcome& o) {
  std::mt19937_64 rng(8);
  const PolyParams params[] = {{2, 1}, {2, 2}, {3, 1}, {3, 2}};
  for (const auto& p : params) {
    const std::size_t max_splits = (16 - p.r) / (p.n - 1);
    auto id = tp_identity(p);
    auto pick = [&] { return tp_random(p, rng() % (max_splits + 1), rng); };
    for (int t = 0; t < 1000 && o.ok; ++t) {
      auto g = pick(), h = pick(), k = pick();
      o.check(g.domain.size() <= 16 && h.domain.size() <= 16, "leaf bound");
      auto gh = tp_mul(g, h);
      o.check(tp_eq(tp_mul(gh, k), tp_mul(g, tp_mul(h, k))), "associativity");
      o.check(tp_eq(tp_mul(g, id), g) && tp_eq(tp_mul(id, g), g), "identity");
      o.check(tp_eq(tp_mul(g, tp_inv(g)), id) && tp_eq(tp_mul(tp_inv(g), g), id), "inverse");
      // Composition oracle at random points deep enough for both factors.
      const std::size_t len = std::max(oracle::depth(gh), oracle::depth(g) + oracle::depth(h));
      for (int q = 0; q < 64; ++q) {
        oracle::Point w{static_cast<unsigned>(rng() % p.r), ""};
        for (std::size_t c = 0; c < len; ++c) w.w += static_cast<char>('a' + rng() % p.n);
        auto inner = oracle::act(h, w);
        auto rhs = inner ? oracle::act(g, *inner) : std::nullopt;
        if (!rhs || oracle::act(gh, w) != rhs) {
          o.fail("composition oracle for " + format_tree_pair(g) + " o " + format_tree_pair(h));
          break;
        }
      }
      // Units multiply like their tree pairs.
      auto ug = tp_to_unit(g), uh = tp_to_unit(h);
      o.check(is_unit(ug), "tree pair does not give a unit");
      o.check(tp_eq(tp_from_unit(cuntz_mul(ug, uh)), gh), "unit product vs tree pair product");
      o.check(tp_from_unit(ug) == tp_reduce(g), "unit round trip");
    }
    o.detail << "G_{" << p.n << "," << p.r << "} 1000 ";
  }
}

void criterion9(Outcome& o) {
  std::vector<std::pair<std::string, MulTable>> corpus = {
      {"I(1)", symmetric_inverse_monoid(1)},
      {"I(2)", symmetric_inverse_monoid(2)},
      {"I(3)", symmetric_inverse_monoid(3)},
      {"2-atom Boolean algebra", boolean_algebra(2)},
      {"3-atom Boolean algebra", boolean_algebra(3)},
      {"Z_3 with zero", zero_cyclic_group(3)},
      {"I(2)xI(2)", direct_product(symmetric_inverse_monoid(2), symmetric_inverse_monoid(2))},
      {"I(2)x(Z_2 with zero)", direct_product(symmetric_inverse_monoid(2), zero_cyclic_group(2))}};
  for (const auto& [label, s] : corpus) {
    if (!is_boolean(s)) {
      o.fail(label + " is not Boolean");
      continue;
    }
    auto ic = ideal_correspondence(s);
    o.check(ic.ok, label + ": " + ic.message);
    std::vector<Elem> arrow_elem;
    auto g = atom_groupoid(s, &arrow_elem);
    // Components by union-find over dom/cod.
    std::vector<std::size_t> parent(g.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t a = 0; a < g.size(); ++a) {
      parent[find(a)] = find(g.dom[a]);
      parent[find(g.cod[a])] = find(g.dom[a]);
    }
    std::set<std::size_t> roots;
    for (std::size_t a = 0; a < g.size(); ++a) roots.insert(find(a));
    o.check(ic.ideals.size() == (std::size_t{1} << roots.size()), label + ": ideal count vs components");
    std::set<std::size_t> images;
    for (std::size_t k = 0; k < ic.ideals.size(); ++k) {
      const auto& ideal = ic.ideals[k];
      const auto& x = ic.invariant_sets[ic.o_of_ideal[k]];
      images.insert(ic.o_of_ideal[k]);
      // O(I): the arrows whose atom lies in I.
      for (std::size_t a = 0; a < g.size(); ++a)
        o.check(x.test(a) == ideal.test(arrow_elem[a]), label + ": O(I) is not the atoms of I");
      // Invariance.
      for (std::size_t a = 0; a < g.size(); ++a)
        if (x.test(a)) o.check(x.test(g.dom[a]) && x.test(g.cod[a]), label + ": O(I) not invariant");
      // C(X): elements all of whose atoms lie in X.
      for (Elem e = 0; e < s.size(); ++e) {
        bool inside = true;
        for (std::size_t a = 0; a < g.size(); ++a)
          if (oracle::leq(s, arrow_elem[a], e) && !x.test(a)) inside = false;
        o.check(inside == ideal.test(e), label + ": C(O(I)) differs from I");
      }
    }
    o.check(images.size() == ic.ideals.size(), label + ": O is not injective");
    o.detail << label << ":" << ic.ideals.size() << " ";
  }
}

void criterion10(Outcome& o) {
  std::mt19937_64 rng(10);
  const PolyParams params[] = {{2, 1}, {2, 2}, {3, 1}, {3, 2}};
  std::size_t equal = 0;
  for (int t = 0; t < 10000 && o.ok; ++t) {
    const auto& p = params[rng() % 4];
    CuntzElement x(p, oracle::random_compatible_parts(rng, p, rng() % 5));
    auto nf = cuntz_normalize(x);
    for (int k = 0; k < 3; ++k) o.check(cuntz_normalize_shuffled(x, rng) == nf, "shuffled order disagrees");
    o.check(cuntz_equiv_by_arrow(nf, x), "normal form not equivalent");
    // Pair with an equivalent rewrite half of the time.
    CuntzElement y = rng() % 2 ? CuntzElement(p, oracle::random_compatible_parts(rng, p, rng() % 5))
                               : CuntzElement(p, orthogonalize(x.parts()));
    bool eq = cuntz_eq(x, y);
    equal += eq;
    o.check(eq == cuntz_equiv_by_arrow(x, y), "cuntz_eq vs mutual arrow");
  }
  o.detail << "10000 elements, " << equal << " equal pairs; ";
}

}  // namespace

int main() {
  const std::pair<int, std::function<void(Outcome&)>> criteria[] = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}};
  int failed = 0;
  for (const auto& [n, run] : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s (%.2f s) %s\n", n, o.ok ? "PASS" : "FAIL", secs, o.detail.str().c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed ? 1 : 0;
}
