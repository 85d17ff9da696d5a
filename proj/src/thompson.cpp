#include "stonedual/thompson.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace stonedual {

CuntzElement::CuntzElement(PolyParams p, std::vector<PolyElement> parts) : params_(p), parts_(std::move(parts)) {
  (void)PolyElement::zero(p);  // validates the parameters
  for (const auto& x : parts_)
    if (!(x.params() == p)) throw DomainError("part has different parameters");
}

CuntzElement cuntz_identity(PolyParams p) {
  std::vector<PolyElement> parts;
  for (unsigned i = 0; i < p.r; ++i) parts.push_back(PolyElement::one(p, i));
  return cuntz_normalize(CuntzElement(p, std::move(parts)));
}

namespace {

using Family = std::tuple<unsigned, unsigned, Word, Word>;

void check_compatible(const std::vector<PolyElement>& v) {
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (!poly_compatible(v[a], v[b])) throw DomainError("parts are not pairwise compatible");
}

std::vector<PolyElement> prepared(const CuntzElement& x) {
  std::vector<PolyElement> v;
  for (const auto& p : x.parts())
    if (!p.is_zero()) v.push_back(p);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  check_compatible(v);
  return v;
}

// Parts (i, (u a)(v a)^-1, j) grouped by (i, j, u, v); a family is complete
// when all n letters a are present.
std::vector<Family> complete_families(const std::vector<PolyElement>& v, unsigned n) {
  std::map<Family, std::set<Letter>> groups;
  for (const auto& p : v) {
    const Word& y = p.y();
    const Word& x = p.x();
    if (y.empty() || x.empty() || y[y.size() - 1] != x[x.size() - 1]) continue;
    groups[{p.i(), p.j(), y.prefix(y.size() - 1), x.prefix(x.size() - 1)}].insert(y[y.size() - 1]);
  }
  std::vector<Family> out;
  for (const auto& [key, letters] : groups)
    if (letters.size() == n) out.push_back(key);
  return out;
}

void contract(std::vector<PolyElement>& v, const Family& f, PolyParams params) {
  const auto& [i, j, u, w] = f;
  std::erase_if(v, [&](const PolyElement& p) {
    return p.i() == i && p.j() == j && p.y().size() == u.size() + 1 && p.x().size() == w.size() + 1 &&
           p.y().prefix(u.size()) == u && p.x().prefix(w.size()) == w && p.y()[u.size()] == p.x()[w.size()];
  });
  v.push_back(PolyElement::make(params, i, u, w, j));
}

// Indices of parts strictly below some other part.
std::vector<std::size_t> dominated(const std::vector<PolyElement>& v) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b)
      if (a != b && !(v[a] == v[b]) && poly_leq(v[a], v[b])) {
        out.push_back(a);
        break;
      }
  return out;
}

void canonical(std::vector<PolyElement>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

CuntzElement cuntz_normalize(const CuntzElement& x) {
  std::vector<PolyElement> v = prepared(x);
  const PolyParams p = x.params();
  for (;;) {
    auto low = dominated(v);
    for (auto it = low.rbegin(); it != low.rend(); ++it) v.erase(v.begin() + static_cast<std::ptrdiff_t>(*it));
    auto fam = complete_families(v, p.n);
    if (fam.empty()) break;
    contract(v, fam.front(), p);
    canonical(v);
  }
  canonical(v);
  return CuntzElement(p, std::move(v));
}

CuntzElement cuntz_normalize_shuffled(const CuntzElement& x, std::mt19937_64& rng) {
  std::vector<PolyElement> v = prepared(x);
  const PolyParams p = x.params();
  std::shuffle(v.begin(), v.end(), rng);
  for (;;) {
    auto low = dominated(v);
    auto fam = complete_families(v, p.n);
    if (low.empty() && fam.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, low.size() + fam.size() - 1);
    std::size_t k = pick(rng);
    if (k < low.size()) {
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(low[k]));
    } else {
      contract(v, fam[k - low.size()], p);
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      std::shuffle(v.begin(), v.end(), rng);
    }
  }
  canonical(v);
  return CuntzElement(p, std::move(v));
}

namespace {

void require_same(const CuntzElement& x, const CuntzElement& y) {
  if (!(x.params() == y.params())) throw DomainError("parameter mismatch");
}

}  // namespace

CuntzElement cuntz_mul(const CuntzElement& x, const CuntzElement& y) {
  require_same(x, y);
  std::vector<PolyElement> v;
  for (const auto& a : x.parts())
    for (const auto& b : y.parts())
      if (auto c = poly_mul(a, b); !c.is_zero()) v.push_back(c);
  return cuntz_normalize(CuntzElement(x.params(), std::move(v)));
}

CuntzElement cuntz_inv(const CuntzElement& x) {
  std::vector<PolyElement> v;
  for (const auto& a : x.parts()) v.push_back(a.inverse());
  return cuntz_normalize(CuntzElement(x.params(), std::move(v)));
}

CuntzElement cuntz_meet(const CuntzElement& x, const CuntzElement& y) {
  require_same(x, y);
  // Meets distribute over joins.
  std::vector<PolyElement> v;
  for (const auto& a : x.parts())
    for (const auto& b : y.parts())
      if (auto c = poly_meet(a, b); !c.is_zero()) v.push_back(c);
  return cuntz_normalize(CuntzElement(x.params(), std::move(v)));
}

CuntzElement cuntz_join(const CuntzElement& x, const CuntzElement& y) {
  require_same(x, y);
  std::vector<PolyElement> v = x.parts();
  v.insert(v.end(), y.parts().begin(), y.parts().end());
  return cuntz_normalize(CuntzElement(x.params(), std::move(v)));
}

bool cuntz_equiv_by_arrow(const CuntzElement& x, const CuntzElement& y) {
  require_same(x, y);
  auto into = [](const CuntzElement& a, const CuntzElement& b) {
    for (const auto& p : a.parts())
      if (!p.is_zero() && !lenz_arrow(p, b.parts())) return false;
    return true;
  };
  return into(x, y) && into(y, x);
}

bool cuntz_eq(const CuntzElement& x, const CuntzElement& y) {
  require_same(x, y);
  bool same = cuntz_normalize(x) == cuntz_normalize(y);
  if (same != cuntz_equiv_by_arrow(x, y)) throw InternalError("normal forms and mutual arrows disagree");
  return same;
}

bool is_unit(const CuntzElement& x) {
  CuntzElement nx = cuntz_normalize(x);
  const PolyParams p = x.params();
  std::vector<RootedWord> dom, ran;
  for (const auto& a : nx.parts()) {
    dom.push_back({a.j(), a.x()});
    ran.push_back({a.i(), a.y()});
  }
  return !dom.empty() && is_maximal_rooted_code(dom, p.r, Alphabet(p.n)) &&
         is_maximal_rooted_code(ran, p.r, Alphabet(p.n));
}

std::optional<RootedWord> cuntz_act(const CuntzElement& x, const RootedWord& w) {
  for (const auto& a : x.parts())
    if (auto out = poly_act(a, w)) return out;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

bool rooted_prefix(const RootedWord& a, const RootedWord& b) { return a.root == b.root && is_prefix(a.word, b.word); }

using Leaves = std::vector<std::pair<RootedWord, RootedWord>>;

void split(Leaves& leaves, std::size_t k, unsigned n) {
  auto [d, r] = leaves[k];
  leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(k));
  for (Letter a = 0; a < n; ++a) leaves.push_back({{d.root, d.word.appended(a)}, {r.root, r.word.appended(a)}});
}

}  // namespace

TreePair make_tree_pair(PolyParams p, std::vector<std::pair<RootedWord, RootedWord>> leaves) {
  (void)PolyElement::zero(p);
  TreePair g{p, {}, {}, {}};
  std::sort(leaves.begin(), leaves.end());
  for (const auto& [d, r] : leaves) {
    g.domain.push_back(d);
    g.range.push_back(r);
  }
  std::sort(g.range.begin(), g.range.end());
  for (const auto& [d, r] : leaves)
    g.perm.push_back(static_cast<std::size_t>(std::lower_bound(g.range.begin(), g.range.end(), r) - g.range.begin()));
  check_tree_pair(g);
  return g;
}

std::vector<std::pair<RootedWord, RootedWord>> leaf_pairs(const TreePair& g) {
  Leaves out;
  for (std::size_t k = 0; k < g.domain.size(); ++k) out.push_back({g.domain[k], g.range[g.perm[k]]});
  return out;
}

void check_tree_pair(const TreePair& g) {
  const Alphabet a(g.params.n);
  if (g.domain.size() != g.range.size() || g.perm.size() != g.domain.size())
    throw DomainError("domain and range codes must have the same size");
  if (!std::is_sorted(g.domain.begin(), g.domain.end()) || !std::is_sorted(g.range.begin(), g.range.end()))
    throw DomainError("codes must be listed in canonical order");
  std::vector<std::size_t> seen = g.perm;
  std::sort(seen.begin(), seen.end());
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (seen[k] != k) throw DomainError("perm is not a permutation");
  for (const auto& w : g.domain)
    if (!(w.word.alphabet() == a)) throw DomainError("alphabet mismatch");
  for (const auto& w : g.range)
    if (!(w.word.alphabet() == a)) throw DomainError("alphabet mismatch");
  if (!is_maximal_rooted_code(g.domain, g.params.r, a)) throw DomainError("domain is not a maximal prefix code");
  if (!is_maximal_rooted_code(g.range, g.params.r, a)) throw DomainError("range is not a maximal prefix code");
}

TreePair tp_identity(PolyParams p) {
  Leaves leaves;
  for (unsigned i = 0; i < p.r; ++i) leaves.push_back({{i, Word(Alphabet(p.n))}, {i, Word(Alphabet(p.n))}});
  return make_tree_pair(p, std::move(leaves));
}

TreePair tp_reduce(const TreePair& g) {
  const unsigned n = g.params.n;
  Leaves leaves = leaf_pairs(g);
  for (;;) {
    // Sibling families (d a, r a) for every letter a.
    std::map<std::pair<RootedWord, RootedWord>, std::set<Letter>> groups;
    for (const auto& [d, r] : leaves) {
      if (d.word.empty() || r.word.empty()) continue;
      Letter a = d.word[d.word.size() - 1];
      if (r.word[r.word.size() - 1] != a) continue;
      groups[{{d.root, d.word.prefix(d.word.size() - 1)}, {r.root, r.word.prefix(r.word.size() - 1)}}].insert(a);
    }
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& kv) { return kv.second.size() == n; });
    if (it == groups.end()) break;
    auto [pd, pr] = it->first;
    std::erase_if(leaves, [&](const auto& l) {
      return l.first.root == pd.root && l.first.word.size() == pd.word.size() + 1 &&
             l.first.word.prefix(pd.word.size()) == pd.word && l.second.root == pr.root &&
             l.second.word.size() == pr.word.size() + 1 && l.second.word.prefix(pr.word.size()) == pr.word &&
             l.first.word[pd.word.size()] == l.second.word[pr.word.size()];
    });
    leaves.push_back({pd, pr});
  }
  return make_tree_pair(g.params, std::move(leaves));
}

TreePair tp_mul(const TreePair& g, const TreePair& h) {
  if (!(g.params == h.params)) throw DomainError("parameter mismatch");
  const unsigned n = g.params.n;
  Leaves lh = leaf_pairs(h), lg = leaf_pairs(g);
  // Refine R(h) and D(g) against each other until they coincide.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < lh.size() && !changed; ++k)
      for (const auto& [d, r] : lg)
        if (rooted_prefix(lh[k].second, d) && !(lh[k].second == d)) {
          split(lh, k, n);
          changed = true;
          break;
        }
    for (std::size_t k = 0; k < lg.size() && !changed; ++k)
      for (const auto& [d, r] : lh)
        if (rooted_prefix(lg[k].first, r) && !(lg[k].first == r)) {
          split(lg, k, n);
          changed = true;
          break;
        }
  }
  std::map<RootedWord, RootedWord> gmap(lg.begin(), lg.end());
  Leaves out;
  for (const auto& [d, r] : lh) {
    auto it = gmap.find(r);
    if (it == gmap.end()) throw InternalError("common refinement failed");
    out.push_back({d, it->second});
  }
  return tp_reduce(make_tree_pair(g.params, std::move(out)));
}

TreePair tp_inv(const TreePair& g) {
  Leaves out;
  for (const auto& [d, r] : leaf_pairs(g)) out.push_back({r, d});
  return make_tree_pair(g.params, std::move(out));
}

bool tp_eq(const TreePair& g, const TreePair& h) {
  if (!(g.params == h.params)) throw DomainError("parameter mismatch");
  return tp_reduce(g) == tp_reduce(h);
}

std::optional<RootedWord> tp_act(const TreePair& g, const RootedWord& w) {
  for (const auto& [d, r] : leaf_pairs(g))
    if (rooted_prefix(d, w)) return RootedWord{r.root, r.word + w.word.drop(d.word.size())};
  return std::nullopt;
}

TreePair tp_from_unit(const CuntzElement& x) {
  CuntzElement nx = cuntz_normalize(x);
  if (!is_unit(nx)) throw DomainError("element is not a unit");
  Leaves leaves;
  for (const auto& a : nx.parts()) leaves.push_back({{a.j(), a.x()}, {a.i(), a.y()}});
  return tp_reduce(make_tree_pair(x.params(), std::move(leaves)));
}

CuntzElement tp_to_unit(const TreePair& g) {
  check_tree_pair(g);
  std::vector<PolyElement> parts;
  for (const auto& [d, r] : leaf_pairs(g)) parts.push_back(PolyElement::make(g.params, r.root, r.word, d.word, d.root));
  return cuntz_normalize(CuntzElement(g.params, std::move(parts)));
}

TreePair tp_random(PolyParams p, std::size_t splits, std::mt19937_64& rng) {
  auto code = [&] {
    std::vector<RootedWord> leaves;
    for (unsigned i = 0; i < p.r; ++i) leaves.push_back({i, Word(Alphabet(p.n))});
    for (std::size_t s = 0; s < splits; ++s) {
      std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
      std::size_t k = pick(rng);
      RootedWord w = leaves[k];
      leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(k));
      for (Letter a = 0; a < p.n; ++a) leaves.push_back({w.root, w.word.appended(a)});
    }
    return leaves;
  };
  auto d = code(), r = code();
  std::shuffle(r.begin(), r.end(), rng);
  Leaves leaves;
  for (std::size_t k = 0; k < d.size(); ++k) leaves.push_back({d[k], r[k]});
  return make_tree_pair(p, std::move(leaves));
}

}  // namespace stonedual
