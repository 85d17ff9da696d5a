#include "stonedual/filtercomp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace stonedual {

namespace {

std::vector<Elem> members(const Bits& b) {
  std::vector<Elem> out;
  for (auto x = b.find_first(); x != Bits::npos; x = b.find_next(x)) out.push_back(static_cast<Elem>(x));
  return out;
}

// Visits every subset of `pool` (as a vector of elements).
bool for_each_subset(const std::vector<Elem>& pool, const std::function<bool(const std::vector<Elem>&)>& f) {
  if (pool.size() > 20) throw LimitError("subset enumeration over more than 20 elements");
  std::vector<Elem> sub;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
    sub.clear();
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1) sub.push_back(pool[i]);
    if (!f(sub)) return false;
  }
  return true;
}

}  // namespace

std::vector<Elem> ultrafilters(const MulTable& s) { return s.zero_minimal(); }

bool is_tight_filter(const MulTable& s, Elem e) {
  if (e == s.zero()) throw DomainError("filters do not contain zero");
  const Bits& above = s.up(e);
  for (Elem a : members(above)) {
    // Largest candidate cover of a that misses e^up.
    Bits cand = s.down(a) - above;
    cand.reset(s.zero());
    if (table_arrow(s, a, members(cand))) return false;
  }
  return true;
}

bool is_tight_filter_bruteforce(const MulTable& s, Elem e) {
  if (e == s.zero()) throw DomainError("filters do not contain zero");
  const Bits& above = s.up(e);
  for (Elem a : members(above)) {
    Bits pool = s.down(a);
    pool.reset(s.zero());
    bool ok = for_each_subset(members(pool), [&](const std::vector<Elem>& cover) {
      if (!table_arrow(s, a, cover)) return true;
      return std::any_of(cover.begin(), cover.end(), [&](Elem c) { return above.test(c); });
    });
    if (!ok) return false;
  }
  return true;
}

LenzQuotient lenz_congruence(const MulTable& s) {
  if (!is_meet_semigroup(s)) throw DomainError("the Lenz quotient needs an inverse meet-semigroup");
  const std::size_t m = s.size();
  std::vector<Bits> arrow(m, Bits(m));
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) {
      Elem bs[1] = {b};
      if (table_arrow(s, a, bs)) arrow[a].set(b);
    }
  Partition p;
  p.cls.assign(m, 0);
  std::vector<Elem> reps;
  for (Elem a = 0; a < m; ++a) {
    auto it = std::find_if(reps.begin(), reps.end(), [&](Elem r) { return arrow[a].test(r) && arrow[r].test(a); });
    if (it == reps.end()) {
      p.cls[a] = static_cast<std::uint32_t>(reps.size());
      reps.push_back(a);
    } else {
      p.cls[a] = static_cast<std::uint32_t>(it - reps.begin());
    }
  }
  // The relation must be an equivalence and a congruence.
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      if ((p.cls[a] == p.cls[b]) != (arrow[a].test(b) && arrow[b].test(a)))
        throw InternalError("mutual arrow is not transitive");
  if (!is_congruence(s, p)) throw InternalError("mutual arrow is not a congruence");
  auto [q, proj] = quotient(s, p);
  for (Elem x = 0; x < q.size(); ++x)
    for (Elem y = 0; y < q.size(); ++y) {
      Elem ys[1] = {y};
      if (table_arrow(q, x, ys) != q.leq(x, y)) throw InternalError("Lenz quotient is not separative");
    }
  return {std::move(q), std::move(proj), std::move(p)};
}

// ---------------------------------------------------------------------------

CompatibleIdeal ideal_of(const MulTable& s, std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::erase(elems, s.zero());
  CompatibleIdeal out;
  for (Elem x : elems) {
    bool covered = std::any_of(elems.begin(), elems.end(), [&](Elem y) { return y != x && s.leq(x, y); });
    if (!covered) out.generators.push_back(x);
  }
  return out;
}

CompatibleIdeal ideal_product(const MulTable& s, const CompatibleIdeal& a, const CompatibleIdeal& b) {
  std::vector<Elem> prods;
  for (Elem x : a.generators)
    for (Elem y : b.generators) prods.push_back(s.mul(x, y));
  return ideal_of(s, std::move(prods));
}

std::vector<CompatibleIdeal> compatible_ideals(const MulTable& s, std::size_t cap) {
  std::vector<Elem> nz;
  for (Elem x = 0; x < s.size(); ++x)
    if (x != s.zero()) nz.push_back(x);
  std::vector<CompatibleIdeal> out;
  std::vector<Elem> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    out.push_back({cur});
    if (out.size() > cap) throw LimitError("more than " + std::to_string(cap) + " compatible ideals");
    for (std::size_t i = from; i < nz.size(); ++i) {
      Elem x = nz[i];
      bool ok = std::all_of(cur.begin(), cur.end(), [&](Elem y) {
        return s.compatible(x, y) && !s.leq(x, y) && !s.leq(y, x);
      });
      if (!ok) continue;
      cur.push_back(x);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

MulTable fc_semigroup(const MulTable& s, const std::vector<CompatibleIdeal>& ideals) {
  std::map<CompatibleIdeal, Elem> index;
  for (std::size_t i = 0; i < ideals.size(); ++i) index[ideals[i]] = static_cast<Elem>(i);
  const std::size_t m = ideals.size();
  std::vector<Elem> prod(m * m);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) {
    std::string n = "{";
    for (Elem g : ideals[a].generators) n += (n.size() > 1 ? "," : "") + s.name(g);
    names.push_back(n + "}");
    for (std::size_t b = 0; b < m; ++b) {
      auto it = index.find(ideal_product(s, ideals[a], ideals[b]));
      if (it == index.end()) throw InternalError("product of compatible ideals is not compatible");
      prod[a * m + b] = it->second;
    }
  }
  std::optional<Elem> id;
  if (s.identity()) id = index.at(CompatibleIdeal{{*s.identity()}});
  return MulTable(m, index.at(CompatibleIdeal{}), std::move(prod), id, std::move(names));
}

// ---------------------------------------------------------------------------

namespace {

Bits support_of(const MulTable& q, const CompatibleIdeal& a) {
  Bits b(q.size());
  for (Elem g : a.generators) b |= q.support(g);
  return b;
}

}  // namespace

Completion distributive_completion(const MulTable& s) {
  Completion c{lenz_congruence(s), {}, MulTable(1, 0, {0}), {}};
  const MulTable& q = c.lenz.table;
  std::vector<CompatibleIdeal> ideals = compatible_ideals(q);
  std::map<Bits, Elem> class_of;
  for (const CompatibleIdeal& a : ideals) {
    Bits sup = support_of(q, a);
    if (class_of.emplace(sup, static_cast<Elem>(c.classes.size())).second) c.classes.push_back({sup, a});
  }
  if (c.classes.front().support.any()) throw InternalError("the zero ideal must come first");
  const std::size_t m = c.classes.size();
  std::vector<Elem> prod(m * m);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) {
    std::string n = "[";
    for (Elem g : c.classes[a].representative.generators) n += (n.size() > 1 ? "," : "") + q.name(g);
    names.push_back(a == 0 ? "0" : n + "]");
    for (std::size_t b = 0; b < m; ++b)
      prod[a * m + b] = class_of.at(support_of(q, ideal_product(q, c.classes[a].representative, c.classes[b].representative)));
  }
  if (ideals.size() <= 400)
    for (const auto& a : ideals)
      for (const auto& b : ideals)
        if (prod[class_of.at(support_of(q, a)) * m + class_of.at(support_of(q, b))] !=
            class_of.at(support_of(q, ideal_product(q, a, b))))
          throw InternalError("class product depends on the representative");
  std::optional<Elem> id;
  if (q.identity()) id = class_of.at(q.support(*q.identity()));
  c.table = MulTable(m, 0, std::move(prod), id, std::move(names));
  c.delta.resize(s.size());
  for (Elem x = 0; x < s.size(); ++x) c.delta[x] = class_of.at(q.support(c.lenz.lambda[x]));

  if (c.delta[s.zero()] != 0) throw InternalError("delta(0) != 0");
  for (Elem x = 0; x < s.size(); ++x)
    if (x != s.zero() && c.delta[x] == 0) throw InternalError("delta is not 0-restricted");
  if (!is_homomorphism(s, c.table, c.delta)) throw InternalError("delta is not a homomorphism");
  if (!is_cover_to_join(s, c.table, c.delta)) throw InternalError("delta is not cover-to-join");
  if (!is_distributive(c.table)) throw InternalError("D(S) is not distributive");
  return c;
}

std::optional<Elem> cover_to_join_failure(const MulTable& s, const MulTable& t, std::span<const Elem> theta) {
  if (theta[s.zero()] != t.zero()) return s.zero();
  for (Elem e : s.idempotents()) {
    std::vector<Elem> imgs;
    for (Elem a : members(s.support(e))) imgs.push_back(theta[a]);
    auto j = t.join(imgs);
    if (!j || *j != theta[e]) return e;
  }
  return std::nullopt;
}

bool is_cover_to_join(const MulTable& s, const MulTable& t, std::span<const Elem> theta) {
  return !cover_to_join_failure(s, t, theta);
}

bool is_cover_to_join_bruteforce(const MulTable& s, const MulTable& t, std::span<const Elem> theta) {
  for (Elem a = 0; a < s.size(); ++a) {
    Bits pool = s.down(a);
    pool.reset(s.zero());
    bool ok = for_each_subset(members(pool), [&](const std::vector<Elem>& cover) {
      if (!table_arrow(s, a, cover)) return true;
      std::vector<Elem> imgs;
      for (Elem c : cover) imgs.push_back(theta[c]);
      auto j = t.join(imgs);
      return j && *j == theta[a];
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<std::vector<Elem>> enumerate_homomorphisms(const MulTable& s, const MulTable& t, std::size_t cap) {
  const std::size_t m = s.size();
  const Elem unset = static_cast<Elem>(t.size());
  // Greedy generating set (the zero is handled separately).
  std::vector<Elem> gens;
  {
    Bits gen(m);
    gen.set(s.zero());
    for (Elem a = 0; a < m; ++a) {
      if (gen.test(a)) continue;
      gens.push_back(a);
      std::vector<Elem> queue = members(gen);
      for (std::size_t k = 0; k < queue.size(); ++k)
        for (Elem g : gens)
          for (Elem p : {s.mul(queue[k], g), s.mul(g, queue[k])})
            if (!gen.test(p)) {
              gen.set(p);
              queue.push_back(p);
            }
    }
  }
  std::vector<std::vector<Elem>> out;
  std::size_t nodes = 0;
  std::vector<Elem> map(m, unset);
  map[s.zero()] = t.zero();
  std::vector<Elem> known{s.zero()};
  // Adds x with image y and closes under products with known elements.
  auto extend = [&](std::vector<Elem>& mp, std::vector<Elem>& kn, Elem x, Elem y) -> bool {
    std::vector<std::pair<Elem, Elem>> queue{{x, y}};
    while (!queue.empty()) {
      auto [a, img] = queue.back();
      queue.pop_back();
      if (mp[a] != unset) {
        if (mp[a] != img) return false;
        continue;
      }
      mp[a] = img;
      kn.push_back(a);
      for (std::size_t i = 0; i < kn.size(); ++i) {
        Elem k = kn[i];
        queue.emplace_back(s.mul(a, k), t.mul(img, mp[k]));
        queue.emplace_back(s.mul(k, a), t.mul(mp[k], img));
      }
    }
    return true;
  };
  std::function<void(std::size_t, std::vector<Elem>&, std::vector<Elem>&)> rec =
      [&](std::size_t g, std::vector<Elem>& mp, std::vector<Elem>& kn) {
        if (++nodes > cap) throw LimitError("homomorphism search exceeded its node budget");
        if (g == gens.size()) {
          if (is_homomorphism(s, t, mp)) out.push_back(mp);
          return;
        }
        Elem x = gens[g];
        if (mp[x] != unset) {
          rec(g + 1, mp, kn);
          return;
        }
        for (Elem y = 0; y < t.size(); ++y) {
          if (s.is_idempotent(x) && !t.is_idempotent(y)) continue;
          std::vector<Elem> mp2 = mp, kn2 = kn;
          if (extend(mp2, kn2, x, y)) rec(g + 1, mp2, kn2);
        }
      };
  rec(0, map, known);
  return out;
}

UniversalCheck check_universal_property(const MulTable& s, const Completion& c, const MulTable& t,
                                        std::span<const Elem> theta) {
  UniversalCheck r{false, {}, {}};
  if (!is_homomorphism(s, t, theta)) {
    r.message = "theta is not a homomorphism";
    return r;
  }
  if (auto bad = cover_to_join_failure(s, t, theta)) {
    std::string cover;
    for (Elem a : members(s.support(*bad))) cover += (cover.empty() ? "" : ",") + s.name(a);
    r.message = "theta is not cover-to-join: cover {" + cover + "} of " + s.name(*bad);
    return r;
  }
  if (!is_distributive(t)) {
    r.message = "target is not distributive";
    return r;
  }
  const MulTable& q = c.lenz.table;
  const Elem unset = static_cast<Elem>(t.size());
  std::vector<Elem> on_q(q.size(), unset), pre(q.size(), 0);
  for (Elem x = 0; x < s.size(); ++x) {
    Elem l = c.lenz.lambda[x];
    if (on_q[l] == unset) {
      on_q[l] = theta[x];
      pre[l] = x;
    } else if (on_q[l] != theta[x]) {
      r.message = "theta does not factor through the Lenz quotient";
      return r;
    }
  }
  auto join_of = [&](const CompatibleIdeal& a) {
    std::vector<Elem> imgs;
    for (Elem g : a.generators) imgs.push_back(on_q[g]);
    return t.join(imgs);
  };
  const MulTable& d = c.table;
  std::vector<Elem> ext(d.size());
  for (Elem k = 0; k < d.size(); ++k) {
    auto j = join_of(c.classes[k].representative);
    if (!j) {
      r.message = "images of a compatible set have no join";
      return r;
    }
    ext[k] = *j;
  }
  std::map<Bits, Elem> class_of;
  for (Elem k = 0; k < d.size(); ++k) class_of[c.classes[k].support] = k;
  for (const auto& a : compatible_ideals(q)) {
    Bits sup(q.size());
    for (Elem g : a.generators) sup |= q.support(g);
    auto j = join_of(a);
    if (!j || *j != ext[class_of.at(sup)]) {
      r.message = "theta-bar is not well defined";
      return r;
    }
  }
  if (!is_homomorphism(d, t, ext)) {
    r.message = "theta-bar is not a homomorphism";
    return r;
  }
  for (Elem x = 0; x < d.size(); ++x)
    for (Elem y = x + 1; y < d.size(); ++y) {
      if (!d.compatible(x, y)) continue;
      Elem xy[2] = {x, y}, img[2] = {ext[x], ext[y]};
      auto jd = d.join(xy);
      auto jt = t.join(img);
      if (!jd || !jt || ext[*jd] != *jt) {
        r.message = "theta-bar does not preserve joins";
        return r;
      }
    }
  for (Elem x = 0; x < s.size(); ++x)
    if (ext[c.delta[x]] != theta[x]) {
      r.message = "theta-bar delta != theta";
      return r;
    }
  // Uniqueness: every element of D(S) is a join of delta-images.
  for (Elem k = 0; k < d.size(); ++k) {
    std::vector<Elem> imgs;
    for (Elem g : c.classes[k].representative.generators) imgs.push_back(c.delta[pre[g]]);
    auto j = d.join(imgs);
    if (!j || *j != k) {
      r.message = "D(S) is not generated by delta-images under joins";
      return r;
    }
  }
  r.ok = true;
  r.message = "ok";
  r.extension = std::move(ext);
  return r;
}

// ---------------------------------------------------------------------------

BooleanizationReport booleanization_report(const MulTable& e) {
  for (Elem x = 0; x < e.size(); ++x)
    if (!e.is_idempotent(x)) throw DomainError("booleanization report needs a semilattice");
  BooleanizationReport r{};
  r.atoms = ultrafilters(e);
  std::vector<Elem> tight;
  for (Elem x = 0; x < e.size(); ++x)
    if (x != e.zero() && is_tight_filter(e, x)) tight.push_back(x);
  r.tight_eq_ultra = tight == r.atoms;
  Completion c = distributive_completion(e);
  r.d_size = c.table.size();
  r.d_boolean = is_boolean(c.table);
  r.unital = c.table.with_detected_identity().identity().has_value();
  // The atoms form an essential set when every nonzero element lies above one.
  r.compactable = true;
  for (Elem x = 0; x < e.size(); ++x)
    if (x != e.zero() && !e.support(x).any()) r.compactable = false;
  if (r.unital != r.compactable) throw InternalError("unital and compactable disagree");
  r.zero_disjunctive = is_zero_disjunctive(e);
  std::set<Elem> images(c.delta.begin(), c.delta.end());
  bool injective = images.size() == e.size();
  bool dense = true;
  for (Elem k = 1; k < c.table.size(); ++k) {
    bool below = false;
    for (Elem x = 0; x < e.size() && !below; ++x)
      below = x != e.zero() && c.table.leq(c.delta[x], k);
    dense = dense && below;
  }
  r.densely_embedded = injective && dense;
  r.trapping = true;
  return r;
}

std::optional<std::vector<Elem>> part1_isomorphism(const MulTable& s, const Completion& c) {
  MulTable ed = idempotent_subtable(c.table).first;
  MulTable de = distributive_completion(idempotent_subtable(s).first).table;
  return find_isomorphism(ed, de);
}

std::vector<Elem> orthogonalize(const MulTable& s, std::span<const Elem> xs) {
  if (!is_unambiguous(s) || !is_e_star_unitary(s))
    throw DomainError("orthogonalize needs an unambiguous E*-unitary table");
  for (Elem a : xs)
    for (Elem b : xs)
      if (!s.compatible(a, b)) throw DomainError("set is not pairwise compatible");
  std::vector<Elem> out = ideal_of(s, {xs.begin(), xs.end()}).generators;
  for (Elem a : out)
    for (Elem b : out)
      if (a != b && !s.orthogonal(a, b)) throw InternalError("discard procedure left a non-orthogonal pair");
  return out;
}

std::vector<PolyElement> orthogonalize(std::span<const PolyElement> xs) {
  for (const auto& a : xs)
    for (const auto& b : xs)
      if (!poly_compatible(a, b)) throw DomainError("set is not pairwise compatible");
  std::vector<PolyElement> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<PolyElement> out;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    bool below = std::any_of(v.begin(), v.end(), [&](const PolyElement& y) { return !(y == x) && poly_leq(x, y); });
    if (!below) out.push_back(x);
  }
  return out;
}

std::vector<MulTable> enumerate_meet_semilattices(unsigned m) {
  if (m < 1 || m > 7) throw DomainError("semilattice enumeration supports 1..7 elements");
  const unsigned n = m - 1;  // elements above the bottom, labelled 1..n
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::set<std::vector<bool>> seen;
  std::vector<MulTable> out;
  std::vector<unsigned> perm(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    // lt[i][j]: i < j among the non-bottom elements.
    std::vector<bool> lt(n * n, false);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) lt[pairs[k].first * n + pairs[k].second] = true;
    bool transitive = true;
    for (unsigned a = 0; a < n && transitive; ++a)
      for (unsigned b = 0; b < n && transitive; ++b)
        for (unsigned c = 0; c < n && transitive; ++c)
          if (lt[a * n + b] && lt[b * n + c] && !lt[a * n + c]) transitive = false;
    if (!transitive) continue;
    // Canonical form: least relation matrix over all relabellings.
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
      std::vector<bool> rel(n * n);
      for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) rel[perm[a] * n + perm[b]] = lt[a * n + b];
      if (best.empty() || rel < best) best = rel;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!seen.insert(best).second) continue;
    std::vector<bool> leq(m * m, false);
    for (unsigned a = 0; a < m; ++a) leq[0 * m + a] = true;
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        if (a == b || lt[a * n + b]) leq[(a + 1) * m + (b + 1)] = true;
    try {
      out.push_back(semilattice_from_order(m, 0, leq));
    } catch (const DomainError&) {
      // some pair has no meet
    }
  }
  return out;
}

}  // namespace stonedual
