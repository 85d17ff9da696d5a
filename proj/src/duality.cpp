#include "stonedual/duality.hpp"

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

void require_boolean(const MulTable& s, const char* what) {
  if (!is_meet_semigroup(s)) throw DomainError(std::string(what) + " needs an inverse meet-semigroup");
  if (!is_boolean(s)) throw DomainError(std::string(what) + " needs a Boolean inverse semigroup");
}

}  // namespace

std::vector<std::uint32_t> FiniteGroupoid::objects() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 0; a < size(); ++a)
    if (is_object(a)) out.push_back(a);
  return out;
}

bool FiniteGroupoid::is_principal() const {
  for (std::uint32_t a = 0; a < size(); ++a)
    if (dom[a] == cod[a] && !is_object(a)) return false;
  return true;
}

std::vector<std::uint32_t> FiniteGroupoid::components() const {
  std::vector<std::uint32_t> parent(size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::uint32_t a = 0; a < size(); ++a) {
    auto x = find(dom[a]), y = find(cod[a]);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::map<std::uint32_t, std::uint32_t> label;
  std::vector<std::uint32_t> out(size());
  for (std::uint32_t a = 0; a < size(); ++a) {
    auto [it, fresh] = label.emplace(find(dom[a]), static_cast<std::uint32_t>(label.size()));
    out[a] = it->second;
  }
  return out;
}

std::string check_groupoid(const FiniteGroupoid& g) {
  const std::size_t n = g.size();
  if (g.cod.size() != n || g.inv.size() != n || g.comp.size() != n * n || g.names.size() != n)
    return "inconsistent sizes";
  for (std::uint32_t a = 0; a < n; ++a) {
    if (g.dom[a] >= n || g.cod[a] >= n || g.inv[a] >= n) return "index out of range at " + g.names[a];
    if (!g.is_object(g.dom[a]) || !g.is_object(g.cod[a])) return "endpoint of " + g.names[a] + " is not an object";
    if (g.is_object(a) && g.cod[a] != a) return "object " + g.names[a] + " is not an identity";
  }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      std::uint32_t c = g.compose(a, b);
      if ((g.dom[a] == g.cod[b]) != (c != FiniteGroupoid::none)) return "composition domain wrong at " + g.names[a] + "," + g.names[b];
      if (c == FiniteGroupoid::none) continue;
      if (c >= n || g.dom[c] != g.dom[b] || g.cod[c] != g.cod[a]) return "composite has wrong endpoints";
    }
  for (std::uint32_t a = 0; a < n; ++a) {
    if (g.compose(a, g.dom[a]) != a || g.compose(g.cod[a], a) != a) return "identity law fails at " + g.names[a];
    if (g.compose(a, g.inv[a]) != g.cod[a] || g.compose(g.inv[a], a) != g.dom[a]) return "inverse law fails at " + g.names[a];
    for (std::uint32_t b = 0; b < n; ++b) {
      if (g.compose(a, b) == FiniteGroupoid::none) continue;
      for (std::uint32_t c = 0; c < n; ++c) {
        if (g.compose(b, c) == FiniteGroupoid::none) continue;
        if (g.compose(g.compose(a, b), c) != g.compose(a, g.compose(b, c))) return "composition is not associative";
      }
    }
  }
  return {};
}

FiniteGroupoid atom_groupoid(const MulTable& s, std::vector<Elem>* elements) {
  const auto& atoms = s.zero_minimal();
  const std::size_t n = atoms.size();
  std::map<Elem, std::uint32_t> index;
  for (std::size_t i = 0; i < n; ++i) index[atoms[i]] = static_cast<std::uint32_t>(i);
  auto at = [&](Elem x) {
    auto it = index.find(x);
    if (it == index.end()) throw InternalError("product of composable atoms is not an atom");
    return it->second;
  };
  FiniteGroupoid g;
  g.comp.assign(n * n, FiniteGroupoid::none);
  for (Elem a : atoms) {
    g.names.push_back(s.name(a));
    g.dom.push_back(at(s.d(a)));
    g.cod.push_back(at(s.r(a)));
    g.inv.push_back(at(s.inv(a)));
  }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (g.dom[a] == g.cod[b]) g.comp[a * n + b] = at(s.mul(atoms[a], atoms[b]));
  if (auto err = check_groupoid(g); !err.empty()) throw InternalError("atom groupoid: " + err);
  if (elements) *elements = atoms;
  return g;
}

FiniteGroupoid ultrafilter_groupoid(const MulTable& s, std::vector<Elem>* elements) {
  require_boolean(s, "the ultrafilter groupoid");
  std::vector<Elem> atoms;
  FiniteGroupoid g = atom_groupoid(s, &atoms);
  // (s^up t^up)^up must be (st)^up.
  for (std::uint32_t a = 0; a < g.size(); ++a)
    for (std::uint32_t b = 0; b < g.size(); ++b) {
      std::uint32_t c = g.compose(a, b);
      if (c == FiniteGroupoid::none) continue;
      Bits prod(s.size());
      for (Elem x : members(s.up(atoms[a])))
        for (Elem y : members(s.up(atoms[b]))) prod.set(s.mul(x, y));
      Bits closed(s.size());
      for (Elem z : members(prod)) closed |= s.up(z);
      if (closed != s.up(atoms[c])) throw InternalError("filter product disagrees with the atom product");
    }
  if (elements) *elements = std::move(atoms);
  return g;
}

BisectionSemigroup bisection_semigroup(const FiniteGroupoid& g) {
  const std::size_t n = g.size();
  std::vector<std::uint32_t> objs = g.objects();
  std::vector<std::vector<std::uint32_t>> from(n);
  for (std::uint32_t a = 0; a < n; ++a) from[g.dom[a]].push_back(a);
  std::vector<Bits> all;
  Bits cur(n), used_cod(n);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == objs.size()) {
      all.push_back(cur);
      if (all.size() > max_elements()) throw LimitError("too many bisections");
      return;
    }
    rec(k + 1);
    for (std::uint32_t a : from[objs[k]]) {
      if (used_cod.test(g.cod[a])) continue;
      cur.set(a);
      used_cod.set(g.cod[a]);
      rec(k + 1);
      cur.reset(a);
      used_cod.reset(g.cod[a]);
    }
  };
  rec(0);
  std::sort(all.begin(), all.end(), [](const Bits& a, const Bits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return members(a) < members(b);
  });
  std::map<Bits, Elem> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = static_cast<Elem>(i);
  const std::size_t m = all.size();
  std::vector<std::vector<Elem>> mem(m);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    mem[i] = members(all[i]);
    std::string nm = "{";
    for (Elem a : mem[i]) nm += (nm.size() > 1 ? "," : "") + g.names[a];
    names.push_back(nm + "}");
  }
  std::vector<Elem> prod(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Bits c(n);
      for (Elem a : mem[i])
        for (Elem b : mem[j])
          if (auto ab = g.compose(a, b); ab != FiniteGroupoid::none) c.set(ab);
      prod[i * m + j] = index.at(c);
    }
  Bits id(n);
  for (auto o : objs) id.set(o);
  return {MulTable(m, 0, std::move(prod), index.at(id), std::move(names)), std::move(all)};
}

Roundtrip duality_roundtrip(const MulTable& s) {
  Roundtrip r;
  std::vector<Elem> atoms;
  r.groupoid = atom_groupoid(s, &atoms);
  r.bisections = bisection_semigroup(r.groupoid);
  std::map<Elem, std::uint32_t> arrow_of;
  for (std::size_t i = 0; i < atoms.size(); ++i) arrow_of[atoms[i]] = static_cast<std::uint32_t>(i);
  std::map<Bits, Elem> index;
  for (std::size_t i = 0; i < r.bisections.bisections.size(); ++i) index[r.bisections.bisections[i]] = static_cast<Elem>(i);
  r.map.resize(s.size());
  std::vector<bool> hit(r.bisections.table.size(), false);
  for (Elem x = 0; x < s.size(); ++x) {
    Bits v(r.groupoid.size());
    for (Elem a : members(s.support(x))) v.set(arrow_of.at(a));
    auto it = index.find(v);
    if (it == index.end()) {
      r.message = "V of " + s.name(x) + " is not a bisection";
      return r;
    }
    if (hit[it->second]) {
      r.message = "not injective at " + s.name(x);
      return r;
    }
    hit[it->second] = true;
    r.map[x] = it->second;
  }
  if (s.size() != r.bisections.table.size()) {
    r.message = "not surjective: " + std::to_string(s.size()) + " elements, " +
                std::to_string(r.bisections.table.size()) + " bisections";
    return r;
  }
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem b = 0; b < s.size(); ++b)
      if (r.map[s.mul(a, b)] != r.bisections.table.mul(r.map[a], r.map[b])) {
        r.message = "not multiplicative at " + s.name(a) + "," + s.name(b);
        return r;
      }
  r.ok = true;
  r.message = "ok";
  return r;
}

bool groupoid_roundtrip(const FiniteGroupoid& g, std::string* message) {
  auto fail = [&](std::string m) {
    if (message) *message = std::move(m);
    return false;
  };
  BisectionSemigroup b = bisection_semigroup(g);
  std::vector<Elem> atoms;
  FiniteGroupoid h = atom_groupoid(b.table, &atoms);
  if (h.size() != g.size()) return fail("arrow counts differ");
  // F_g is the filter above the singleton bisection {g}.
  std::vector<std::uint32_t> f(g.size());
  std::map<Elem, std::uint32_t> pos;
  for (std::size_t i = 0; i < atoms.size(); ++i) pos[atoms[i]] = static_cast<std::uint32_t>(i);
  for (std::uint32_t a = 0; a < g.size(); ++a) {
    Bits single(g.size());
    single.set(a);
    auto it = std::find(b.bisections.begin(), b.bisections.end(), single);
    if (it == b.bisections.end()) return fail("singleton is not a bisection");
    f[a] = pos.at(static_cast<Elem>(it - b.bisections.begin()));
  }
  std::set<std::uint32_t> distinct(f.begin(), f.end());
  if (distinct.size() != g.size()) return fail("g -> F_g is not injective");
  for (std::uint32_t a = 0; a < g.size(); ++a) {
    if (h.dom[f[a]] != f[g.dom[a]] || h.cod[f[a]] != f[g.cod[a]]) return fail("endpoints not preserved");
    for (std::uint32_t c = 0; c < g.size(); ++c) {
      auto gc = g.compose(a, c);
      auto hc = h.compose(f[a], f[c]);
      if ((gc == FiniteGroupoid::none) != (hc == FiniteGroupoid::none)) return fail("composability not preserved");
      if (gc != FiniteGroupoid::none && f[gc] != hc) return fail("composition not preserved");
    }
  }
  if (message) *message = "ok";
  return true;
}

IdealCorrespondence ideal_correspondence(const MulTable& s) {
  require_boolean(s, "the ideal correspondence");
  IdealCorrespondence r;
  std::vector<Elem> atoms;
  FiniteGroupoid g = atom_groupoid(s, &atoms);
  std::map<Elem, std::uint32_t> arrow_of;
  for (std::size_t i = 0; i < atoms.size(); ++i) arrow_of[atoms[i]] = static_cast<std::uint32_t>(i);
  auto v_of = [&](Elem x) {
    Bits v(g.size());
    for (Elem a : members(s.support(x))) v.set(arrow_of.at(a));
    return v;
  };
  r.ideals = tightly_closed_ideals(s);
  auto comp = g.components();
  const std::size_t c = g.size() ? *std::max_element(comp.begin(), comp.end()) + 1 : 0;
  if (c > 20) throw LimitError("too many connected components");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    Bits o(g.size());
    for (std::uint32_t a = 0; a < g.size(); ++a)
      if (mask >> comp[a] & 1) o.set(a);
    r.invariant_sets.push_back(o);
  }
  std::sort(r.invariant_sets.begin(), r.invariant_sets.end(), [](const Bits& a, const Bits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return members(a) < members(b);
  });
  auto fail = [&](std::string m) {
    r.message = std::move(m);
    return r;
  };
  if (r.ideals.size() != r.invariant_sets.size())
    return fail(std::to_string(r.ideals.size()) + " tightly closed ideals but " +
                std::to_string(r.invariant_sets.size()) + " invariant subsets");
  auto o_of = [&](const Bits& t) {
    Bits o(g.size());
    for (Elem x : members(t)) o |= v_of(x);
    return o;
  };
  auto c_of = [&](const Bits& o) {
    Bits t(s.size());
    for (Elem x = 0; x < s.size(); ++x)
      if (v_of(x).is_subset_of(o)) t.set(x);
    return t;
  };
  std::vector<bool> used(r.invariant_sets.size(), false);
  for (const Bits& t : r.ideals) {
    Bits o = o_of(t);
    auto it = std::find(r.invariant_sets.begin(), r.invariant_sets.end(), o);
    if (it == r.invariant_sets.end()) return fail("O(T) is not invariant");
    std::size_t k = static_cast<std::size_t>(it - r.invariant_sets.begin());
    if (used[k]) return fail("O is not injective");
    used[k] = true;
    r.o_of_ideal.push_back(k);
    if (c_of(o) != t) return fail("C(O(T)) != T");
  }
  for (const Bits& o : r.invariant_sets) {
    Bits t = c_of(o);
    if (std::find(r.ideals.begin(), r.ideals.end(), t) == r.ideals.end()) return fail("C(O) is not a tightly closed ideal");
    if (o_of(t) != o) return fail("O(C(O)) != O");
  }
  for (std::size_t i = 0; i < r.ideals.size(); ++i)
    for (std::size_t j = 0; j < r.ideals.size(); ++j)
      if (r.ideals[i].is_subset_of(r.ideals[j]) !=
          r.invariant_sets[r.o_of_ideal[i]].is_subset_of(r.invariant_sets[r.o_of_ideal[j]]))
        return fail("order not preserved");
  r.ok = true;
  r.message = "ok";
  return r;
}

Classification classify_symmetric(const MulTable& input) {
  Classification c;
  if (auto v = validate(input); !v.ok) throw DomainError("not an inverse semigroup with zero: " + v.message());
  MulTable s = input.identity() ? input : input.with_detected_identity();
  if (!s.identity()) {
    c.failure = "not a monoid";
    return c;
  }
  if (!is_meet_semigroup(s)) {
    c.failure = "not a meet-semigroup";
    return c;
  }
  if (!is_boolean(s)) {
    c.failure = "not Boolean";
    return c;
  }
  if (!is_fundamental(s)) {
    c.failure = "not fundamental";
    return c;
  }
  if (!is_zero_simplifying(s)) {
    c.failure = "not 0-simplifying";
    return c;
  }
  std::vector<Elem> atoms;
  FiniteGroupoid g = atom_groupoid(s, &atoms);
  auto objs = g.objects();
  const unsigned k = static_cast<unsigned>(objs.size());
  if (k == 0) {
    c.k = 0;
    c.iso.assign(s.size(), 0);
    return c;
  }
  if (k > 5) throw LimitError("symmetric inverse monoids are built up to k = 5");
  MulTable ik = symmetric_inverse_monoid(k);
  std::map<std::uint32_t, unsigned> point;
  for (unsigned i = 0; i < k; ++i) point[objs[i]] = i;
  std::map<Elem, std::uint32_t> arrow_of;
  for (std::size_t i = 0; i < atoms.size(); ++i) arrow_of[atoms[i]] = static_cast<std::uint32_t>(i);
  c.iso.resize(s.size());
  for (Elem x = 0; x < s.size(); ++x) {
    // V_x as a partial bijection: each arrow sends its domain to its codomain.
    std::string img(k, '-');
    for (Elem a : members(s.support(x))) {
      auto arr = arrow_of.at(a);
      img[point.at(g.dom[arr])] = static_cast<char>('1' + point.at(g.cod[arr]));
    }
    auto y = ik.find(img);
    if (!y) throw InternalError("V_x is not a partial bijection");
    c.iso[x] = *y;
  }
  std::set<Elem> distinct(c.iso.begin(), c.iso.end());
  if (s.size() != ik.size() || distinct.size() != s.size() || !is_homomorphism(s, ik, c.iso))
    throw InternalError("classifier conditions hold but the map to I(k) is not an isomorphism");
  c.k = k;
  return c;
}

PrincipalReport principal_criterion(const MulTable& s) {
  require_boolean(s, "the principal criterion");
  PrincipalReport r{true, false, false};
  const auto& e = s.idempotents();
  for (Elem f : s.zero_minimal()) {
    if (!s.is_idempotent(f)) continue;
    // F = f^up inside E(S).
    Bits ff(s.size());
    for (Elem x : e)
      if (s.leq(f, x)) ff.set(x);
    Bits fc(s.size());
    for (Elem x = 0; x < s.size(); ++x) {
      if (!ff.test(s.d(x)) || !ff.test(s.r(x))) continue;
      bool ok = true;
      for (Elem y : members(ff))
        if (!ff.test(s.mul(s.mul(x, y), s.inv(x))) || !ff.test(s.mul(s.mul(s.inv(x), y), x))) ok = false;
      if (ok) fc.set(x);
    }
    if (fc != s.up(f)) r.criterion = false;
  }
  r.groupoid_principal = ultrafilter_groupoid(s).is_principal();
  r.fundamental = is_fundamental(s);
  if (r.criterion != r.groupoid_principal || r.criterion != r.fundamental)
    throw InternalError("principal criterion, principal groupoid and fundamental disagree");
  return r;
}

ComparisonCheck comparison_check(const MulTable& s, const Completion& c) {
  ComparisonCheck r;
  std::vector<Elem> atoms;
  FiniteGroupoid g = atom_groupoid(s, &atoms);
  BisectionSemigroup b = bisection_semigroup(g);
  const MulTable& q = c.lenz.table;
  // lambda must match the atoms of S with the atoms of the quotient.
  std::map<Elem, std::uint32_t> arrow_of_qatom;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    Elem qa = c.lenz.lambda[atoms[i]];
    if (!arrow_of_qatom.emplace(qa, static_cast<std::uint32_t>(i)).second) {
      r.message = "lambda identifies two atoms";
      return r;
    }
  }
  if (arrow_of_qatom.size() != q.zero_minimal().size()) {
    r.message = "lambda does not reach every atom of the quotient";
    return r;
  }
  std::map<Bits, Elem> index;
  for (std::size_t i = 0; i < b.bisections.size(); ++i) index[b.bisections[i]] = static_cast<Elem>(i);
  if (b.table.size() != c.table.size()) {
    r.message = "D(S) has " + std::to_string(c.table.size()) + " elements, B(G(S)) has " +
                std::to_string(b.table.size());
    return r;
  }
  r.map.resize(c.table.size());
  std::set<Elem> seen;
  for (Elem k = 0; k < c.table.size(); ++k) {
    Bits v(g.size());
    for (Elem qa : members(c.classes[k].support)) v.set(arrow_of_qatom.at(qa));
    auto it = index.find(v);
    if (it == index.end()) {
      r.message = "support of a class is not a bisection";
      return r;
    }
    r.map[k] = it->second;
    seen.insert(it->second);
  }
  if (seen.size() != c.table.size()) {
    r.message = "map is not injective";
    return r;
  }
  if (!is_homomorphism(c.table, b.table, r.map)) {
    r.message = "map is not a homomorphism";
    return r;
  }
  r.ok = true;
  r.message = "ok";
  return r;
}

}  // namespace stonedual
