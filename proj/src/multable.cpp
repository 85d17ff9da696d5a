#include "stonedual/multable.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace stonedual {

std::size_t max_elements() {
  if (const char* v = std::getenv("STONEDUAL_MAX_ELEMENTS")) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
  }
  return 2000;
}

struct TableCache {
  std::once_flag once;
  std::vector<Elem> inv;
  std::vector<Elem> idempotents;
  std::vector<Bits> down, up, support;
  std::vector<Elem> zero_minimal;
  std::vector<std::uint32_t> dclass;
  std::size_t dcount = 0;
};

MulTable::MulTable(std::size_t m, Elem zero, std::vector<Elem> products, std::optional<Elem> identity,
                   std::vector<std::string> names)
    : m_(m), zero_(zero), t_(std::move(products)), identity_(identity), names_(std::move(names)),
      cache_(std::make_shared<TableCache>()) {
  if (m == 0) throw DomainError("a table needs at least the zero element");
  if (m > max_elements())
    throw LimitError("table has " + std::to_string(m) + " elements, cap is " + std::to_string(max_elements()));
  if (t_.size() != m * m) throw DomainError("table must have m*m entries");
  if (zero >= m) throw DomainError("zero index out of range");
  if (identity && *identity >= m) throw DomainError("identity index out of range");
  for (Elem x : t_)
    if (x >= m) throw DomainError("table entry " + std::to_string(x) + " out of range");
  if (names_.empty()) {
    for (std::size_t i = 0; i < m; ++i) names_.push_back(std::to_string(i));
  } else if (names_.size() != m) {
    throw DomainError("name list size mismatch");
  }
}

std::optional<Elem> MulTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < m_; ++i)
    if (names_[i] == name) return static_cast<Elem>(i);
  return std::nullopt;
}

MulTable MulTable::renamed(std::vector<std::string> names) const {
  return MulTable(m_, zero_, t_, identity_, std::move(names));
}

MulTable MulTable::with_detected_identity() const {
  for (Elem e = 0; e < m_; ++e) {
    bool ok = true;
    for (Elem a = 0; a < m_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) return MulTable(m_, zero_, t_, e, names_);
  }
  return MulTable(m_, zero_, t_, std::nullopt, names_);
}

const TableCache& MulTable::cache() const {
  std::call_once(cache_->once, [this] {
    Validation v = validate(*this);
    if (!v.ok) throw DomainError(v.message());
    TableCache& c = *cache_;
    const std::size_t m = m_;
    c.inv.assign(m, 0);
    for (Elem a = 0; a < m; ++a)
      for (Elem b = 0; b < m; ++b)
        if (mul(mul(a, b), a) == a && mul(mul(b, a), b) == b) {
          c.inv[a] = b;
          break;
        }
    for (Elem a = 0; a < m; ++a)
      if (mul(a, a) == a) c.idempotents.push_back(a);
    c.down.assign(m, Bits(m));
    c.up.assign(m, Bits(m));
    for (Elem s = 0; s < m; ++s) {
      Elem ds = mul(c.inv[s], s);
      for (Elem t = 0; t < m; ++t)
        if (mul(t, ds) == s) {
          c.down[t].set(s);
          c.up[s].set(t);
        }
    }
    Bits atoms(m);
    for (Elem s = 0; s < m; ++s)
      if (s != zero_ && c.down[s].count() == 2) {
        c.zero_minimal.push_back(s);
        atoms.set(s);
      }
    c.support.resize(m);
    for (Elem s = 0; s < m; ++s) c.support[s] = c.down[s] & atoms;
    // D on idempotents: e D f iff some x has d(x) = e and r(x) = f.
    std::vector<Elem> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](Elem x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (Elem x = 0; x < m; ++x) {
      Elem a = root(mul(c.inv[x], x)), b = root(mul(x, c.inv[x]));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    c.dclass.assign(m, 0);
    std::map<Elem, std::uint32_t> label;
    label[root(zero_)] = 0;
    for (Elem x = 0; x < m; ++x) {
      Elem rt = root(mul(c.inv[x], x));
      auto [it, fresh] = label.emplace(rt, static_cast<std::uint32_t>(label.size()));
      c.dclass[x] = it->second;
    }
    c.dcount = label.size();
  });
  return *cache_;
}

Elem MulTable::inv(Elem a) const { return cache().inv.at(a); }
const std::vector<Elem>& MulTable::idempotents() const { return cache().idempotents; }
const Bits& MulTable::down(Elem a) const { return cache().down.at(a); }
const Bits& MulTable::up(Elem a) const { return cache().up.at(a); }
const std::vector<Elem>& MulTable::zero_minimal() const { return cache().zero_minimal; }
const Bits& MulTable::support(Elem a) const { return cache().support.at(a); }
const std::vector<std::uint32_t>& MulTable::d_class() const { return cache().dclass; }
std::size_t MulTable::d_class_count() const { return cache().dcount; }

namespace {

// The element of `set` whose relation-set contains all of `set` (a maximum
// or minimum depending on which relation is passed).
std::optional<Elem> extremum(const Bits& set, const std::vector<Bits>& rel) {
  for (auto c = set.find_first(); c != Bits::npos; c = set.find_next(c))
    if (set.is_subset_of(rel[c])) return static_cast<Elem>(c);
  return std::nullopt;
}

}  // namespace

std::optional<Elem> MulTable::meet(Elem a, Elem b) const {
  const auto& c = cache();
  return extremum(c.down[a] & c.down[b], c.down);
}

std::optional<Elem> MulTable::join(std::span<const Elem> xs) const {
  const auto& c = cache();
  Bits u(m_);
  u.set();
  for (Elem x : xs) u &= c.up[x];
  return extremum(u, c.up);
}

bool MulTable::compatible(Elem a, Elem b) const {
  return is_idempotent(mul(inv(a), b)) && is_idempotent(mul(a, inv(b)));
}

bool MulTable::orthogonal(Elem a, Elem b) const {
  return mul(inv(a), b) == zero_ && mul(a, inv(b)) == zero_;
}

// ---------------------------------------------------------------------------

std::string Validation::message() const {
  if (ok) return "ok";
  std::ostringstream os;
  os << axiom;
  if (!witness.empty()) {
    os << " (witness";
    for (Elem w : witness) os << ' ' << w;
    os << ')';
  }
  return os.str();
}

Validation validate(const MulTable& s) {
  const std::size_t m = s.size();
  const Elem z = s.zero();
  for (Elem a = 0; a < m; ++a)
    if (s.mul(z, a) != z || s.mul(a, z) != z) return {false, "zero is not absorbing", {a}};
  if (auto e = s.identity())
    for (Elem a = 0; a < m; ++a)
      if (s.mul(*e, a) != a || s.mul(a, *e) != a) return {false, "identity is not neutral", {a}};

  // Associativity by Light's test over a generating set: the elements g with
  // (xg)y = x(gy) for all x, y form a subsemigroup.
  std::vector<Elem> gens;
  Bits generated(m);
  for (Elem a = 0; a < m; ++a) {
    if (generated.test(a)) continue;
    gens.push_back(a);
    std::vector<Elem> queue;
    for (auto x = generated.find_first(); x != Bits::npos; x = generated.find_next(x))
      queue.push_back(static_cast<Elem>(x));
    queue.push_back(a);
    generated.set(a);
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (Elem g : gens)
        for (Elem p : {s.mul(queue[k], g), s.mul(g, queue[k])})
          if (!generated.test(p)) {
            generated.set(p);
            queue.push_back(p);
          }
  }
  for (Elem g : gens)
    for (Elem x = 0; x < m; ++x)
      for (Elem y = 0; y < m; ++y)
        if (s.mul(s.mul(x, g), y) != s.mul(x, s.mul(g, y))) return {false, "not associative", {x, g, y}};

  for (Elem a = 0; a < m; ++a) {
    std::vector<Elem> found;
    for (Elem b = 0; b < m; ++b)
      if (s.mul(s.mul(a, b), a) == a && s.mul(s.mul(b, a), b) == b) found.push_back(b);
    if (found.empty()) return {false, "element has no inverse", {a}};
    if (found.size() > 1) return {false, "element has more than one inverse", {a, found[0], found[1]}};
  }
  std::vector<Elem> idem;
  for (Elem a = 0; a < m; ++a)
    if (s.mul(a, a) == a) idem.push_back(a);
  for (Elem e : idem)
    for (Elem f : idem)
      if (s.mul(e, f) != s.mul(f, e)) return {false, "idempotents do not commute", {e, f}};
  return {};
}

// ---------------------------------------------------------------------------
// Constructors

MulTable symmetric_inverse_monoid(unsigned k) {
  if (k < 1 || k > 5) throw DomainError("symmetric inverse monoid needs 1 <= k <= 5");
  // Partial injections as image vectors, -1 = undefined.
  std::vector<std::vector<int>> maps;
  std::vector<int> cur(k, -1);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned x, unsigned used) {
    if (x == k) {
      maps.push_back(cur);
      return;
    }
    cur[x] = -1;
    rec(x + 1, used);
    for (unsigned y = 0; y < k; ++y)
      if (!(used & (1u << y))) {
        cur[x] = static_cast<int>(y);
        rec(x + 1, used | (1u << y));
      }
    cur[x] = -1;
  };
  rec(0, 0);
  auto rank = [](const std::vector<int>& v) { return std::count_if(v.begin(), v.end(), [](int y) { return y >= 0; }); };
  std::stable_sort(maps.begin(), maps.end(), [&](const auto& a, const auto& b) {
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return a < b;
  });
  std::map<std::vector<int>, Elem> index;
  for (std::size_t i = 0; i < maps.size(); ++i) index[maps[i]] = static_cast<Elem>(i);
  const std::size_t m = maps.size();
  std::vector<Elem> t(m * m);
  std::vector<int> comp(k);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      // (a b)(x) = a(b(x)): b acts first.
      for (unsigned x = 0; x < k; ++x) comp[x] = maps[b][x] < 0 ? -1 : maps[a][maps[b][x]];
      t[a * m + b] = index.at(comp);
    }
  std::vector<std::string> names;
  for (const auto& v : maps) {
    std::string n;
    for (int y : v) n += y < 0 ? '-' : static_cast<char>('1' + y);
    names.push_back(n);
  }
  std::vector<int> id(k);
  for (unsigned x = 0; x < k; ++x) id[x] = static_cast<int>(x);
  return MulTable(m, 0, std::move(t), index.at(id), std::move(names));
}

MulTable zero_direct_union(const MulTable& s, const MulTable& t) {
  // S's elements keep their indices; T's nonzero elements follow.
  const std::size_t ms = s.size();
  std::vector<Elem> tmap(t.size());
  Elem next = static_cast<Elem>(ms);
  for (Elem b = 0; b < t.size(); ++b) tmap[b] = b == t.zero() ? s.zero() : next++;
  const std::size_t m = next;
  std::vector<Elem> prod(m * m, s.zero());
  std::vector<std::string> names(m);
  for (Elem a = 0; a < ms; ++a) {
    names[a] = a == s.zero() ? "0" : "L:" + s.name(a);
    for (Elem b = 0; b < ms; ++b) prod[a * m + b] = s.mul(a, b);
  }
  for (Elem a = 0; a < t.size(); ++a) {
    if (a == t.zero()) continue;
    names[tmap[a]] = "R:" + t.name(a);
    for (Elem b = 0; b < t.size(); ++b)
      if (b != t.zero()) prod[tmap[a] * m + tmap[b]] = tmap[t.mul(a, b)];
  }
  return MulTable(m, s.zero(), std::move(prod), std::nullopt, std::move(names));
}

MulTable direct_product(const MulTable& s, const MulTable& t) {
  const std::size_t ms = s.size(), mt = t.size(), m = ms * mt;
  if (m > max_elements()) throw LimitError("direct product too large");
  std::vector<Elem> prod(m * m);
  std::vector<std::string> names(m);
  for (Elem a1 = 0; a1 < ms; ++a1)
    for (Elem a2 = 0; a2 < mt; ++a2) {
      Elem a = a1 * mt + a2;
      names[a] = "(" + s.name(a1) + "," + t.name(a2) + ")";
      for (Elem b1 = 0; b1 < ms; ++b1)
        for (Elem b2 = 0; b2 < mt; ++b2) prod[a * m + b1 * mt + b2] = s.mul(a1, b1) * mt + t.mul(a2, b2);
    }
  std::optional<Elem> id;
  if (s.identity() && t.identity()) id = *s.identity() * mt + *t.identity();
  return MulTable(m, s.zero() * static_cast<Elem>(mt) + t.zero(), std::move(prod), id, std::move(names));
}

MulTable rees_b_r(const MulTable& mon, unsigned r) {
  if (r < 1) throw DomainError("rees_b_r needs r >= 1");
  if (!mon.identity()) throw DomainError("rees_b_r needs an inverse monoid with zero");
  Validation v = validate(mon);
  if (!v.ok) throw DomainError("invalid input table: " + v.message());
  std::vector<Elem> nz;
  std::vector<Elem> pos(mon.size(), 0);
  for (Elem a = 0; a < mon.size(); ++a)
    if (a != mon.zero()) {
      pos[a] = static_cast<Elem>(nz.size());
      nz.push_back(a);
    }
  const std::size_t k = nz.size(), m = 1 + r * r * k;
  if (m > max_elements()) throw LimitError("Rees construction too large");
  auto index = [&](unsigned i, Elem a, unsigned j) { return static_cast<Elem>(1 + (i * r + j) * k + pos[a]); };
  std::vector<Elem> prod(m * m, 0);
  std::vector<std::string> names(m, "0");
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j)
      for (Elem a : nz) {
        Elem x = index(i, a, j);
        names[x] = "(" + std::to_string(i + 1) + "|" + mon.name(a) + "|" + std::to_string(j + 1) + ")";
        for (unsigned l = 0; l < r; ++l)
          for (Elem b : nz) {
            Elem c = mon.mul(a, b);
            if (c != mon.zero()) prod[x * m + index(j, b, l)] = index(i, c, l);
          }
      }
  std::optional<Elem> id;
  if (r == 1) id = index(0, *mon.identity(), 0);
  return MulTable(m, 0, std::move(prod), id, std::move(names));
}

MulTable zero_cyclic_group(unsigned k) {
  if (k < 1) throw DomainError("group order must be positive");
  const std::size_t m = k + 1;
  std::vector<Elem> prod(m * m, 0);
  std::vector<std::string> names{"0"};
  for (unsigned a = 0; a < k; ++a) {
    names.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
    for (unsigned b = 0; b < k; ++b) prod[(a + 1) * m + b + 1] = 1 + (a + b) % k;
  }
  return MulTable(m, 0, std::move(prod), Elem{1}, std::move(names));
}

MulTable chain(unsigned k) {
  if (k < 1) throw DomainError("chain needs at least one element");
  std::vector<Elem> prod(k * k);
  std::vector<std::string> names{"0"};
  for (unsigned a = 0; a < k; ++a) {
    if (a) names.push_back("e" + std::to_string(a));
    for (unsigned b = 0; b < k; ++b) prod[a * k + b] = std::min(a, b);
  }
  std::optional<Elem> id;
  if (k > 1) id = k - 1;
  return MulTable(k, 0, std::move(prod), id, std::move(names));
}

MulTable boolean_algebra(unsigned k) {
  if (k > 10) throw LimitError("boolean algebra on more than 10 atoms");
  const std::size_t m = std::size_t{1} << k;
  std::vector<Elem> prod(m * m);
  std::vector<std::string> names;
  for (Elem a = 0; a < m; ++a) {
    std::string n = "{";
    for (unsigned i = 0; i < k; ++i)
      if (a & (1u << i)) n += (n.size() > 1 ? "," : "") + std::to_string(i + 1);
    names.push_back(n + "}");
    for (Elem b = 0; b < m; ++b) prod[a * m + b] = a & b;
  }
  std::optional<Elem> id;
  if (k > 0) id = static_cast<Elem>(m - 1);
  return MulTable(m, 0, std::move(prod), id, std::move(names));
}

MulTable semilattice_from_order(std::size_t m, Elem bottom, const std::vector<bool>& leq) {
  if (leq.size() != m * m) throw DomainError("order relation size mismatch");
  std::vector<Elem> prod(m * m);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) {
      std::optional<Elem> best;
      for (Elem c = 0; c < m; ++c) {
        if (!leq[c * m + a] || !leq[c * m + b]) continue;
        bool top = true;
        for (Elem x = 0; x < m && top; ++x)
          if (leq[x * m + a] && leq[x * m + b] && !leq[x * m + c]) top = false;
        if (top) best = c;
      }
      if (!best) throw DomainError("order has no meet for " + std::to_string(a) + "," + std::to_string(b));
      prod[a * m + b] = *best;
    }
  std::optional<Elem> id;
  for (Elem a = 0; a < m && !id; ++a) {
    bool top = true;
    for (Elem b = 0; b < m && top; ++b) top = leq[b * m + a];
    if (top && m > 1) id = a;
  }
  return MulTable(m, bottom, std::move(prod), id);
}

std::pair<MulTable, std::vector<Elem>> idempotent_subtable(const MulTable& s) {
  const auto& e = s.idempotents();
  const std::size_t m = e.size();
  std::vector<Elem> pos(s.size(), 0);
  for (std::size_t i = 0; i < m; ++i) pos[e[i]] = static_cast<Elem>(i);
  std::vector<Elem> prod(m * m);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) {
    names.push_back(s.name(e[a]));
    for (std::size_t b = 0; b < m; ++b) prod[a * m + b] = pos[s.mul(e[a], e[b])];
  }
  std::optional<Elem> id;
  if (s.identity()) id = pos[*s.identity()];
  return {MulTable(m, pos[s.zero()], std::move(prod), id, std::move(names)), e};
}

// ---------------------------------------------------------------------------
// Congruences

std::size_t Partition::classes() const {
  if (cls.empty()) return 0;
  return *std::max_element(cls.begin(), cls.end()) + 1;
}

namespace {

struct UnionFind {
  std::vector<Elem> parent;
  explicit UnionFind(std::size_t m) : parent(m) { std::iota(parent.begin(), parent.end(), 0); }
  Elem find(Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  Partition partition() {
    Partition p;
    p.cls.resize(parent.size());
    std::map<Elem, std::uint32_t> label;
    for (Elem x = 0; x < parent.size(); ++x) {
      auto [it, fresh] = label.emplace(find(x), static_cast<std::uint32_t>(label.size()));
      p.cls[x] = it->second;
    }
    return p;
  }
};

}  // namespace

Partition identity_partition(std::size_t m) {
  Partition p;
  p.cls.resize(m);
  std::iota(p.cls.begin(), p.cls.end(), 0);
  return p;
}

Partition congruence_closure(const MulTable& s, std::span<const std::pair<Elem, Elem>> pairs) {
  const std::size_t m = s.size();
  UnionFind uf(m);
  std::vector<std::pair<Elem, Elem>> queue(pairs.begin(), pairs.end());
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    if (!uf.unite(a, b)) continue;
    for (Elem x = 0; x < m; ++x) {
      queue.emplace_back(s.mul(x, a), s.mul(x, b));
      queue.emplace_back(s.mul(a, x), s.mul(b, x));
    }
  }
  return uf.partition();
}

Partition principal_congruence(const MulTable& s, Elem a, Elem b) {
  std::pair<Elem, Elem> p{a, b};
  return congruence_closure(s, std::span(&p, 1));
}

Partition partition_join(const Partition& a, const Partition& b) {
  if (a.cls.size() != b.cls.size()) throw DomainError("partition size mismatch");
  const std::size_t m = a.cls.size();
  UnionFind uf(m);
  std::vector<Elem> first_a(m, static_cast<Elem>(m)), first_b(m, static_cast<Elem>(m));
  for (Elem x = 0; x < m; ++x) {
    if (first_a[a.cls[x]] == m) first_a[a.cls[x]] = x; else uf.unite(first_a[a.cls[x]], x);
    if (first_b[b.cls[x]] == m) first_b[b.cls[x]] = x; else uf.unite(first_b[b.cls[x]], x);
  }
  return uf.partition();
}

bool refines(const Partition& fine, const Partition& coarse) {
  std::map<std::uint32_t, std::uint32_t> img;
  for (std::size_t x = 0; x < fine.cls.size(); ++x) {
    auto [it, fresh] = img.emplace(fine.cls[x], coarse.cls[x]);
    if (it->second != coarse.cls[x]) return false;
  }
  return true;
}

bool is_congruence(const MulTable& s, const Partition& p) {
  const std::size_t m = s.size();
  if (p.cls.size() != m) return false;
  std::vector<Elem> rep(m, static_cast<Elem>(m));
  for (Elem x = 0; x < m; ++x)
    if (rep[p.cls[x]] == m) rep[p.cls[x]] = x;
  for (Elem a = 0; a < m; ++a) {
    Elem r = rep[p.cls[a]];
    for (Elem x = 0; x < m; ++x)
      if (p.cls[s.mul(x, a)] != p.cls[s.mul(x, r)] || p.cls[s.mul(a, x)] != p.cls[s.mul(r, x)]) return false;
  }
  return true;
}

std::pair<MulTable, std::vector<Elem>> quotient(const MulTable& s, const Partition& p) {
  if (!is_congruence(s, p)) throw DomainError("partition is not a congruence");
  const std::size_t k = p.classes(), m = s.size();
  std::vector<Elem> rep(k, static_cast<Elem>(m));
  for (Elem x = 0; x < m; ++x)
    if (rep[p.cls[x]] == m) rep[p.cls[x]] = x;
  std::vector<Elem> prod(k * k);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < k; ++a) {
    std::string n;
    for (Elem x = 0; x < m; ++x)
      if (p.cls[x] == a) n += (n.empty() ? "" : "~") + s.name(x);
    names.push_back(k == m ? s.name(rep[a]) : n);
    for (std::size_t b = 0; b < k; ++b) prod[a * k + b] = p.cls[s.mul(rep[a], rep[b])];
  }
  std::optional<Elem> id;
  if (s.identity()) id = p.cls[*s.identity()];
  std::vector<Elem> proj(p.cls.begin(), p.cls.end());
  return {MulTable(k, p.cls[s.zero()], std::move(prod), id, std::move(names)), std::move(proj)};
}

std::vector<Partition> enumerate_congruences(const MulTable& s, std::size_t cap) {
  const std::size_t m = s.size();
  std::set<Partition> seen;
  std::vector<Partition> all;
  auto add = [&](Partition p) {
    if (seen.insert(p).second) {
      all.push_back(std::move(p));
      if (all.size() > cap) throw LimitError("more than " + std::to_string(cap) + " congruences");
    }
  };
  add(identity_partition(m));
  for (Elem a = 0; a < m; ++a)
    for (Elem b = a + 1; b < m; ++b) add(principal_congruence(s, a, b));
  const std::size_t principal = all.size();
  for (std::size_t i = 1; i < all.size(); ++i)
    for (std::size_t j = 1; j < std::min(i, principal); ++j) add(partition_join(all[i], all[j]));
  std::sort(all.begin(), all.end(), [](const Partition& a, const Partition& b) {
    if (a.classes() != b.classes()) return a.classes() > b.classes();
    return a.cls < b.cls;
  });
  return all;
}

Partition mu_congruence(const MulTable& s) {
  const auto& e = s.idempotents();
  std::map<std::vector<Elem>, std::uint32_t> label;
  Partition p;
  std::vector<Elem> first;
  p.cls.resize(s.size());
  for (Elem x = 0; x < s.size(); ++x) {
    std::vector<Elem> sig;
    sig.reserve(e.size());
    for (Elem f : e) sig.push_back(s.mul(s.mul(x, f), s.inv(x)));
    auto [it, fresh] = label.emplace(std::move(sig), static_cast<std::uint32_t>(label.size()));
    p.cls[x] = it->second;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Predicates

bool is_fundamental(const MulTable& s) { return mu_congruence(s).is_identity(); }

bool is_zero_simple(const MulTable& s) {
  // Ideals are unions of D-classes closed downward in the J order; with one
  // nonzero D-class the only ideals are {0} and S.
  return s.d_class_count() <= 2;
}

bool is_zero_disjunctive(const MulTable& s) {
  const auto& e = s.idempotents();
  const Elem z = s.zero();
  for (Elem f : e) {
    if (f == z) continue;
    for (Elem x : e) {
      if (x == z || x == f || !s.leq(x, f)) continue;
      bool found = false;
      for (Elem y : e)
        if (y != z && y != f && s.leq(y, f) && s.mul(x, y) == z) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  }
  return true;
}

bool is_e_star_unitary(const MulTable& s) {
  for (Elem e : s.idempotents()) {
    if (e == s.zero()) continue;
    const Bits& up = s.up(e);
    for (auto t = up.find_first(); t != Bits::npos; t = up.find_next(t))
      if (!s.is_idempotent(static_cast<Elem>(t))) return false;
  }
  return true;
}

bool is_unambiguous(const MulTable& s) {
  const auto& e = s.idempotents();
  for (Elem a : e)
    for (Elem b : e)
      if (a != s.zero() && b != s.zero() && s.mul(a, b) != s.zero() && !s.leq(a, b) && !s.leq(b, a))
        return false;
  return true;
}

bool is_meet_semigroup(const MulTable& s) {
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem b = a + 1; b < s.size(); ++b)
      if (!s.meet(a, b)) return false;
  return true;
}

bool is_distributive(const MulTable& s) {
  const std::size_t m = s.size();
  // Every compatible pair has a join, and joins stay compatible with whatever
  // is compatible with both parts; together these give joins of all finite
  // compatible sets. Then check both distributive laws.
  for (Elem a = 0; a < m; ++a)
    for (Elem b = a + 1; b < m; ++b) {
      if (!s.compatible(a, b)) continue;
      Elem ab[2] = {a, b};
      auto j = s.join(ab);
      if (!j) return false;
      for (Elem c = 0; c < m; ++c)
        if (s.compatible(c, a) && s.compatible(c, b) && !s.compatible(c, *j)) return false;
      for (Elem x = 0; x < m; ++x) {
        Elem left[2] = {s.mul(x, a), s.mul(x, b)};
        Elem right[2] = {s.mul(a, x), s.mul(b, x)};
        auto jl = s.join(left), jr = s.join(right);
        if (!jl || *jl != s.mul(x, *j) || !jr || *jr != s.mul(*j, x)) return false;
      }
    }
  return true;
}

bool is_boolean(const MulTable& s) {
  if (!is_distributive(s)) return false;
  const auto& e = s.idempotents();
  for (Elem f : e)
    for (Elem x : e) {
      if (!s.leq(x, f)) continue;
      bool found = false;
      for (Elem y : e) {
        if (!s.leq(y, f) || s.mul(x, y) != s.zero()) continue;
        Elem xy[2] = {x, y};
        auto j = s.join(xy);
        if (j && *j == f) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  return true;
}

Predicates predicates(const MulTable& s) {
  Predicates p{};
  p.fundamental = is_fundamental(s);
  p.zero_simple = is_zero_simple(s);
  p.zero_disjunctive = is_zero_disjunctive(s);
  p.e_star_unitary = is_e_star_unitary(s);
  p.unambiguous = is_unambiguous(s);
  p.meet_semigroup = is_meet_semigroup(s);
  p.distributive = is_distributive(s);
  p.boolean = p.distributive && is_boolean(s);
  return p;
}

bool table_arrow(const MulTable& s, Elem a, std::span<const Elem> targets) {
  Bits reach(s.size());
  for (Elem b : targets) reach |= s.down(b);
  reach.reset(s.zero());
  const Bits& below = s.down(a);
  for (auto x = below.find_first(); x != Bits::npos; x = below.find_next(x)) {
    if (x == s.zero()) continue;
    if (!s.down(static_cast<Elem>(x)).intersects(reach)) return false;
  }
  return true;
}

CongruenceFreeReport congruence_free_report(const MulTable& s, std::size_t limit) {
  if (s.size() > limit)
    throw LimitError("congruence enumeration capped at " + std::to_string(limit) + " elements");
  CongruenceFreeReport rep{};
  rep.fundamental = is_fundamental(s);
  rep.zero_simple = is_zero_simple(s);
  rep.zero_disjunctive = is_zero_disjunctive(s);
  rep.congruence_free = true;
  for (Elem a = 0; a < s.size() && rep.congruence_free; ++a)
    for (Elem b = a + 1; b < s.size(); ++b) {
      Partition p = principal_congruence(s, a, b);
      if (!p.is_universal()) {
        rep.congruence_free = false;
        rep.witness = std::move(p);
        break;
      }
    }
  bool criterion = rep.fundamental && rep.zero_simple && rep.zero_disjunctive;
  if (criterion != rep.congruence_free)
    throw InternalError("congruence enumeration and the structural criterion disagree");
  return rep;
}

bool is_congruence_free(const MulTable& s) { return congruence_free_report(s).congruence_free; }

std::vector<Bits> enumerate_ideals(const MulTable& s, std::size_t cap) {
  // Ideals are down-closed sets of D-classes in the J order. The J order:
  // class c <= class c' iff some idempotent of class c lies below one of c'.
  const std::size_t k = s.d_class_count();
  const auto& dc = s.d_class();
  std::vector<Bits> below(k, Bits(k));
  for (Elem e : s.idempotents())
    for (Elem f : s.idempotents())
      if (s.leq(e, f)) below[dc[f]].set(dc[e]);
  // Transitive closure (the relation is already transitive for finite
  // inverse semigroups, but closing it costs nothing).
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t a = 0; a < k; ++a)
      if (below[a].test(c)) below[a] |= below[c];
  std::vector<Bits> class_sets;
  std::set<Bits> seen;
  std::vector<Bits> frontier{below[dc[s.zero()]]};
  seen.insert(frontier[0]);
  for (std::size_t i = 0; i < frontier.size(); ++i)
    for (std::size_t c = 0; c < k; ++c) {
      if (frontier[i].test(c)) continue;
      Bits next = frontier[i] | below[c];
      if (seen.insert(next).second) {
        frontier.push_back(next);
        if (frontier.size() > cap) throw LimitError("too many ideals");
      }
    }
  std::vector<Bits> out;
  for (const Bits& cs : frontier) {
    Bits ideal(s.size());
    for (Elem x = 0; x < s.size(); ++x)
      if (cs.test(dc[x])) ideal.set(x);
    out.push_back(ideal);
  }
  std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

bool is_tightly_closed(const MulTable& s, const Bits& ideal) {
  for (Elem x = 0; x < s.size(); ++x) {
    if (ideal.test(x)) continue;
    Bits inside = ideal & s.down(x);
    std::vector<Elem> t;
    for (auto y = inside.find_first(); y != Bits::npos; y = inside.find_next(y)) t.push_back(static_cast<Elem>(y));
    if (table_arrow(s, x, t)) return false;
  }
  return true;
}

std::vector<Bits> tightly_closed_ideals(const MulTable& s, std::size_t cap) {
  std::vector<Bits> out;
  for (Bits& i : enumerate_ideals(s, cap))
    if (is_tightly_closed(s, i)) out.push_back(std::move(i));
  return out;
}

SimplifyingReport zero_simplifying_report(const MulTable& s) {
  SimplifyingReport rep{};
  for (Elem e : s.idempotents())
    if (e != s.zero()) rep.idempotents.push_back(e);
  const std::size_t k = rep.idempotents.size();
  rep.precedes.assign(k * k, false);
  for (std::size_t j = 0; j < k; ++j) {
    // Largest admissible witness set: all r(x) with x nonzero and d(x) <= f.
    Elem f = rep.idempotents[j];
    std::vector<Elem> ranges;
    for (Elem x = 0; x < s.size(); ++x)
      if (x != s.zero() && s.leq(s.d(x), f)) ranges.push_back(s.r(x));
    std::sort(ranges.begin(), ranges.end());
    ranges.erase(std::unique(ranges.begin(), ranges.end()), ranges.end());
    for (std::size_t i = 0; i < k; ++i) rep.precedes[i * k + j] = table_arrow(s, rep.idempotents[i], ranges);
  }
  bool universal = true;
  for (std::size_t i = 0; i < k && universal; ++i)
    for (std::size_t j = 0; j < k && universal; ++j) universal = rep.precedes[i * k + j];
  rep.zero_simplifying = universal;

  bool none = true;
  for (Bits& t : tightly_closed_ideals(s)) {
    std::size_t c = t.count();
    if (c > 1 && c < s.size()) {
      none = false;
      rep.witness = std::move(t);
      break;
    }
  }
  if (none != universal) throw InternalError("the two 0-simplifying tests disagree");
  return rep;
}

bool is_zero_simplifying(const MulTable& s) { return zero_simplifying_report(s).zero_simplifying; }

// ---------------------------------------------------------------------------
// Isomorphism

bool is_homomorphism(const MulTable& s, const MulTable& t, std::span<const Elem> map) {
  if (map.size() != s.size()) return false;
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem b = 0; b < s.size(); ++b)
      if (map[s.mul(a, b)] != t.mul(map[a], map[b])) return false;
  return true;
}

namespace {

std::vector<std::uint64_t> signatures(const MulTable& s) {
  std::vector<std::uint64_t> sig(s.size());
  for (Elem a = 0; a < s.size(); ++a) {
    std::uint64_t idem = s.is_idempotent(a), zero = a == s.zero();
    std::uint64_t order = 1;
    for (Elem p = s.mul(a, a), prev = a; p != prev && order < 64; prev = p, p = s.mul(p, a)) ++order;
    sig[a] = zero | idem << 1 | (s.down(a).count() & 0xffff) << 2 | (s.up(a).count() & 0xffff) << 18 |
             (order & 0xff) << 34 | (static_cast<std::uint64_t>(s.support(a).count()) & 0xffff) << 42;
  }
  return sig;
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const MulTable& s, const MulTable& t) {
  const std::size_t m = s.size();
  if (t.size() != m) return std::nullopt;
  auto ss = signatures(s), ts = signatures(t);
  {
    auto a = ss, b = ts;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // Assign elements in order of rarest signature first.
  std::map<std::uint64_t, std::size_t> freq;
  for (auto x : ss) ++freq[x];
  std::vector<Elem> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return freq[ss[a]] < freq[ss[b]]; });
  const Elem unset = static_cast<Elem>(m);
  std::vector<Elem> map(m, unset), back(m, unset);
  std::vector<Elem> done;
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == m) return true;
    Elem a = order[k];
    for (Elem b = 0; b < m; ++b) {
      if (back[b] != unset || ts[b] != ss[a]) continue;
      map[a] = b;
      back[b] = a;
      bool ok = true;
      for (std::size_t i = 0; i <= k && ok; ++i) {
        Elem x = order[i];
        for (auto [p, q] : {std::pair{a, x}, std::pair{x, a}}) {
          Elem pq = s.mul(p, q);
          if (map[pq] != unset && map[pq] != t.mul(map[p], map[q])) ok = false;
          if (map[pq] == unset && back[t.mul(map[p], map[q])] != unset) ok = false;
        }
      }
      if (ok && rec(k + 1)) return true;
      map[a] = unset;
      back[b] = unset;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  if (!is_homomorphism(s, t, map)) throw InternalError("isomorphism search produced a non-homomorphism");
  return map;
}

}  // namespace stonedual
