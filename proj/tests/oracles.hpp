// Reference implementations used only by the tests. They work on plain
// strings and vectors and share no code with the library's algorithms.
#ifndef STONEDUAL_TEST_ORACLES_HPP
#define STONEDUAL_TEST_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stonedual/graphisg.hpp"
#include "stonedual/multable.hpp"
#include "stonedual/polycyclic.hpp"
#include "stonedual/thompson.hpp"

namespace oracle {

using namespace stonedual;

inline std::string str(const Word& w) {
  std::string s;
  for (Letter l : w.letters()) s += static_cast<char>('a' + l);
  return s;
}

inline Word word(const std::string& s, unsigned n) {
  std::vector<Letter> l;
  for (char c : s) l.push_back(static_cast<Letter>(c - 'a'));
  return Word(Alphabet(n), std::move(l));
}

inline bool starts_with(const std::string& w, const std::string& p) { return w.compare(0, p.size(), p) == 0; }

// A point of the free action: a root and a word.
struct Point {
  unsigned root;
  std::string w;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

inline std::vector<std::string> all_words(unsigned n, std::size_t max_len) {
  std::vector<std::string> out{""};
  for (std::size_t k = 0; k < out.size(); ++k)
    if (out[k].size() < max_len)
      for (unsigned l = 0; l < n; ++l) out.push_back(out[k] + static_cast<char>('a' + l));
  return out;
}

inline std::vector<Point> all_points(unsigned n, unsigned r, std::size_t max_len) {
  std::vector<Point> out;
  for (unsigned i = 0; i < r; ++i)
    for (auto& w : all_words(n, max_len)) out.push_back({i, w});
  return out;
}

// (i, y x^-1, j) sends (j, x z) to (i, y z).
inline std::optional<Point> act(const PolyElement& s, const Point& p) {
  if (s.is_zero() || p.root != s.j() || !starts_with(p.w, str(s.x()))) return std::nullopt;
  return Point{s.i(), str(s.y()) + p.w.substr(s.x().size())};
}

inline std::optional<Point> act_composite(const PolyElement& s, const PolyElement& t, const Point& p) {
  auto q = act(t, p);
  return q ? act(s, *q) : std::nullopt;
}

// Brute force a -> B: every element (y p)(x p)^-1 below a with |p| up to two
// letters past the longest target domain word must agree with some b at a
// point. Two partial prefix maps that agree at w agree at every extension of
// w, so the longer of x p and x_b is the only point to test.
inline bool lenz_arrow(const PolyElement& a, const std::vector<PolyElement>& targets) {
  if (a.is_zero()) return true;
  std::size_t longest = 0;
  for (const auto& b : targets)
    if (!b.is_zero()) longest = std::max(longest, b.x().size());
  const std::size_t depth = (longest > a.x().size() ? longest - a.x().size() : 0) + 2;
  for (const auto& p : all_words(a.params().n, depth)) {
    const std::string xp = str(a.x()) + p;
    bool met = false;
    for (const auto& b : targets) {
      if (b.is_zero() || b.j() != a.j()) continue;
      const std::string xb = str(b.x());
      if (!starts_with(xp, xb) && !starts_with(xb, xp)) continue;
      Point w{a.j(), xp.size() >= xb.size() ? xp : xb};
      if (act(a, w) == act(b, w)) {
        met = true;
        break;
      }
    }
    if (!met) return false;
  }
  return true;
}

// Paths as edge lists e1..ek (composite e1 o ... o ek).
inline std::vector<std::vector<EdgeId>> all_paths(const DirectedGraph& g, std::size_t max_len,
                                                  std::vector<VertexId>* domains = nullptr) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<VertexId> dom;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out.push_back({});
    dom.push_back(v);
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k].size() >= max_len) continue;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (g.edge(e).target == dom[k]) {
        auto p = out[k];
        p.push_back(e);
        out.push_back(p);
        dom.push_back(g.edge(e).source);
      }
  }
  if (domains) *domains = dom;
  return out;
}

struct PathPoint {
  VertexId domain;
  std::vector<EdgeId> edges;
  friend bool operator==(const PathPoint&, const PathPoint&) = default;
};

// u v^-1 sends v z to u z.
inline std::optional<PathPoint> act(const GraphElement& s, const PathPoint& p) {
  if (s.is_zero()) return std::nullopt;
  auto v = s.v().edges();
  if (p.edges.size() < v.size() || !std::equal(v.begin(), v.end(), p.edges.begin())) return std::nullopt;
  if (v.empty() && p.edges.empty() && p.domain != s.v().domain()) return std::nullopt;
  if (v.empty() && !p.edges.empty() && s.graph()->edge(p.edges[0]).target != s.v().codomain()) return std::nullopt;
  std::vector<EdgeId> out(s.u().edges().begin(), s.u().edges().end());
  out.insert(out.end(), p.edges.begin() + static_cast<std::ptrdiff_t>(v.size()), p.edges.end());
  return PathPoint{p.domain, out};
}

// Sum n^(L - |w|) == n^L, in integers.
inline bool kraft_is_one(const std::vector<std::string>& code, unsigned n) {
  std::size_t L = 0;
  for (auto& w : code) L = std::max(L, w.size());
  unsigned long long total = 0, full = 1;
  for (std::size_t k = 0; k < L; ++k) full *= n;
  for (auto& w : code) {
    unsigned long long t = 1;
    for (std::size_t k = w.size(); k < L; ++k) t *= n;
    total += t;
  }
  return total == full;
}

inline std::optional<Point> act(const TreePair& g, const Point& p) {
  for (std::size_t k = 0; k < g.domain.size(); ++k) {
    const auto& d = g.domain[k];
    if (d.root == p.root && starts_with(p.w, str(d.word))) {
      const auto& r = g.range[g.perm[k]];
      return Point{r.root, str(r.word) + p.w.substr(d.word.size())};
    }
  }
  return std::nullopt;
}

inline std::size_t depth(const TreePair& g) {
  std::size_t d = 0;
  for (auto& w : g.domain) d = std::max(d, w.word.size());
  for (auto& w : g.range) d = std::max(d, w.word.size());
  return d;
}

// Partial injections of {1..k} given by image strings such as "21-".
inline std::string compose_images(const std::string& s, const std::string& t) {
  std::string out(t.size(), '-');
  for (std::size_t x = 0; x < t.size(); ++x)
    if (t[x] != '-') out[x] = s[static_cast<std::size_t>(t[x] - '1')];
  return out;
}

inline bool is_congruence(const MulTable& s, const std::vector<int>& cls) {
  const auto m = s.size();
  for (Elem a = 0; a < m; ++a)
    for (Elem b = a + 1; b < m; ++b)
      if (cls[a] == cls[b])
        for (Elem c = 0; c < m; ++c)
          if (cls[s.mul(a, c)] != cls[s.mul(b, c)] || cls[s.mul(c, a)] != cls[s.mul(c, b)]) return false;
  return true;
}

// Every congruence by brute force over set partitions (small tables only).
inline std::vector<std::vector<int>> all_congruences(const MulTable& s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cls(s.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == s.size()) {
      if (is_congruence(s, cls)) out.push_back(cls);
      return;
    }
    for (int c = 0; c <= used; ++c) {
      cls[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  if (s.size() > 0) rec(1, 1);
  return out;
}

// Natural order from the definition s = t s^-1 s, inverses found by search.
inline Elem inverse(const MulTable& s, Elem a) {
  for (Elem b = 0; b < s.size(); ++b)
    if (s.mul(s.mul(a, b), a) == a && s.mul(s.mul(b, a), b) == b) return b;
  return a;
}

inline bool leq(const MulTable& s, Elem a, Elem b) { return s.mul(s.mul(b, inverse(s, a)), a) == a; }

// Nonzero common lower bound.
inline bool meets(const MulTable& s, Elem a, Elem b) {
  for (Elem x = 0; x < s.size(); ++x)
    if (x != s.zero() && leq(s, x, a) && leq(s, x, b)) return true;
  return false;
}

inline bool arrow(const MulTable& s, Elem a, const std::vector<Elem>& targets) {
  for (Elem x = 0; x < s.size(); ++x) {
    if (x == s.zero() || !leq(s, x, a)) continue;
    if (std::none_of(targets.begin(), targets.end(), [&](Elem b) { return meets(s, x, b); })) return false;
  }
  return true;
}

// Tightness of e^up by trying every subset of a^down as a cover.
inline bool tight(const MulTable& s, Elem e) {
  for (Elem a = 0; a < s.size(); ++a) {
    if (!leq(s, e, a)) continue;
    std::vector<Elem> below;
    for (Elem x = 0; x < s.size(); ++x)
      if (x != s.zero() && leq(s, x, a)) below.push_back(x);
    for (std::size_t mask = 0; mask < (std::size_t{1} << below.size()); ++mask) {
      std::vector<Elem> c;
      bool hits = false;
      for (std::size_t k = 0; k < below.size(); ++k)
        if (mask >> k & 1) {
          c.push_back(below[k]);
          hits = hits || leq(s, e, below[k]);
        }
      if (!hits && arrow(s, a, c)) return false;
    }
  }
  return true;
}

inline bool is_ultrafilter_generator(const MulTable& s, Elem e) {
  if (e == s.zero()) return false;
  for (Elem x = 0; x < s.size(); ++x)
    if (x != s.zero() && x != e && leq(s, x, e)) return false;
  return true;
}

// Random pairwise compatible parts: a subset of a random unit's parts, some
// expanded into their n children, plus some parts dominated by others.
inline std::vector<PolyElement> random_compatible_parts(std::mt19937_64& rng, PolyParams p, std::size_t splits) {
  auto unit = tp_to_unit(tp_random(p, splits, rng));
  std::vector<PolyElement> out;
  for (const auto& x : unit.parts()) {
    if (rng() % 4 == 0) continue;
    if (rng() % 3 == 0) {
      for (Letter l = 0; l < p.n; ++l)
        out.push_back(PolyElement::make(p, x.i(), x.y().appended(l), x.x().appended(l), x.j()));
    } else {
      out.push_back(x);
    }
    if (rng() % 4 == 0) {
      Letter l = static_cast<Letter>(rng() % p.n);
      out.push_back(PolyElement::make(p, x.i(), x.y().appended(l).appended(0), x.x().appended(l).appended(0), x.j()));
    }
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace oracle

#endif
