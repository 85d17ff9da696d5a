#include "stonedual/graphisg.hpp"

namespace stonedual {

namespace {

void require_same(const GraphElement& s, const GraphElement& t) {
  if (s.graph() != t.graph()) throw DomainError("graph mismatch");
}

}  // namespace

GraphElement GraphElement::zero(GraphPtr graph) {
  if (!graph) throw DomainError("null graph");
  return GraphElement(std::move(graph));
}

GraphElement GraphElement::make(Path u, Path v) {
  if (u.graph() != v.graph()) throw DomainError("graph mismatch");
  if (u.domain() != v.domain()) throw DomainError("u v^-1 needs d(u) = d(v)");
  GraphElement e(u.graph());
  e.u_ = std::move(u);
  e.v_ = std::move(v);
  return e;
}

GraphElement GraphElement::vertex(GraphPtr graph, VertexId p) {
  Path id(graph, p);
  return make(id, id);
}

GraphElement GraphElement::inverse() const {
  if (is_zero()) return *this;
  return make(*v_, *u_);
}

GraphElement gisg_mul(const GraphElement& s, const GraphElement& t) {
  require_same(s, t);
  if (s.is_zero() || t.is_zero()) return GraphElement::zero(s.graph());
  // s = x y^-1, t = u v^-1
  if (auto z = path_strip_prefix(s.v(), t.u()))  // u = y z
    return GraphElement::make(*path_compose(s.u(), *z), t.v());
  if (auto z = path_strip_prefix(t.u(), s.v()))  // y = u z
    return GraphElement::make(s.u(), *path_compose(t.v(), *z));
  return GraphElement::zero(s.graph());
}

std::optional<Path> gisg_act(const GraphElement& s, const Path& w) {
  if (s.graph() != w.graph()) throw DomainError("graph mismatch");
  if (s.is_zero()) return std::nullopt;
  auto z = path_strip_prefix(s.v(), w);
  if (!z) return std::nullopt;
  return path_compose(s.u(), *z);
}

bool gisg_leq(const GraphElement& s, const GraphElement& t) {
  require_same(s, t);
  if (s.is_zero()) return true;
  if (t.is_zero()) return false;
  auto p = path_strip_prefix(t.u(), s.u());
  auto q = path_strip_prefix(t.v(), s.v());
  return p && q && *p == *q;
}

GraphElement gisg_meet(const GraphElement& s, const GraphElement& t) {
  if (gisg_leq(s, t)) return s;
  if (gisg_leq(t, s)) return t;
  return GraphElement::zero(s.graph());
}

bool gisg_compatible(const GraphElement& s, const GraphElement& t) {
  return gisg_mul(s.inverse(), t).is_idempotent() && gisg_mul(s, t.inverse()).is_idempotent();
}

bool gisg_lenz_arrow(const GraphElement& a, std::span<const GraphElement> targets) {
  if (a.is_zero()) throw DomainError("the arrow needs a nonzero source");
  const GraphPtr& g = a.graph();
  // Elements below a = u v^-1 are (u p)(v p)^-1 for paths p into d(a).
  std::vector<Path> tails;
  std::size_t depth = 0;
  for (const GraphElement& b : targets) {
    GraphElement c = gisg_meet(a, b);
    if (c.is_zero()) continue;
    tails.push_back(*path_strip_prefix(a.v(), c.v()));
    depth = std::max(depth, tails.back().size());
  }
  if (tails.empty()) return false;
  // Every path into d(a) that is terminal (length `depth`, or shorter with a
  // source vertex of in-degree 0) must have a tail as a prefix.
  std::vector<Path> frontier{Path(g, a.v().domain())};
  for (std::size_t level = 0; !frontier.empty(); ++level) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      bool hit = false;
      for (const Path& t : tails)
        if (t == p) { hit = true; break; }
      if (hit) continue;
      const auto& in = g->in_edges(p.domain());
      if (level == depth || in.empty()) return false;
      for (EdgeId e : in) next.push_back(p.extended(e));
    }
    frontier = std::move(next);
  }
  return true;
}

GraphPredicates semilattice_predicates(const DirectedGraph& g) {
  GraphPredicates out{true, true, true, true, {}};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::size_t deg = g.in_edges(v).size();
    if (deg == 0) {
      out.no_zero_minimal = false;
      out.sources.push_back(v);
    }
    if (deg == 1) out.zero_disjunctive = false;
  }
  return out;
}

}  // namespace stonedual
