#ifndef STONEDUAL_GRAPHISG_HPP
#define STONEDUAL_GRAPHISG_HPP

#include <optional>
#include <span>

#include "stonedual/words.hpp"

namespace stonedual {

/// Element of the graph inverse semigroup P_G: zero, or u v^-1 for paths u, v
/// with d(u) = d(v).
class GraphElement {
 public:
  static GraphElement zero(GraphPtr graph);
  static GraphElement make(Path u, Path v);
  /// Identity idempotent 1_p at a vertex.
  static GraphElement vertex(GraphPtr graph, VertexId p);

  const GraphPtr& graph() const noexcept { return graph_; }
  bool is_zero() const noexcept { return !u_.has_value(); }
  const Path& u() const { return *u_; }
  const Path& v() const { return *v_; }

  GraphElement inverse() const;
  bool is_idempotent() const { return is_zero() || *u_ == *v_; }

  friend bool operator==(const GraphElement& a, const GraphElement& b) {
    return a.graph_ == b.graph_ && a.u_ == b.u_ && a.v_ == b.v_;
  }

 private:
  explicit GraphElement(GraphPtr g) : graph_(std::move(g)) {}
  GraphPtr graph_;
  std::optional<Path> u_, v_;
};

GraphElement gisg_mul(const GraphElement& s, const GraphElement& t);
/// u v^-1 maps v w to u w; undefined unless v is a prefix of the path.
std::optional<Path> gisg_act(const GraphElement& s, const Path& w);
bool gisg_leq(const GraphElement& s, const GraphElement& t);
GraphElement gisg_meet(const GraphElement& s, const GraphElement& t);
bool gisg_compatible(const GraphElement& s, const GraphElement& t);
/// a -> B, decided on the tree of paths into d(a). Throws DomainError if a = 0.
bool gisg_lenz_arrow(const GraphElement& a, std::span<const GraphElement> targets);

struct GraphPredicates {
  bool no_zero_minimal;
  bool zero_disjunctive;
  bool pseudofinite;
  bool pre_boolean;
  /// Vertices with in-degree 0; each gives a 0-minimal idempotent.
  std::vector<VertexId> sources;
};

GraphPredicates semilattice_predicates(const DirectedGraph& g);

}  // namespace stonedual

#endif
