#ifndef STONEDUAL_THOMPSON_HPP
#define STONEDUAL_THOMPSON_HPP

#include <optional>
#include <random>
#include <vector>

#include "stonedual/polycyclic.hpp"

namespace stonedual {

/// Element of the Cuntz inverse monoid C_{n,r}: the join of a finite
/// pairwise compatible set of elements of P_{n,r}.
class CuntzElement {
 public:
  CuntzElement(PolyParams p, std::vector<PolyElement> parts);

  PolyParams params() const noexcept { return params_; }
  const std::vector<PolyElement>& parts() const noexcept { return parts_; }

  friend bool operator==(const CuntzElement&, const CuntzElement&) = default;

 private:
  PolyParams params_;
  std::vector<PolyElement> parts_;
};

/// Join of the maximal idempotents (i, 1, i).
CuntzElement cuntz_identity(PolyParams p);

/// Orthogonalize, then contract full aligned sibling families to a fixpoint.
/// Throws DomainError on incompatible parts.
CuntzElement cuntz_normalize(const CuntzElement& x);
/// Same result through a random interleaving of discard and contract steps.
CuntzElement cuntz_normalize_shuffled(const CuntzElement& x, std::mt19937_64& rng);

CuntzElement cuntz_mul(const CuntzElement& x, const CuntzElement& y);
CuntzElement cuntz_inv(const CuntzElement& x);
CuntzElement cuntz_meet(const CuntzElement& x, const CuntzElement& y);
/// Throws DomainError if the union is not pairwise compatible.
CuntzElement cuntz_join(const CuntzElement& x, const CuntzElement& y);
/// Equal normal forms; throws InternalError if the mutual-arrow check disagrees.
bool cuntz_eq(const CuntzElement& x, const CuntzElement& y);
/// Every part of each side arrows into the other side.
bool cuntz_equiv_by_arrow(const CuntzElement& x, const CuntzElement& y);
/// Domain and range codes are both r-rooted maximal prefix codes.
bool is_unit(const CuntzElement& x);
/// Union of the part actions (parts are compatible, so this is a partial map).
std::optional<RootedWord> cuntz_act(const CuntzElement& x, const RootedWord& w);

/// Element of G_{n,r}: leaf domain[k] maps to leaf range[perm[k]]. Both codes
/// are kept in canonical (root, word) order.
struct TreePair {
  PolyParams params;
  std::vector<RootedWord> domain;
  std::vector<RootedWord> range;
  std::vector<std::size_t> perm;

  friend bool operator==(const TreePair&, const TreePair&) = default;
};

/// Builds a tree pair from leaf pairs (domain leaf, range leaf), sorting into
/// canonical form. Throws DomainError if the codes are not maximal.
TreePair make_tree_pair(PolyParams p, std::vector<std::pair<RootedWord, RootedWord>> leaves);
std::vector<std::pair<RootedWord, RootedWord>> leaf_pairs(const TreePair& g);
/// Throws DomainError if g is malformed.
void check_tree_pair(const TreePair& g);

TreePair tp_identity(PolyParams p);
TreePair tp_reduce(const TreePair& g);
/// g o h: h is applied first.
TreePair tp_mul(const TreePair& g, const TreePair& h);
TreePair tp_inv(const TreePair& g);
bool tp_eq(const TreePair& g, const TreePair& h);
/// Prefix replacement by the leaf that prefixes w.
std::optional<RootedWord> tp_act(const TreePair& g, const RootedWord& w);

TreePair tp_from_unit(const CuntzElement& x);
CuntzElement tp_to_unit(const TreePair& g);

/// Random tree pair with `splits` expansions on each side (leaves =
/// r + splits * (n - 1)).
TreePair tp_random(PolyParams p, std::size_t splits, std::mt19937_64& rng);

}  // namespace stonedual

#endif
