#ifndef STONEDUAL_DUALITY_HPP
#define STONEDUAL_DUALITY_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "stonedual/filtercomp.hpp"
#include "stonedual/multable.hpp"

namespace stonedual {

/// A finite discrete groupoid. Objects are the identity arrows.
struct FiniteGroupoid {
  static constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();

  std::vector<std::string> names;
  std::vector<std::uint32_t> dom, cod, inv;
  /// comp[a * n + b] = a b (b first), defined iff dom(a) = cod(b).
  std::vector<std::uint32_t> comp;

  std::size_t size() const noexcept { return dom.size(); }
  bool is_object(std::uint32_t a) const { return dom[a] == a; }
  std::vector<std::uint32_t> objects() const;
  std::uint32_t compose(std::uint32_t a, std::uint32_t b) const { return comp[a * size() + b]; }
  /// Trivial local groups.
  bool is_principal() const;
  /// Component label per arrow (objects joined by arrows).
  std::vector<std::uint32_t> components() const;
};

/// Empty string when the category and groupoid axioms hold, else a diagnostic.
std::string check_groupoid(const FiniteGroupoid& g);

/// Arrows are the 0-minimal elements, composed by the product. Works for any
/// finite inverse semigroup; `elements` receives the element of each arrow.
FiniteGroupoid atom_groupoid(const MulTable& s, std::vector<Elem>* elements = nullptr);
/// G(S) for a finite Boolean inverse meet-semigroup; also recomputes each
/// product through filter closure as a cross-check.
FiniteGroupoid ultrafilter_groupoid(const MulTable& s, std::vector<Elem>* elements = nullptr);

struct BisectionSemigroup {
  MulTable table = MulTable(1, 0, std::vector<Elem>{0});
  /// Arrow set of each element, indexed like the table.
  std::vector<Bits> bisections;
};

BisectionSemigroup bisection_semigroup(const FiniteGroupoid& g);

struct Roundtrip {
  bool ok = false;
  std::string message;
  FiniteGroupoid groupoid;
  BisectionSemigroup bisections;
  /// s -> index of V_s in `bisections`.
  std::vector<Elem> map;
};

/// Checks s -> V_s is an isomorphism S -> B(G(S)).
Roundtrip duality_roundtrip(const MulTable& s);
/// Checks g -> F_g is an isomorphism G -> G(B(G)).
bool groupoid_roundtrip(const FiniteGroupoid& g, std::string* message = nullptr);

struct IdealCorrespondence {
  bool ok = false;
  std::string message;
  std::vector<Bits> ideals;           // tightly closed ideals of S
  std::vector<Bits> invariant_sets;   // unions of components, as arrow sets
  std::vector<std::size_t> o_of_ideal;  // index into invariant_sets
};

IdealCorrespondence ideal_correspondence(const MulTable& s);

struct Classification {
  std::optional<unsigned> k;
  std::string failure;
  /// S -> I(k) when k is set.
  std::vector<Elem> iso;
};

Classification classify_symmetric(const MulTable& s);

struct PrincipalReport {
  bool criterion;
  bool groupoid_principal;
  bool fundamental;
};

/// F^up = F^c for each ultrafilter F of E(S), cross-checked against G(S)
/// being principal and S being fundamental.
PrincipalReport principal_criterion(const MulTable& s);

struct ComparisonCheck {
  bool ok = false;
  std::string message;
  /// D(S) -> B(G(S)).
  std::vector<Elem> map;
};

/// D(S) is isomorphic to B(G(S)) via supports.
ComparisonCheck comparison_check(const MulTable& s, const Completion& c);

}  // namespace stonedual

#endif
