#ifndef STONEDUAL_FILTERCOMP_HPP
#define STONEDUAL_FILTERCOMP_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stonedual/multable.hpp"
#include "stonedual/polycyclic.hpp"

namespace stonedual {

// Filters in a finite table are principal, so a filter is named by its
// generator: the filter is generator^up.

/// Generators of the ultrafilters: the 0-minimal elements.
std::vector<Elem> ultrafilters(const MulTable& s);
/// Is e^up a tight filter? Throws DomainError for e = 0.
bool is_tight_filter(const MulTable& s, Elem e);
/// Brute force: every cover of every a >= e meets e^up. Exponential; for tests.
bool is_tight_filter_bruteforce(const MulTable& s, Elem e);

struct LenzQuotient {
  MulTable table;
  std::vector<Elem> lambda;
  Partition partition;
};

/// S / <-> with the projection. Requires an inverse meet-semigroup.
LenzQuotient lenz_congruence(const MulTable& s);

/// A compatible order ideal, named by its generators (a pairwise compatible
/// antichain of nonzero elements; empty for the ideal {0}).
struct CompatibleIdeal {
  std::vector<Elem> generators;
  friend bool operator==(const CompatibleIdeal&, const CompatibleIdeal&) = default;
  friend auto operator<=>(const CompatibleIdeal&, const CompatibleIdeal&) = default;
};

/// All compatible order ideals, sorted. Throws LimitError past `cap`.
std::vector<CompatibleIdeal> compatible_ideals(const MulTable& s, std::size_t cap = 200000);
/// Generators of the ideal generated by the pairwise products.
CompatibleIdeal ideal_product(const MulTable& s, const CompatibleIdeal& a, const CompatibleIdeal& b);
/// Maximal elements of a set of nonzero elements (the generated ideal's antichain).
CompatibleIdeal ideal_of(const MulTable& s, std::vector<Elem> elems);

/// FC(S) as a table over compatible_ideals(s) (same order).
MulTable fc_semigroup(const MulTable& s, const std::vector<CompatibleIdeal>& ideals);

struct DClass {
  /// 0-minimal elements of the Lenz quotient below the ideal.
  Bits support;
  CompatibleIdeal representative;
};

struct Completion {
  LenzQuotient lenz;
  /// Classes of D(S); index 0 is the zero class.
  std::vector<DClass> classes;
  MulTable table;
  /// delta : S -> D(S).
  std::vector<Elem> delta;
};

/// D(S) with delta = xi iota lambda. Verifies delta is a 0-restricted
/// cover-to-join homomorphism and D(S) is distributive; throws InternalError
/// otherwise.
Completion distributive_completion(const MulTable& s);

/// theta(0) = 0 and theta(e) is the join of theta over the atoms below e,
/// for every idempotent e. Returns the first failing element.
std::optional<Elem> cover_to_join_failure(const MulTable& s, const MulTable& t, std::span<const Elem> theta);
bool is_cover_to_join(const MulTable& s, const MulTable& t, std::span<const Elem> theta);
/// Brute force over all covers {a_i} of every a: theta(a) = join theta(a_i).
bool is_cover_to_join_bruteforce(const MulTable& s, const MulTable& t, std::span<const Elem> theta);

/// Homomorphisms S -> T sending 0 to 0, by backtracking over a generating
/// set. Throws LimitError past `cap` search nodes.
std::vector<std::vector<Elem>> enumerate_homomorphisms(const MulTable& s, const MulTable& t,
                                                       std::size_t cap = 5000000);

struct UniversalCheck {
  bool ok;
  std::string message;
  /// theta-bar on D(S) when ok.
  std::vector<Elem> extension;
};

/// Builds theta-bar([a_1..a_n]) = join theta(a_i) and verifies it is a
/// well-defined join-preserving homomorphism with theta-bar delta = theta and
/// that D(S) is generated by delta-images under joins (uniqueness).
UniversalCheck check_universal_property(const MulTable& s, const Completion& c, const MulTable& t,
                                        std::span<const Elem> theta);

struct BooleanizationReport {
  bool tight_eq_ultra;
  bool d_boolean;
  bool unital;
  bool compactable;
  bool zero_disjunctive;
  bool densely_embedded;
  bool trapping;  // vacuous at finite scale
  std::vector<Elem> atoms;
  std::size_t d_size;
};

/// Flags for a finite meet semilattice with zero (every element idempotent).
BooleanizationReport booleanization_report(const MulTable& e);

/// E(D(S)) and D(E(S)) with an isomorphism between them, if one exists.
std::optional<std::vector<Elem>> part1_isomorphism(const MulTable& s, const Completion& c);

/// Discard procedure: drop every element below another one. Requires an
/// unambiguous E*-unitary table and a pairwise compatible set.
std::vector<Elem> orthogonalize(const MulTable& s, std::span<const Elem> xs);
std::vector<PolyElement> orthogonalize(std::span<const PolyElement> xs);

/// All meet semilattices with zero on m elements up to isomorphism.
std::vector<MulTable> enumerate_meet_semilattices(unsigned m);

}  // namespace stonedual

#endif
