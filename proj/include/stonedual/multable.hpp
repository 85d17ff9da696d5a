#ifndef STONEDUAL_MULTABLE_HPP
#define STONEDUAL_MULTABLE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "stonedual/error.hpp"

namespace stonedual {

using Elem = std::uint32_t;
using Bits = boost::dynamic_bitset<>;

/// Size cap for tables, from STONEDUAL_MAX_ELEMENTS (default 2000).
std::size_t max_elements();

struct TableCache;

/// A finite inverse semigroup with zero given by its multiplication table.
/// Construction checks only the shape; the axioms are checked by validate() and
/// on first use of any derived query.
class MulTable {
 public:
  MulTable(std::size_t m, Elem zero, std::vector<Elem> products,
           std::optional<Elem> identity = std::nullopt, std::vector<std::string> names = {});

  std::size_t size() const noexcept { return m_; }
  Elem zero() const noexcept { return zero_; }
  const std::optional<Elem>& identity() const noexcept { return identity_; }
  Elem mul(Elem a, Elem b) const { return t_[static_cast<std::size_t>(a) * m_ + b]; }
  std::span<const Elem> products() const noexcept { return t_; }
  const std::string& name(Elem a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Elem> find(std::string_view name) const;

  /// Replaces the element names (size must match).
  MulTable renamed(std::vector<std::string> names) const;
  /// Same table with the identity detected from the products, if one exists.
  MulTable with_detected_identity() const;

  // Derived data; throws DomainError if the table is not an inverse semigroup
  // with zero.
  Elem inv(Elem a) const;
  Elem d(Elem a) const { return mul(inv(a), a); }
  Elem r(Elem a) const { return mul(a, inv(a)); }
  bool is_idempotent(Elem a) const { return mul(a, a) == a; }
  const std::vector<Elem>& idempotents() const;
  /// Natural partial order s <= t iff s = t d(s).
  bool leq(Elem s, Elem t) const { return down(t).test(s); }
  const Bits& down(Elem a) const;
  const Bits& up(Elem a) const;
  /// Nonzero elements minimal among nonzero elements.
  const std::vector<Elem>& zero_minimal() const;
  /// 0-minimal elements below a.
  const Bits& support(Elem a) const;
  std::optional<Elem> meet(Elem a, Elem b) const;
  /// Least upper bound of a set; nothing if there is none. Empty set gives 0.
  std::optional<Elem> join(std::span<const Elem> xs) const;
  bool compatible(Elem a, Elem b) const;
  bool orthogonal(Elem a, Elem b) const;
  /// Green's D class index of each element (0 is its own class).
  const std::vector<std::uint32_t>& d_class() const;
  std::size_t d_class_count() const;

  /// Raw access to the cache (validates on first use).
  const TableCache& cache() const;

 private:
  std::size_t m_;
  Elem zero_;
  std::vector<Elem> t_;
  std::optional<Elem> identity_;
  std::vector<std::string> names_;
  std::shared_ptr<TableCache> cache_;
};

struct Validation {
  bool ok = true;
  std::string axiom;
  std::vector<Elem> witness;
  std::string message() const;
};

/// Checks associativity, the zero, the identity, unique inverses and
/// commuting idempotents. Reports the first failure with a witness.
Validation validate(const MulTable& s);

// ---------------------------------------------------------------------------
// Constructors

MulTable symmetric_inverse_monoid(unsigned k);
MulTable zero_direct_union(const MulTable& s, const MulTable& t);
MulTable direct_product(const MulTable& s, const MulTable& t);
MulTable rees_b_r(const MulTable& m, unsigned r);
/// Cyclic group of order k with a zero adjoined.
MulTable zero_cyclic_group(unsigned k);
/// Chain 0 < e1 < ... < e_{k-1} as a semilattice (k elements).
MulTable chain(unsigned k);
/// Powerset of a k-set under intersection.
MulTable boolean_algebra(unsigned k);
/// Meet semilattice from an order relation: leq[i*m+j] says i <= j, element
/// `bottom` is the zero. Throws DomainError if some meet is missing.
MulTable semilattice_from_order(std::size_t m, Elem bottom, const std::vector<bool>& leq);
/// E(S) as a table, with the embedding into S.
std::pair<MulTable, std::vector<Elem>> idempotent_subtable(const MulTable& s);

// ---------------------------------------------------------------------------
// Congruences

/// Partition of the elements, classes numbered by first occurrence.
struct Partition {
  std::vector<std::uint32_t> cls;
  std::size_t classes() const;
  bool is_identity() const { return classes() == cls.size(); }
  bool is_universal() const { return classes() <= 1; }
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

Partition identity_partition(std::size_t m);
/// Smallest congruence containing the pairs.
Partition congruence_closure(const MulTable& s, std::span<const std::pair<Elem, Elem>> pairs);
Partition principal_congruence(const MulTable& s, Elem a, Elem b);
Partition partition_join(const Partition& a, const Partition& b);
bool refines(const Partition& fine, const Partition& coarse);
bool is_congruence(const MulTable& s, const Partition& p);
/// Quotient table, with the projection as a vector.
std::pair<MulTable, std::vector<Elem>> quotient(const MulTable& s, const Partition& p);
/// Every congruence (join closure of the principal ones), sorted. Throws
/// LimitError past `cap` congruences.
std::vector<Partition> enumerate_congruences(const MulTable& s, std::size_t cap = 20000);
/// s mu t iff s e s^-1 = t e t^-1 for all idempotents e.
Partition mu_congruence(const MulTable& s);

// ---------------------------------------------------------------------------
// Predicates

struct Predicates {
  bool fundamental;
  bool zero_simple;
  bool zero_disjunctive;
  bool e_star_unitary;
  bool unambiguous;
  bool meet_semigroup;
  bool distributive;
  bool boolean;
};

bool is_fundamental(const MulTable& s);
bool is_zero_simple(const MulTable& s);
bool is_zero_disjunctive(const MulTable& s);
bool is_e_star_unitary(const MulTable& s);
bool is_unambiguous(const MulTable& s);
bool is_meet_semigroup(const MulTable& s);
bool is_distributive(const MulTable& s);
bool is_boolean(const MulTable& s);
Predicates predicates(const MulTable& s);

/// a -> B: every nonzero x <= a has a nonzero common lower bound with some b.
bool table_arrow(const MulTable& s, Elem a, std::span<const Elem> targets);

struct CongruenceFreeReport {
  bool congruence_free;
  /// A nontrivial proper congruence when the answer is false.
  std::optional<Partition> witness;
  bool fundamental, zero_simple, zero_disjunctive;
};

/// Decided twice: every principal congruence of a distinct pair is universal,
/// and fundamental + 0-simple + 0-disjunctive. Throws InternalError if the two
/// disagree and LimitError above `limit` elements.
CongruenceFreeReport congruence_free_report(const MulTable& s, std::size_t limit = 250);
bool is_congruence_free(const MulTable& s);

/// Ideals of S as element bitsets, sorted by size then lexicographically.
std::vector<Bits> enumerate_ideals(const MulTable& s, std::size_t cap = 100000);
/// T is tightly closed iff no s outside T has s -> (T meet s-down).
bool is_tightly_closed(const MulTable& s, const Bits& ideal);
std::vector<Bits> tightly_closed_ideals(const MulTable& s, std::size_t cap = 100000);

struct SimplifyingReport {
  bool zero_simplifying;
  /// e precedes f, over nonzero idempotents (row-major in idempotent order).
  std::vector<Elem> idempotents;
  std::vector<bool> precedes;
  /// A proper nontrivial tightly closed ideal when the answer is false.
  std::optional<Bits> witness;
};

/// Decided twice: the equivalence from e -> {r(x) : x != 0, d(x) <= f} is
/// universal on nonzero idempotents, and there is no proper nontrivial
/// tightly closed ideal. Throws InternalError on disagreement.
SimplifyingReport zero_simplifying_report(const MulTable& s);
bool is_zero_simplifying(const MulTable& s);

// ---------------------------------------------------------------------------
// Isomorphism

/// An isomorphism S -> T as an image vector, or nothing.
std::optional<std::vector<Elem>> find_isomorphism(const MulTable& s, const MulTable& t);
bool is_homomorphism(const MulTable& s, const MulTable& t, std::span<const Elem> map);

}  // namespace stonedual

#endif
