#ifndef STONEDUAL_POLYCYCLIC_HPP
#define STONEDUAL_POLYCYCLIC_HPP

#include <optional>
#include <span>
#include <vector>

#include "stonedual/words.hpp"

namespace stonedual {

/// P_{n,r}: the Rees construction B_r(P_n). r = 1 is P_n itself.
struct PolyParams {
  unsigned n = 2;
  unsigned r = 1;
  friend bool operator==(const PolyParams&, const PolyParams&) = default;
};

/// Zero, or a triple (i, y x^-1, j) with roots i, j in [0, r). For r = 1 the
/// roots are always 0 and the element is just y x^-1.
class PolyElement {
 public:
  static PolyElement zero(PolyParams p);
  static PolyElement one(PolyParams p, unsigned root = 0);
  static PolyElement make(PolyParams p, unsigned i, Word y, Word x, unsigned j);
  static PolyElement make(PolyParams p, Word y, Word x) { return make(p, 0, std::move(y), std::move(x), 0); }

  PolyParams params() const noexcept { return params_; }
  Alphabet alphabet() const { return Alphabet(params_.n); }
  bool is_zero() const noexcept { return zero_; }
  unsigned i() const noexcept { return i_; }
  unsigned j() const noexcept { return j_; }
  /// Range word y of y x^-1 (empty for zero).
  const Word& y() const noexcept { return y_; }
  /// Domain word x of y x^-1.
  const Word& x() const noexcept { return x_; }

  PolyElement inverse() const;
  bool is_idempotent() const noexcept { return zero_ || (i_ == j_ && y_ == x_); }
  /// s^-1 s.
  PolyElement d() const;
  /// s s^-1.
  PolyElement r() const;

  friend bool operator==(const PolyElement&, const PolyElement&) = default;
  /// Canonical order: zero first, then by (i, j, y, x).
  friend std::strong_ordering operator<=>(const PolyElement& a, const PolyElement& b);

 private:
  PolyElement(PolyParams p, Alphabet a) : params_(p), y_(a), x_(a) {}
  PolyParams params_;
  bool zero_ = true;
  unsigned i_ = 0, j_ = 0;
  Word y_, x_;
};

PolyElement poly_mul(const PolyElement& s, const PolyElement& t);

/// y x^-1 maps x w to y w; undefined off the domain. Requires r = 1.
std::optional<Word> poly_act(const PolyElement& s, const Word& w);
/// Rooted version: (i, y x^-1, j) maps (j, x w) to (i, y w).
std::optional<RootedWord> poly_act(const PolyElement& s, const RootedWord& w);

bool poly_leq(const PolyElement& s, const PolyElement& t);
/// The lower of s and t when comparable, zero otherwise (the order is
/// unambiguous, so incomparable elements have no nonzero common lower bound).
PolyElement poly_meet(const PolyElement& s, const PolyElement& t);
bool poly_compatible(const PolyElement& s, const PolyElement& t);
bool poly_orthogonal(const PolyElement& s, const PolyElement& t);

/// a -> B. Throws DomainError if a is zero.
bool lenz_arrow(const PolyElement& a, std::span<const PolyElement> targets);
/// Every element of A lies below a and a -> A.
bool is_cover(const PolyElement& a, std::span<const PolyElement> cover);

}  // namespace stonedual

#endif
