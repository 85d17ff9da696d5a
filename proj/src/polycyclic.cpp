#include "stonedual/polycyclic.hpp"

#include <algorithm>

namespace stonedual {

namespace {

void check_params(PolyParams p) {
  if (p.n < 2) throw DomainError("polycyclic monoids need n >= 2");
  if (p.r < 1) throw DomainError("need r >= 1");
}

void require_same(const PolyElement& s, const PolyElement& t) {
  if (!(s.params() == t.params())) throw DomainError("parameter mismatch");
}

}  // namespace

PolyElement PolyElement::zero(PolyParams p) {
  check_params(p);
  return PolyElement(p, Alphabet(p.n));
}

PolyElement PolyElement::one(PolyParams p, unsigned root) {
  return make(p, root, Word(Alphabet(p.n)), Word(Alphabet(p.n)), root);
}

PolyElement PolyElement::make(PolyParams p, unsigned i, Word y, Word x, unsigned j) {
  check_params(p);
  Alphabet a(p.n);
  if (!(y.alphabet() == a) || !(x.alphabet() == a)) throw DomainError("alphabet mismatch");
  if (i >= p.r || j >= p.r) throw DomainError("root index out of range");
  PolyElement e(p, a);
  e.zero_ = false;
  e.i_ = i;
  e.j_ = j;
  e.y_ = std::move(y);
  e.x_ = std::move(x);
  return e;
}

PolyElement PolyElement::inverse() const {
  if (zero_) return *this;
  return make(params_, j_, x_, y_, i_);
}

PolyElement PolyElement::d() const {
  if (zero_) return *this;
  return make(params_, j_, x_, x_, j_);
}

PolyElement PolyElement::r() const {
  if (zero_) return *this;
  return make(params_, i_, y_, y_, i_);
}

std::strong_ordering operator<=>(const PolyElement& a, const PolyElement& b) {
  if (a.zero_ != b.zero_) return a.zero_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.zero_) return std::strong_ordering::equal;
  if (auto c = a.i_ <=> b.i_; c != 0) return c;
  if (auto c = a.j_ <=> b.j_; c != 0) return c;
  if (auto c = a.y_ <=> b.y_; c != 0) return c;
  return a.x_ <=> b.x_;
}

PolyElement poly_mul(const PolyElement& s, const PolyElement& t) {
  require_same(s, t);
  const PolyParams p = s.params();
  if (s.is_zero() || t.is_zero() || s.j() != t.i()) return PolyElement::zero(p);
  // s = y x^-1, t = v u^-1
  const Word& x = s.x();
  const Word& v = t.y();
  auto cmp = prefix_compare(x, v);
  switch (cmp.kind) {
    case PrefixComparison::Kind::Equal:
      return PolyElement::make(p, s.i(), s.y(), t.x(), t.j());
    case PrefixComparison::Kind::XPrefixOfY:  // v = x z
      return PolyElement::make(p, s.i(), s.y() + *cmp.remainder, t.x(), t.j());
    case PrefixComparison::Kind::YPrefixOfX:  // x = v z
      return PolyElement::make(p, s.i(), s.y(), t.x() + *cmp.remainder, t.j());
    case PrefixComparison::Kind::Incomparable:
      break;
  }
  return PolyElement::zero(p);
}

std::optional<Word> poly_act(const PolyElement& s, const Word& w) {
  if (s.params().r != 1) throw DomainError("word action needs r = 1; use rooted words");
  auto out = poly_act(s, RootedWord{0, w});
  if (!out) return std::nullopt;
  return out->word;
}

std::optional<RootedWord> poly_act(const PolyElement& s, const RootedWord& w) {
  if (!(w.word.alphabet() == s.alphabet())) throw DomainError("alphabet mismatch");
  if (s.is_zero() || w.root != s.j() || !is_prefix(s.x(), w.word)) return std::nullopt;
  return RootedWord{s.i(), s.y() + w.word.drop(s.x().size())};
}

bool poly_leq(const PolyElement& s, const PolyElement& t) {
  require_same(s, t);
  if (s.is_zero()) return true;
  if (t.is_zero()) return false;
  if (s.i() != t.i() || s.j() != t.j()) return false;
  if (s.y().size() < t.y().size() || s.y().size() - t.y().size() != s.x().size() - t.x().size())
    return false;
  if (s.x().size() < t.x().size()) return false;
  if (!is_prefix(t.y(), s.y()) || !is_prefix(t.x(), s.x())) return false;
  return s.y().drop(t.y().size()) == s.x().drop(t.x().size());
}

PolyElement poly_meet(const PolyElement& s, const PolyElement& t) {
  if (poly_leq(s, t)) return s;
  if (poly_leq(t, s)) return t;
  return PolyElement::zero(s.params());
}

bool poly_compatible(const PolyElement& s, const PolyElement& t) {
  return poly_mul(s.inverse(), t).is_idempotent() && poly_mul(s, t.inverse()).is_idempotent();
}

bool poly_orthogonal(const PolyElement& s, const PolyElement& t) {
  return poly_mul(s.inverse(), t).is_zero() && poly_mul(s, t.inverse()).is_zero();
}

bool lenz_arrow(const PolyElement& a, std::span<const PolyElement> targets) {
  if (a.is_zero()) throw DomainError("the arrow needs a nonzero source");
  // Nonzero elements below a = (i, u v^-1, j) are (i, (uw)(vw)^-1, j); collect
  // the w of each a /\ b.
  std::vector<Word> tails;
  for (const PolyElement& b : targets) {
    PolyElement c = poly_meet(a, b);
    if (!c.is_zero()) tails.push_back(c.x().drop(a.x().size()));
  }
  return is_complete_set(tails, a.alphabet());
}

bool is_cover(const PolyElement& a, std::span<const PolyElement> cover) {
  if (a.is_zero()) throw DomainError("a cover needs a nonzero element");
  for (const PolyElement& b : cover)
    if (!poly_leq(b, a)) return false;
  return lenz_arrow(a, cover);
}

}  // namespace stonedual
