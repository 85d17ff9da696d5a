#include "doctest.h"
#include "oracles.hpp"
#include "stonedual/formats.hpp"
#include "stonedual/polycyclic.hpp"

using namespace stonedual;

namespace {
const PolyParams P2{2, 1};
PolyElement e(const char* s, PolyParams p = P2) { return parse_poly(s, p); }

PolyElement random_elem(std::mt19937_64& rng, PolyParams p, std::size_t max_len) {
  if (rng() % 12 == 0) return PolyElement::zero(p);
  auto rw = [&] {
    std::string s;
    for (std::size_t k = rng() % (max_len + 1); k > 0; --k) s += static_cast<char>('a' + rng() % p.n);
    return oracle::word(s, p.n);
  };
  return PolyElement::make(p, static_cast<unsigned>(rng() % p.r), rw(), rw(), static_cast<unsigned>(rng() % p.r));
}
}  // namespace

TEST_CASE("products from the presentation") {
  CHECK(poly_mul(e("a^-1"), e("a")) == e("1"));
  CHECK(poly_mul(e("a^-1"), e("b")).is_zero());
  CHECK(poly_mul(e("ab.a^-1"), e("a.b^-1")) == e("ab.b^-1"));
  CHECK(poly_mul(e("0"), e("a")).is_zero());
  CHECK(poly_mul(e("1"), e("ab.b^-1")) == e("ab.b^-1"));
}

TEST_CASE("action on words") {
  Alphabet a(2);
  CHECK(*poly_act(e("ab.a^-1"), oracle::word("ab", 2)) == oracle::word("abb", 2));
  CHECK(*poly_act(e("1"), oracle::word("ba", 2)) == oracle::word("ba", 2));
  CHECK_FALSE(poly_act(e("a.b^-1"), oracle::word("ab", 2)).has_value());
}

TEST_CASE("order and meets") {
  CHECK(poly_leq(e("ab.ab^-1"), e("a.a^-1")));
  CHECK_FALSE(poly_leq(e("a.a^-1"), e("ab.ab^-1")));
  CHECK(poly_meet(e("ab.a^-1"), e("ab.a^-1")) == e("ab.a^-1"));
  CHECK(poly_meet(e("a.a^-1"), e("b.b^-1")).is_zero());
  CHECK(poly_meet(e("a.a^-1"), e("ab.ab^-1")) == e("ab.ab^-1"));
}

TEST_CASE("compatibility and orthogonality") {
  CHECK(poly_compatible(e("a.a^-1"), e("ab.ab^-1")));
  CHECK_FALSE(poly_compatible(e("a"), e("b")));
  CHECK(poly_orthogonal(e("a.a^-1"), e("b.b^-1")));
  CHECK_FALSE(poly_orthogonal(e("a.a^-1"), e("ab.ab^-1")));
}

TEST_CASE("Lenz arrow and covers") {
  auto one = e("1");
  std::vector<PolyElement> code{e("a.a^-1"), e("ba.ba^-1"), e("bb.bb^-1")};
  CHECK(lenz_arrow(one, code));
  CHECK(is_cover(one, code));
  std::vector<PolyElement> partial{e("a.a^-1"), e("ba.ba^-1")};
  CHECK_FALSE(lenz_arrow(one, partial));
  std::vector<PolyElement> self{e("a")};
  CHECK(lenz_arrow(e("a"), self));
  std::vector<PolyElement> above{e("a")};
  CHECK_FALSE(is_cover(one, above));
  std::vector<PolyElement> idem{e("a.a^-1")};
  CHECK(is_cover(e("a.a^-1"), idem));
  CHECK_THROWS_AS(lenz_arrow(e("0"), code), DomainError);
  CHECK_THROWS_AS(is_cover(e("0"), code), DomainError);
}

TEST_CASE("extended polycyclic products") {
  const PolyParams p{2, 2};
  CHECK(poly_mul(e("(1|1,1|1)", p), e("(1|1,1|1)", p)) == e("(1|1,1|1)", p));
  CHECK(poly_mul(e("(1|1,a|2)", p), e("(2|a,1|1)", p)) == e("(1|1,1|1)", p));
  CHECK(poly_mul(e("(1|a,b|2)", p), e("(1|a,a|1)", p)).is_zero());
  CHECK_FALSE(poly_leq(e("(1|a,a|1)", p), e("(2|1,1|2)", p)));
}

TEST_CASE("products agree with composition of prefix maps") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10000; ++t) {
    PolyParams p{2 + static_cast<unsigned>(rng() % 2), 1 + static_cast<unsigned>(rng() % 2)};
    auto s = random_elem(rng, p, 3), u = random_elem(rng, p, 3);
    auto st = poly_mul(s, u);
    for (const auto& w : oracle::all_points(p.n, p.r, 4)) {
      if (oracle::act(st, w) != oracle::act_composite(s, u, w)) {
        FAIL_CHECK(format_poly(s) << " * " << format_poly(u) << " at " << w.w);
        break;
      }
    }
  }
}

TEST_CASE("semigroup laws on random triples") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20000; ++t) {
    PolyParams p{2 + static_cast<unsigned>(rng() % 2), 1 + static_cast<unsigned>(rng() % 2)};
    auto s = random_elem(rng, p, 3), u = random_elem(rng, p, 3), v = random_elem(rng, p, 3);
    CHECK(poly_mul(poly_mul(s, u), v) == poly_mul(s, poly_mul(u, v)));
    CHECK(poly_mul(poly_mul(s, s.inverse()), s) == s);
    auto e1 = poly_mul(s, s.inverse()), e2 = poly_mul(u, u.inverse());
    CHECK(poly_mul(e1, e2) == poly_mul(e2, e1));
    // E*-unitary.
    if (u.is_idempotent() && !u.is_zero() && poly_leq(u, s)) CHECK(s.is_idempotent());
    // s <= t iff s = t s^-1 s iff s = s s^-1 t.
    bool leq = poly_leq(s, u);
    CHECK(leq == (poly_mul(poly_mul(u, s.inverse()), s) == s));
    CHECK(leq == (poly_mul(poly_mul(s, s.inverse()), u) == s));
    if (leq && !s.is_zero()) {
      std::vector<PolyElement> b{u};
      CHECK(lenz_arrow(s, b));
    }
  }
}

TEST_CASE("Lenz arrow agrees with the brute-force oracle") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 3000; ++t) {
    PolyParams p{2 + static_cast<unsigned>(rng() % 2), 1};
    auto a = random_elem(rng, p, 2);
    if (a.is_zero()) continue;
    std::vector<PolyElement> b;
    for (int k = 1 + static_cast<int>(rng() % 4); k > 0; --k) b.push_back(random_elem(rng, p, 4));
    // Bias towards elements below a so that true answers are common.
    for (int k = static_cast<int>(rng() % 4); k > 0; --k) {
      std::string ext;
      for (auto len = rng() % 3; len > 0; --len) ext += static_cast<char>('a' + rng() % p.n);
      b.push_back(PolyElement::make(p, a.y() + oracle::word(ext, p.n), a.x() + oracle::word(ext, p.n)));
    }
    CHECK(lenz_arrow(a, b) == oracle::lenz_arrow(a, b));
  }
}

TEST_CASE("1 -> {x x^-1} exactly for maximal prefix codes") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 2000; ++t) {
    unsigned n = 2 + rng() % 2;
    auto all = oracle::all_words(n, 4);
    std::vector<Word> code;
    std::vector<PolyElement> idem;
    for (int k = 0; k < 10; ++k) {
      auto s = oracle::word(all[rng() % all.size()], n);
      bool ok = true;
      for (auto& c : code) ok = ok && !prefix_comparable(c, s);
      if (ok) {
        code.push_back(s);
        idem.push_back(PolyElement::make({n, 1}, s, s));
      }
    }
    CHECK(lenz_arrow(PolyElement::one({n, 1}), idem) == is_maximal_prefix_code(code, Alphabet(n)));
  }
}
