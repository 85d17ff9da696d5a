#include "doctest.h"
#include "oracles.hpp"
#include "stonedual/filtercomp.hpp"
#include "stonedual/formats.hpp"

using namespace stonedual;

namespace {

MulTable witness() {
  return parse_table(
      "elements 4 zero 0 identity 2\n0 0 0 0\n0 1 1 1\n0 1 2 3\n0 1 3 2\nname 1 f\nname 2 e\nname 3 g\n");
}

std::vector<MulTable> corpus() {
  return {symmetric_inverse_monoid(1), symmetric_inverse_monoid(2), rees_b_r(symmetric_inverse_monoid(1), 2),
          zero_cyclic_group(2),        chain(3),                     boolean_algebra(2),
          witness(),                   zero_direct_union(chain(3), symmetric_inverse_monoid(2))};
}

Elem named(const MulTable& s, const char* n) { return *s.find(n); }

}  // namespace

TEST_CASE("ultrafilters are the 0-minimal elements") {
  auto [e, emb] = idempotent_subtable(symmetric_inverse_monoid(2));
  CHECK(ultrafilters(e).size() == 2);
  CHECK(ultrafilters(chain(2)).size() == 1);
  CHECK(ultrafilters(symmetric_inverse_monoid(2)).size() == 4);
  for (const auto& s : corpus())
    for (Elem u : ultrafilters(s)) CHECK(oracle::is_ultrafilter_generator(s, u));
}

TEST_CASE("tight filters") {
  auto c = chain(3);
  CHECK(is_tight_filter(chain(2), 1));
  CHECK(is_tight_filter(c, 1));
  CHECK_FALSE(is_tight_filter(c, 2));
  auto d = boolean_algebra(2);
  CHECK_FALSE(is_tight_filter(d, 3));
  CHECK_THROWS_AS(is_tight_filter(d, d.zero()), DomainError);
  for (const auto& s : corpus())
    for (Elem x = 0; x < s.size(); ++x) {
      if (x == s.zero()) continue;
      CHECK(is_tight_filter(s, x) == oracle::tight(s, x));
      CHECK(is_tight_filter(s, x) == is_tight_filter_bruteforce(s, x));
      // Tightness of A and of (A^-1 A)^up agree.
      CHECK(is_tight_filter(s, x) == is_tight_filter(s, s.d(x)));
    }
  // Every ultrafilter is tight.
  for (const auto& s : corpus())
    for (Elem u : ultrafilters(s)) CHECK(is_tight_filter(s, u));
}

TEST_CASE("Lenz congruence") {
  auto i2 = symmetric_inverse_monoid(2);
  auto q = lenz_congruence(i2);
  CHECK(q.table.size() == i2.size());
  auto w = witness();
  auto lw = lenz_congruence(w);
  CHECK(lw.lambda[named(w, "g")] == lw.lambda[named(w, "e")]);
  for (const auto& s : corpus()) {
    auto l = lenz_congruence(s);
    CHECK(l.lambda[s.zero()] == l.table.zero());
    for (Elem a = 0; a < s.size(); ++a) {
      if (a != s.zero()) CHECK(l.lambda[a] != l.table.zero());
      for (Elem b = 0; b < s.size(); ++b) {
        CHECK(l.lambda[s.mul(a, b)] == l.table.mul(l.lambda[a], l.lambda[b]));
        if (a != s.zero()) CHECK(oracle::arrow(s, a, {b}) == l.table.leq(l.lambda[a], l.lambda[b]));
      }
    }
  }
}

TEST_CASE("compatible ideals") {
  CHECK(compatible_ideals(chain(2)).size() == 2);
  auto i2 = symmetric_inverse_monoid(2);
  auto ideals = compatible_ideals(i2);
  CompatibleIdeal orth = ideal_of(i2, {named(i2, "1-"), named(i2, "-2")});
  CHECK(orth.generators.size() == 2);
  CHECK(std::find(ideals.begin(), ideals.end(), orth) != ideals.end());
  // Singleton ideals multiply like S.
  for (Elem a = 0; a < i2.size(); ++a)
    for (Elem b = 0; b < i2.size(); ++b) {
      auto ia = a == i2.zero() ? CompatibleIdeal{} : CompatibleIdeal{{a}};
      auto ib = b == i2.zero() ? CompatibleIdeal{} : CompatibleIdeal{{b}};
      auto ab = i2.mul(a, b) == i2.zero() ? CompatibleIdeal{} : CompatibleIdeal{{i2.mul(a, b)}};
      CHECK(ideal_product(i2, ia, ib) == ab);
    }
  auto fc = fc_semigroup(i2, ideals);
  CHECK(validate(fc).ok);
  CHECK(is_distributive(fc));
}

TEST_CASE("distributive completion") {
  auto dc = distributive_completion(chain(2));
  CHECK(dc.table.size() == 2);
  CHECK(is_boolean(dc.table));
  auto i2 = symmetric_inverse_monoid(2);
  auto di = distributive_completion(i2);
  CHECK(find_isomorphism(i2, di.table).has_value());
  auto b2 = rees_b_r(symmetric_inverse_monoid(1), 2);
  CHECK(find_isomorphism(distributive_completion(b2).table, i2).has_value());
  for (const auto& s : corpus()) {
    auto c = distributive_completion(s);
    CHECK(c.delta[s.zero()] == c.table.zero());
    CHECK(is_homomorphism(s, c.table, c.delta));
    CHECK(is_cover_to_join(s, c.table, c.delta));
    CHECK(is_cover_to_join_bruteforce(s, c.table, c.delta));
    CHECK(is_distributive(c.table));
    CHECK(part1_isomorphism(s, c).has_value());
    // Every element of D(S) is a join of delta-images.
    for (Elem d = 0; d < c.table.size(); ++d) {
      std::vector<Elem> below;
      for (Elem x = 0; x < s.size(); ++x)
        if (c.table.leq(c.delta[x], d)) below.push_back(c.delta[x]);
      auto j = c.table.join(below);
      REQUIRE(j.has_value());
      CHECK(*j == d);
    }
  }
}

TEST_CASE("meet semilattices and Booleanization") {
  const std::size_t expected[] = {1, 1, 2, 5, 15};
  for (unsigned m = 1; m <= 5; ++m) {
    auto all = enumerate_meet_semilattices(m);
    CHECK(all.size() == expected[m - 1]);
    for (const auto& e : all) {
      auto r = booleanization_report(e);
      CHECK(r.tight_eq_ultra);
      CHECK(r.d_boolean);
      CHECK(r.unital == r.compactable);
      if (r.zero_disjunctive) CHECK(r.densely_embedded);
      for (Elem x = 0; x < e.size(); ++x)
        if (x != e.zero()) CHECK(oracle::tight(e, x) == oracle::is_ultrafilter_generator(e, x));
    }
  }
  auto [ei2, emb] = idempotent_subtable(symmetric_inverse_monoid(2));
  CHECK(find_isomorphism(ei2, boolean_algebra(2)).has_value());
}

TEST_CASE("orthogonalize") {
  const PolyParams p{2, 1};
  auto e = [&](const char* s) { return parse_poly(s, p); };
  std::vector<PolyElement> x{e("a.a^-1"), e("ab.ab^-1")};
  auto o = orthogonalize(x);
  REQUIRE(o.size() == 1);
  CHECK(o[0] == e("a.a^-1"));
  std::vector<PolyElement> y{e("a.a^-1"), e("ba.ba^-1"), e("bb.bb^-1")};
  CHECK(orthogonalize(y).size() == 3);
  std::vector<PolyElement> bad{e("a"), e("b")};
  CHECK_THROWS_AS(orthogonalize(bad), DomainError);
  auto i2 = symmetric_inverse_monoid(2);
  std::vector<Elem> t{named(i2, "1-"), named(i2, "12")};
  auto ot = orthogonalize(i2, t);
  REQUIRE(ot.size() == 1);
  CHECK(ot[0] == named(i2, "12"));
}

TEST_CASE("universal property") {
  auto i2 = symmetric_inverse_monoid(2);
  auto c = distributive_completion(i2);
  auto self = check_universal_property(i2, c, c.table, c.delta);
  CHECK(self.ok);
  for (Elem d = 0; d < c.table.size(); ++d) CHECK(self.extension[d] == d);

  auto [e, emb] = idempotent_subtable(i2);
  auto ce = distributive_completion(e);
  auto i3 = symmetric_inverse_monoid(3);
  std::size_t tested = 0;
  for (const auto& theta : enumerate_homomorphisms(e, i3)) {
    if (!is_cover_to_join(e, i3, theta)) continue;
    ++tested;
    auto r = check_universal_property(e, ce, i3, theta);
    CHECK_MESSAGE(r.ok, r.message);
  }
  CHECK(tested > 0);

  // Planted: send the identity of E(I(2)) to the identity of I(3) while the
  // atoms go to two rank-1 idempotents, so theta(1) is not the join.
  std::vector<Elem> theta(e.size(), i3.zero());
  for (Elem x = 0; x < e.size(); ++x) {
    auto n = i2.name(emb[x]);
    if (n == "1-") theta[x] = named(i3, "1--");
    if (n == "-2") theta[x] = named(i3, "-2-");
    if (n == "12") theta[x] = named(i3, "123");
  }
  REQUIRE(is_homomorphism(e, i3, theta));
  CHECK_FALSE(is_cover_to_join(e, i3, theta));
  auto failure = cover_to_join_failure(e, i3, theta);
  REQUIRE(failure.has_value());
  CHECK(i2.name(emb[*failure]) == "12");
  CHECK_FALSE(check_universal_property(e, ce, i3, theta).ok);
}
