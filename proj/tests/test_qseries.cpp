#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hallway/qseries.hpp"

using namespace hallway::q;
using hallway::DomainError;
using hallway::ResourceError;

namespace {

Ring uni(int cap) { return Ring({"q"}, {cap, 0, 0}); }

MultiPoly random_poly(const Ring& ring, std::mt19937& rng, int max_deg, int nterms) {
  MultiPoly p(ring);
  for (int t = 0; t < nterms; ++t) {
    Exps e{0, 0, 0};
    for (int v = 0; v < ring.num_vars(); ++v)
      e[static_cast<size_t>(v)] = static_cast<int>(rng() % (max_deg + 1));
    p.add_term(e, static_cast<int>(rng() % 19) - 9);
  }
  return p;
}

}  // namespace

TEST_CASE("ring construction and caps") {
  CHECK_THROWS_AS(Ring({}), DomainError);
  CHECK_THROWS_AS(Ring({"a", "b", "c", "d"}), DomainError);
  const Ring r({"q", "a"}, {10, kUncapped, 0});
  CHECK(r.num_vars() == 2);
  CHECK(r.within_caps(exps(10, 100)));
  CHECK_FALSE(r.within_caps(exps(11, 0)));
}

TEST_CASE("terms beyond the cap vanish and zeros are never stored") {
  MultiPoly p(uni(4));
  p.add_term(exps(5), 7);
  CHECK(p.is_zero());
  p.add_term(exps(2), 3);
  p.add_term(exps(2), -3);
  CHECK(p.is_zero());
  CHECK_THROWS_AS(p.add_term(exps(-1), 1), DomainError);
  CHECK_THROWS_AS(p.add_term(exps(0, 1), 1), DomainError);  // var outside ring
}

TEST_CASE("canonical string form") {
  const Ring r({"q", "a"}, {kUncapped, kUncapped, 0});
  MultiPoly p(r);
  p.add_term(exps(0, 0), 1);
  p.add_term(exps(1, 0), 1);
  p.add_term(exps(2, 0), 2);
  p.add_term(exps(1, 1), -3);
  CHECK(p.str() == "1 + q - 3*q*a + 2*q^2");
  CHECK(MultiPoly(r).str() == "0");
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(7);
  const Ring r({"q", "a"}, {8, 8, 0});
  for (int trial = 0; trial < 60; ++trial) {
    const MultiPoly a = random_poly(r, rng, 5, 6);
    const MultiPoly b = random_poly(r, rng, 5, 6);
    const MultiPoly c = random_poly(r, rng, 5, 6);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == MultiPoly(r));
    CHECK(a.pow(3) == a * a * a);
  }
}

TEST_CASE("truncation quotient is consistent with late truncation") {
  // Multiplying inside the capped ring equals multiplying exactly and
  // truncating afterwards.
  std::mt19937 rng(11);
  const Ring capped({"q"}, {12, 0, 0});
  const Ring exact = capped.uncapped();
  for (int trial = 0; trial < 40; ++trial) {
    const MultiPoly a = random_poly(exact, rng, 9, 5);
    const MultiPoly b = random_poly(exact, rng, 9, 5);
    CHECK((a * b).truncated_to(capped) ==
          a.truncated_to(capped) * b.truncated_to(capped));
  }
}

TEST_CASE("geometric inverse") {
  const Ring r = uni(6);
  const MultiPoly inv = geom_inverse(r, exps(2));
  CHECK(inv.str() == "1 + q^2 + q^4 + q^6");
  CHECK(one_plus(r, exps(2), -1) * inv == MultiPoly::constant(r, 1));
  CHECK_THROWS_AS(geom_inverse(r.uncapped(), exps(2)), ResourceError);
  CHECK_THROWS_AS(geom_inverse(r, exps(0)), DomainError);
}

TEST_CASE("exact division") {
  std::mt19937 rng(13);
  const Ring r({"q", "a"}, {kUncapped, kUncapped, 0});
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly p = random_poly(r, rng, 6, 5);
    MultiPoly d = random_poly(r, rng, 4, 4);
    if (d.is_zero()) continue;
    CHECK(exact_div(p * d, d) == p);
  }
  MultiPoly p(r);
  p.add_term(exps(0), 1);
  p.add_term(exps(1), 1);
  MultiPoly d(r);
  d.add_term(exps(1), 1);
  CHECK_THROWS_AS(exact_div(p, d), DomainError);
}

TEST_CASE("q-analogs") {
  const Ring r = uni(kUncapped);
  CHECK(q_bracket(r, 4, exps(1)).str() == "1 + q + q^2 + q^3");
  CHECK(q_bracket(r, 2, exps(3)).str() == "1 + q^3");
  CHECK(q_factorial(r, 3, exps(1)).str() == "1 + 2*q + 2*q^2 + q^3");
  // Gaussian binomial [4 2]_q = 1 + q + 2q^2 + q^3 + q^4.
  CHECK(q_binomial(r, 4, 2, exps(1)).str() == "1 + q + 2*q^2 + q^3 + q^4");
  CHECK(q_binomial(r, 5, 0, exps(1)) == MultiPoly::constant(r, 1));
  CHECK(q_binomial(r, 3, 5, exps(1)).is_zero());
}

TEST_CASE("q-binomial coefficients are nonnegative and sum to C(n,k)") {
  const Ring r = uni(kUncapped);
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      const MultiPoly b = q_binomial(r, n, k, exps(1));
      Coeff total = 0;
      for (const auto& [e, c] : b.terms()) {
        CHECK(c > 0);
        total += c;
      }
      // C(n,k) by Pascal.
      Coeff binom = 1;
      for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
      CHECK(total == binom);
    }
  }
}

TEST_CASE("pochhammer products") {
  const Ring r({"q", "a"}, {kUncapped, kUncapped, 0});
  // (aq; q)_2 = (1 - aq)(1 - aq^2).
  const MultiPoly p = pochhammer(r, 1, exps(1, 1), exps(1, 0), 2);
  MultiPoly expect = one_plus(r, exps(1, 1), -1) * one_plus(r, exps(2, 1), -1);
  CHECK(p == expect);
  CHECK(pochhammer(r, 1, exps(1, 1), exps(1, 0), 0) == MultiPoly::constant(r, 1));
  // Falling: (1 - aq^3)(1 - aq^2)(1 - aq).
  const MultiPoly f = falling_pochhammer(r, exps(3, 1), exps(1, 0), 3);
  MultiPoly expect_f = one_plus(r, exps(3, 1), -1) * one_plus(r, exps(2, 1), -1) *
                       one_plus(r, exps(1, 1), -1);
  CHECK(f == expect_f);
  CHECK_THROWS_AS(falling_pochhammer(r, exps(1, 1), exps(1, 0), 3), DomainError);
}

TEST_CASE("variable specialization helpers") {
  const Ring r2({"a", "b"}, {kUncapped, kUncapped, 0});
  MultiPoly p(r2);
  p.add_term(exps(2, 1), 3);  // 3 a^2 b
  p.add_term(exps(0, 2), 1);  // b^2
  const Ring ra({"a"}, {kUncapped, 0, 0});
  // b = a.
  const MultiPoly merged = merge_var(p, 1, 0, ra);
  CHECK(merged.coeff(exps(3)) == 3);
  CHECK(merged.coeff(exps(2)) == 1);
  // b = 1.
  const MultiPoly at_one = set_var_to_one(p, 1, ra);
  CHECK(at_one.coeff(exps(2)) == 3);
  CHECK(at_one.coeff(exps(0)) == 1);
}
