#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hallway/invseq.hpp"
#include "hallway/perms.hpp"

using namespace hallway;

TEST_CASE("sequence validation") {
  CHECK(SSequence::natural(4).values() == std::vector<long long>{1, 2, 3, 4});
  CHECK(SSequence::doubled(3).values() == std::vector<long long>{2, 4, 6});
  CHECK_THROWS_AS(SSequence({1, 0, 2}), DomainError);
  CHECK_THROWS_AS(InversionSequence({0, 4}, SSequence::doubled(2)), DomainError);
  CHECK_THROWS_AS(InversionSequence({-1, 0}, SSequence::doubled(2)), DomainError);
  CHECK_THROWS_AS(InversionSequence({0}, SSequence::doubled(2)), DomainError);
}

TEST_CASE("ascents use the e_0 = 0, s_0 = 1 convention") {
  // e = (1,2,1,7,8) over (2,4,6,8,10): ascents where e_i/s_i < e_{i+1}/s_{i+1}.
  const InversionSequence e({1, 2, 1, 7, 8}, SSequence::doubled(5));
  CHECK(asc_set(e) == std::vector<int>{0, 3});
  // Equal ratios are not ascents: 1/2 vs 2/4.
  const InversionSequence f({1, 2}, SSequence::doubled(2));
  CHECK(asc_set(f) == std::vector<int>{0});
  // Leading zero gives no ascent at 0.
  const InversionSequence g({0, 3}, SSequence::doubled(2));
  CHECK(asc_set(g) == std::vector<int>{1});
}

TEST_CASE("amaj and lhp on a fixed sequence") {
  const InversionSequence e({1, 2, 1, 7, 8}, SSequence::doubled(5));
  CHECK(amaj(e) == (5 - 0) + (5 - 3));
  // lhp = -|e| + sum over ascents of (s_{i+1} + ... + s_n).
  const long long total = 1 + 2 + 1 + 7 + 8;
  CHECK(lhp_stat(e) == -total + (2 + 4 + 6 + 8 + 10) + (8 + 10));
}

TEST_CASE("theta on fixed permutations") {
  CHECK(theta(Permutation({1, 2, 3})).values() == std::vector<long long>{0, 0, 0});
  CHECK(theta(Permutation({3, 2, 1})).values() == std::vector<long long>{0, 1, 2});
  CHECK(theta(Permutation({2, 4, 1, 3})).values() == std::vector<long long>{0, 0, 2, 1});
}

TEST_CASE("theta round trips over S_5") {
  for_each_permutation(5, [&](const Permutation& pi) {
    const InversionSequence e = theta(pi);
    long long sum = 0;
    for (long long v : e.values()) sum += v;
    CHECK(sum == inv(pi));
    CHECK(theta_inverse(e) == pi);
  });
}

TEST_CASE("psi on the rank-5 reference element") {
  const SignedPermutation sigma({-3, -1, 2, -5, -4});
  const InversionSequence e = psi(sigma);
  CHECK(e.values() == std::vector<long long>{1, 2, 1, 7, 8});
  CHECK(e.weight() == inv_c(sigma));
  CHECK(asc_set(e) == des_set_signed(sigma));
  CHECK(psi_inverse(e) == sigma);
}

TEST_CASE("psi is a statistics-preserving bijection on C_n, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    long long seen = 0;
    for_each_signed_permutation(n, [&](const SignedPermutation& sigma) {
      ++seen;
      const InversionSequence e = psi(sigma);
      CHECK(e.weight() == inv_c(sigma));
      CHECK(asc_set(e) == des_set_signed(sigma));
      CHECK(amaj(e) == comaj(sigma));
      CHECK(lhp_stat(e) == lhp_c(sigma));
      CHECK(psi_inverse(e) == sigma);
    });
    // Surjectivity by counting: the two sets have equal size.
    long long total = 0;
    for_each_inversion_sequence(SSequence::doubled(n),
                                [&](const InversionSequence&) { ++total; });
    CHECK(seen == total);
  }
}

TEST_CASE("sign rule of the inverse map") {
  // Entry i is positive exactly when e_i <= i-1.
  for_each_inversion_sequence(SSequence::doubled(4), [&](const InversionSequence& e) {
    const SignedPermutation sigma = psi_inverse(e);
    for (int i = 1; i <= 4; ++i)
      CHECK((sigma.at(i) > 0) == (e.at(i) <= i - 1));
  });
}

TEST_CASE("enumeration is lexicographic and complete") {
  std::vector<std::vector<long long>> all;
  for_each_inversion_sequence(SSequence({2, 3}), [&](const InversionSequence& e) {
    all.push_back(e.values());
  });
  CHECK(all == std::vector<std::vector<long long>>{
                   {0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
}
