#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "hallway/lecturehall.hpp"

using namespace hallway;

namespace {
LHPartition nat(std::vector<long long> parts) {
  const int n = static_cast<int>(parts.size());
  return LHPartition(std::move(parts), SSequence::natural(n));
}
}  // namespace

TEST_CASE("ratio chain validation") {
  CHECK_NOTHROW(nat({0, 0, 0}));
  CHECK_NOTHROW(nat({1, 2, 3}));
  CHECK_NOTHROW(nat({0, 1, 5}));
  CHECK_THROWS_AS(nat({2, 3}), DomainError);     // 2/1 > 3/2
  CHECK_THROWS_AS(nat({-1, 0}), DomainError);
  CHECK_THROWS_AS(nat({1, 1}), DomainError);     // 1/1 > 1/2
  CHECK(is_lhp({3, 6, 9}, SSequence::natural(3)));
  CHECK_FALSE(is_lhp({3, 5, 9}, SSequence::natural(3)));
}

TEST_CASE("weight generating function of L_n matches odd parts") {
  // Coefficient lists for n = 2, 3, 4 up to q^12, frozen from a direct
  // filter over all bounded-weight integer vectors.
  const std::map<int, std::vector<long long>> expect = {
      {2, {1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5}},
      {3, {1, 1, 1, 2, 2, 3, 4, 4, 5, 6, 7, 8, 9}},
      {4, {1, 1, 1, 2, 2, 3, 4, 5, 6, 7, 9, 10, 12}}};
  for (const auto& [n, coeffs] : expect) {
    std::vector<long long> dist(13, 0);
    for_each_lhp_by_weight(SSequence::natural(n), 12,
                           [&](const LHPartition& l) { ++dist[static_cast<size_t>(l.weight())]; });
    CHECK(dist == coeffs);
  }
}

TEST_CASE("L_n equals L_n with doubled context, as sets") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<long long>> a, b;
    for_each_lhp_by_weight(SSequence::natural(n), 9,
                           [&](const LHPartition& l) { a.insert(l.parts()); });
    for_each_lhp_by_weight(SSequence::doubled(n), 9,
                           [&](const LHPartition& l) { b.insert(l.parts()); });
    CHECK(a == b);
  }
}

TEST_CASE("ceiling and excess on fixed partitions") {
  const LHPartition l = nat({0, 1, 5, 7});
  CHECK(ceiling_vec(l) == std::vector<long long>{0, 1, 2, 2});
  CHECK(excess(l).values() == std::vector<long long>{0, 1, 1, 1});
}

TEST_CASE("pair decomposition round trips and lands in T_n^(s)") {
  for (const SSequence& s :
       {SSequence::natural(4), SSequence::doubled(4), SSequence({3, 1, 4, 5})}) {
    for_each_lhp_by_weight(s, 10, [&](const LHPartition& l) {
      const CeilingExcessPair pair = lhp_to_pair(l);
      CHECK(pair_to_lhp(pair.b, pair.e) == l);
      // b nondecreasing from 0, strict across ascents of e.
      const std::vector<int> asc = asc_set(pair.e);
      long long prev = 0;
      for (size_t i = 0; i < pair.b.size(); ++i) {
        const bool is_asc =
            std::find(asc.begin(), asc.end(), static_cast<int>(i)) != asc.end();
        if (is_asc)
          CHECK(pair.b[i] > prev);
        else
          CHECK(pair.b[i] >= prev);
        prev = pair.b[i];
      }
    });
  }
}

TEST_CASE("pair_to_lhp rejects pairs outside T_n^(s)") {
  const SSequence s = SSequence::doubled(2);
  // e = (1,0): ascent at 0 forces b_1 >= 1.
  CHECK_THROWS_AS(pair_to_lhp({0, 0}, InversionSequence({1, 0}, s)), DomainError);
  // Decreasing b.
  CHECK_THROWS_AS(pair_to_lhp({2, 1}, InversionSequence({0, 0}, s)), DomainError);
  CHECK_NOTHROW(pair_to_lhp({1, 1}, InversionSequence({1, 0}, s)));
}

TEST_CASE("odd/even weights and truncation predicate") {
  const LHPartition l = nat({0, 1, 5, 7});
  const auto [odd, even] = odd_even_weights(l);
  CHECK(odd == 7 + 1);
  CHECK(even == 5 + 0);
  CHECK(odd + even == l.weight());
  CHECK(is_truncated(l, 3));
  CHECK_FALSE(is_truncated(l, 2));
  CHECK_FALSE(is_truncated(l, 4));
  CHECK(is_truncated(nat({0, 0, 0}), 0));
  CHECK_FALSE(is_truncated(nat({0, 0, 1}), 0));
  CHECK_THROWS_AS(is_truncated(l, 5), DomainError);
}

TEST_CASE("last-part enumeration matches the box counts") {
  // #{lambda in L_n : lambda_n <= t} with t = jn+k should be (j+1)^{n-k}(j+2)^k.
  for (int n = 2; n <= 4; ++n) {
    for (long long t = 0; t <= 2LL * n; ++t) {
      long long count = 0;
      for_each_lhp_by_last_part(n, t, [&](const LHPartition& l) {
        CHECK(l.at(n) <= t);
        ++count;
      });
      const long long j = t / n, k = t % n;
      long long expect = 1;
      for (int i = 0; i < n - k; ++i) expect *= j + 1;
      for (int i = 0; i < k; ++i) expect *= j + 2;
      CHECK(count == expect);
    }
  }
}
