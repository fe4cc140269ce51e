// End-to-end acceptance checks.  One line per criterion; exit status is the
// number of failures.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hallway/affine.hpp"
#include "hallway/identities.hpp"
#include "hallway/invseq.hpp"
#include "hallway/lecturehall.hpp"
#include "hallway/perms.hpp"

using namespace hallway;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok) {
  std::printf("[%2d] %-58s %s\n", idx, name.c_str(), ok ? "pass" : "FAIL");
  if (!ok) ++failures;
}

bool run(const std::function<bool()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "      exception: %s\n", e.what());
    return false;
  }
}

bool criterion_reference_element() {
  const SignedPermutation sigma({-3, -1, 2, -5, -4});
  const InversionSequence e = psi(sigma);
  bool ok = e.values() == std::vector<long long>{1, 2, 1, 7, 8};
  ok = ok && inv_c(sigma) == 19 && e.weight() == 19;
  ok = ok && des_set_signed(sigma) == std::vector<int>{0, 3};
  ok = ok && asc_set(e) == std::vector<int>{0, 3};
  ok = ok && psi_inverse(e) == sigma;
  return ok;
}

bool criterion_bijection() {
  for (int n = 1; n <= 5; ++n) {
    const long long N = 2LL * n + 2;
    std::set<std::vector<long long>> images;
    long long count = 0;
    bool ok = true;
    for_each_coset_rep(n, 3 * N, [&](const CosetRep& w) {
      ++count;
      const LHPartition lambda = to_lhp(w);
      const WindowStats st = stats(w);
      ok = ok && from_lhp(lambda) == w;
      ok = ok && lambda.weight() == class_inv(w).total;
      ok = ok && st.inv_tilde == lambda.weight();
      ok = ok && st.max == (n > 0 ? lambda.at(n) : 0);
      const auto [odd, even] = odd_even_weights(lambda);
      ok = ok && st.odd_inv == odd && st.even_inv == even;
      images.insert(lambda.parts());
    });
    if (!ok || images.size() != static_cast<size_t>(count)) return false;
  }
  return true;
}

bool criterion_lht() {
  for (int n = 1; n <= 5; ++n)
    if (!identities::check_lht(n, 24).equal) return false;
  return true;
}

bool criterion_refined_products() {
  for (int n = 1; n <= 3; ++n) {
    if (!identities::check_bott_refined(n, 12).equal) return false;
    if (!identities::check_refined_uv(n, 12).equal) return false;
  }
  return true;
}

bool criterion_truncated_products() {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n; ++k)
      if (!identities::check_truncated_bott(n, k, 12).equal) return false;
    if (!identities::check_truncated_bott_sum(n, 12).equal) return false;
  }
  return true;
}

bool criterion_odd_even() {
  for (int n = 1; n <= 3; ++n) {
    if (!identities::check_odd_even(n, 10, 10).equal) return false;
    for (int k = 0; k <= n; ++k)
      if (!identities::check_truncated_odd_even(n, k, 10, 10).equal) return false;
  }
  return true;
}

bool criterion_box() {
  for (int n = 1; n <= 4; ++n)
    for (int j = 0; j <= 2; ++j)
      for (int k = 0; k < n; ++k)
        if (!identities::check_box(n, j, k).equal) return false;
  return true;
}

bool criterion_snt() {
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t <= 2; ++t) {
      if (!identities::check_snt(n, t).equal) return false;
      if (!identities::check_snt_ab(n, t).equal) return false;
    }
  return true;
}

bool criterion_finite_distributions() {
  for (int n = 1; n <= 7; ++n)
    if (!identities::check_quadlhp(n).equal) return false;
  for (int n = 1; n <= 8; ++n)
    if (!identities::check_typeA_lhp(n).equal) return false;
  for (int n = 1; n <= 6; ++n)
    if (!identities::check_comaj_product(n).equal) return false;
  return true;
}

bool criterion_ehrhart() {
  for (int n = 1; n <= 3; ++n) {
    if (!identities::check_ehrhart(n, 2 * n * n + 2 * n).equal) return false;
    if (!identities::check_comaj_lhp(n).equal) return false;
  }
  return true;
}

bool criterion_length_oracle() {
  // Lengths, reduced words and s_0/s_n counts for every representative with
  // affine inversion number at most 10, ranks up to 4.
  for (int n = 1; n <= 4; ++n) {
    LengthOracle oracle(n, /*depth_cap=*/11);
    const long long bound = identities::window_bound_for_weight(n, 10);
    bool ok = true;
    for_each_coset_rep(n, bound, [&](const CosetRep& w) {
      const WindowStats st = stats(w);
      if (st.inv_tilde > 10) return;
      const auto result = oracle.find(w);
      if (!result) {
        ok = false;
        return;
      }
      ok = ok && result->length == st.inv_tilde;
      ok = ok && result->s0_count == st.alpha && result->sn_count == st.beta;
      AffineElement g = AffineElement::identity(n);
      for (int gen : result->word) g = gen_apply(g, gen);
      ok = ok && normal_form(g) == w;
    });
    if (!ok) return false;
  }
  // Coxeter relations on 1000 random elements per rank.
  std::mt19937 rng(93);
  for (int n = 2; n <= 5; ++n) {
    const long long N = 2LL * n + 2;
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<int> mags(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) mags[static_cast<size_t>(i)] = i + 1;
      std::shuffle(mags.begin(), mags.end(), rng);
      std::vector<long long> window(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        long long v = mags[static_cast<size_t>(i)];
        if (rng() & 1) v = -v;
        window[static_cast<size_t>(i)] = v + N * (static_cast<long long>(rng() % 9) - 4);
      }
      const AffineElement g(window);
      for (int i = 0; i <= n; ++i)
        if (!(gen_apply(gen_apply(g, i), i) == g)) return false;
      for (int i = 0; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
          if (!(gen_apply(gen_apply(g, i), j) == gen_apply(gen_apply(g, j), i)))
            return false;
      for (int i = 1; i + 1 <= n - 1; ++i) {
        AffineElement h = g;
        for (int r = 0; r < 3; ++r) h = gen_apply(gen_apply(h, i), i + 1);
        if (!(h == g)) return false;
      }
      AffineElement h = g;
      for (int r = 0; r < 4; ++r) h = gen_apply(gen_apply(h, 0), 1);
      if (!(h == g)) return false;
      h = g;
      for (int r = 0; r < 4; ++r) h = gen_apply(gen_apply(h, n - 1), n);
      if (!(h == g)) return false;
    }
  }
  return true;
}

bool criterion_property_suites() {
  // Statistic transport under the signed-permutation encoding, ranks <= 5.
  for (int n = 1; n <= 5; ++n) {
    bool ok = true;
    for_each_signed_permutation(n, [&](const SignedPermutation& sigma) {
      const InversionSequence e = psi(sigma);
      ok = ok && e.weight() == inv_c(sigma);
      ok = ok && asc_set(e) == des_set_signed(sigma);
      ok = ok && amaj(e) == comaj(sigma);
      ok = ok && lhp_stat(e) == lhp_c(sigma);
      ok = ok && psi_inverse(e) == sigma;
    });
    if (!ok) return false;
  }
  // L_n with natural and doubled contexts coincide as sets, ranks <= 5.
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<long long>> a, b;
    for_each_lhp_by_weight(SSequence::natural(n), 12,
                           [&](const LHPartition& l) { a.insert(l.parts()); });
    for_each_lhp_by_weight(SSequence::doubled(n), 12,
                           [&](const LHPartition& l) { b.insert(l.parts()); });
    if (a != b) return false;
  }
  // Ceiling/excess pairs round trip and land in T_n^(s), ranks <= 5.
  for (int n = 1; n <= 5; ++n) {
    bool ok = true;
    for (const SSequence& s : {SSequence::natural(n), SSequence::doubled(n)}) {
      for_each_lhp_by_weight(s, 10, [&](const LHPartition& l) {
        const CeilingExcessPair pair = lhp_to_pair(l);
        ok = ok && pair_to_lhp(pair.b, pair.e) == l;
      });
    }
    if (!ok) return false;
  }
  // Windows past the derived bound contribute nothing below the weight cap.
  for (int n = 1; n <= 3; ++n) {
    const long long cap = 12;
    const long long bound = identities::window_bound_for_weight(n, cap);
    bool ok = true;
    for_each_coset_rep(n, bound + 2 * (2 * n + 2), [&](const CosetRep& w) {
      if (w.at(n) > bound && class_inv(w).total <= cap) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

int main() {
  report(1, "reference rank-5 element maps as documented",
         run(criterion_reference_element));
  report(2, "window/partition bijection with statistics, n <= 5",
         run(criterion_bijection));
  report(3, "lecture hall theorem, n <= 5, degree 24", run(criterion_lht));
  report(4, "refined product formulas, n <= 3", run(criterion_refined_products));
  report(5, "truncated products and their k-sum, n <= 3",
         run(criterion_truncated_products));
  report(6, "odd/even weight products, full and truncated, n <= 3",
         run(criterion_odd_even));
  report(7, "box counting formula, n <= 4, j <= 2", run(criterion_box));
  report(8, "bounded-window counts and distributions, n <= 4, t <= 2",
         run(criterion_snt));
  report(9, "finite distribution products (quadratic, type A, comaj)",
         run(criterion_finite_distributions));
  report(10, "Ehrhart-style and joint comaj/lhp identities, n <= 3",
         run(criterion_ehrhart));
  report(11, "length oracle vs inversion statistic; Coxeter relations",
         run(criterion_length_oracle));
  report(12, "exhaustive property suites, n <= 5", run(criterion_property_suites));
  std::printf("%s\n", failures == 0 ? "all acceptance criteria pass"
                                    : "acceptance failures detected");
  return failures;
}
