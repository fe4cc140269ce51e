#include "hallway/identities.hpp"

#include <chrono>
#include <functional>

#include <nlohmann/json.hpp>

#include "hallway/affine.hpp"
#include "hallway/invseq.hpp"
#include "hallway/lecturehall.hpp"
#include "hallway/perms.hpp"

namespace hallway::identities {

using q::Coeff;
using q::Exps;
using q::MultiPoly;
using q::Ring;
using q::exps;
using q::kUncapped;

namespace {

using Clock = std::chrono::steady_clock;

CheckReport compare(std::string id, std::map<std::string, long long> params,
                    std::map<std::string, long long> caps, const MultiPoly& lhs,
                    const MultiPoly& rhs, Clock::time_point start) {
  CheckReport report;
  report.id = std::move(id);
  report.params = std::move(params);
  report.caps = std::move(caps);
  report.lhs_terms = lhs.term_count();
  report.rhs_terms = rhs.term_count();
  report.lhs_str = lhs.str();
  report.rhs_str = rhs.str();
  report.equal = lhs == rhs;
  if (!report.equal) {
    // First differing exponent vector in graded-lex order.
    const MultiPoly diff = lhs - rhs;
    const auto& [e, c] = *diff.terms().begin();
    Mismatch m;
    for (int i = 0; i < lhs.ring().num_vars(); ++i)
      m.exps.push_back(e[static_cast<size_t>(i)]);
    m.lhs_coeff = lhs.coeff(e).str();
    m.rhs_coeff = rhs.coeff(e).str();
    report.mismatch = std::move(m);
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

long long suffix_even_sum(int n, int i) {
  // 2(i+1) + ... + 2n
  return static_cast<long long>(n) * (n + 1) - static_cast<long long>(i) * (i + 1);
}

void for_each_rep_stats(
    int n, long long max_wn,
    const std::function<void(const CosetRep&, const WindowStats&)>& fn) {
  for_each_coset_rep(n, max_wn, [&](const CosetRep& w) { fn(w, stats(w)); });
}

Coeff int_pow(long long base, int exp) {
  Coeff acc = 1;
  for (int i = 0; i < exp; ++i) acc *= base;
  return acc;
}

}  // namespace

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j{{"id", id},
                   {"params", params},
                   {"caps", caps},
                   {"verdict", equal ? "equal" : "mismatch"},
                   {"lhs_terms", lhs_terms},
                   {"rhs_terms", rhs_terms},
                   {"wall_time_ms", wall_time_ms}};
  if (mismatch) {
    j["mismatch"] = {{"exps", mismatch->exps},
                     {"lhs_coeff", mismatch->lhs_coeff},
                     {"rhs_coeff", mismatch->rhs_coeff}};
  }
  j["lhs"] = lhs_str;
  j["rhs"] = rhs_str;
  return j;
}

long long window_bound_for_weight(int n, long long weight_cap) {
  if (n == 0) return 0;
  if (weight_cap < 0) throw DomainError("weight cap must be nonnegative");
  // The largest part of the image partition is max(w) = w_n - floor(w_n/(n+1)) - n,
  // nondecreasing in w_n and a lower bound for the affine inversion number.
  auto max_stat = [n](long long w) { return w - w / (n + 1) - n; };
  long long w = n;
  while (max_stat(w + 1) <= weight_cap) ++w;
  return w;
}

CheckReport check_lht(int n, int qcap) {
  const auto start = Clock::now();
  const Ring ring({"q"}, {qcap, 0, 0});
  MultiPoly lhs(ring);
  for_each_lhp_by_weight(SSequence::natural(n), qcap, [&](const LHPartition& lambda) {
    lhs.add_term(exps(static_cast<int>(lambda.weight())), 1);
  });
  MultiPoly rhs = MultiPoly::constant(ring, 1);
  for (int i = 1; i <= n; ++i) rhs = rhs * q::geom_inverse(ring, exps(2 * i - 1));
  return compare("lht", {{"n", n}}, {{"q", qcap}}, lhs, rhs, start);
}

CheckReport check_bott_refined(int n, int qcap) {
  const auto start = Clock::now();
  const Ring ring({"q", "a", "b"}, {qcap, kUncapped, kUncapped});
  MultiPoly lhs(ring);
  for_each_rep_stats(n, window_bound_for_weight(n, qcap),
                     [&](const CosetRep&, const WindowStats& st) {
                       lhs.add_term(exps(static_cast<int>(st.inv_tilde),
                                         static_cast<int>(st.alpha),
                                         static_cast<int>(st.beta)),
                                    1);
                     });
  MultiPoly rhs = MultiPoly::constant(ring, 1);
  for (int i = 1; i <= n; ++i) {
    rhs = rhs * q::one_plus(ring, exps(i, 0, 1));
    rhs = rhs * q::geom_inverse(ring, exps(n + i, 1, 1));
  }
  return compare("bott", {{"n", n}}, {{"q", qcap}}, lhs, rhs, start);
}

CheckReport check_refined_uv(int n, int qcap) {
  const auto start = Clock::now();
  const Ring ring({"u", "v", "q"}, {kUncapped, kUncapped, qcap});
  MultiPoly lambda_side(ring), pair_side(ring);
  for_each_lhp_by_weight(SSequence::natural(n), qcap, [&](const LHPartition& lambda) {
    const std::vector<long long> ceil = ceiling_vec(lambda);
    int usum = 0, odd = 0;
    for (long long b : ceil) {
      usum += static_cast<int>(b);
      if (b % 2 != 0) ++odd;
    }
    lambda_side.add_term(exps(usum, odd, static_cast<int>(lambda.weight())), 1);
    // Independent route through the T_n^(s) pair.
    const CeilingExcessPair pair = lhp_to_pair(lambda);
    int pu = 0, podd = 0;
    long long pw = 0;
    for (int i = 1; i <= n; ++i) {
      const long long b = pair.b[static_cast<size_t>(i) - 1];
      pu += static_cast<int>(b);
      if (b % 2 != 0) ++podd;
      pw += lambda.context().at(i) * b - pair.e.at(i);
    }
    pair_side.add_term(exps(pu, podd, static_cast<int>(pw)), 1);
  });
  MultiPoly window_side(ring);
  for_each_rep_stats(n, window_bound_for_weight(n, qcap),
                     [&](const CosetRep&, const WindowStats& st) {
                       window_side.add_term(
                           exps(static_cast<int>(st.alpha + st.beta),
                                static_cast<int>(st.beta - st.alpha),
                                static_cast<int>(st.inv_tilde)),
                           1);
                     });
  if (!(lambda_side == pair_side))
    return compare("refined", {{"n", n}}, {{"q", qcap}}, lambda_side, pair_side, start);
  if (!(lambda_side == window_side))
    return compare("refined", {{"n", n}}, {{"q", qcap}}, lambda_side, window_side, start);
  MultiPoly rhs = MultiPoly::constant(ring, 1);
  for (int i = 1; i <= n; ++i) {
    rhs = rhs * q::one_plus(ring, exps(1, 1, i));
    rhs = rhs * q::geom_inverse(ring, exps(2, 0, n + i));
  }
  return compare("refined", {{"n", n}}, {{"q", qcap}}, lambda_side, rhs, start);
}

namespace {

MultiPoly truncated_bott_lhs(int n, int k, const Ring& ring, int qcap) {
  MultiPoly lhs(ring);
  for_each_coset_rep(n, window_bound_for_weight(n, qcap), [&](const CosetRep& w) {
    if (!in_tnk(w, k)) return;
    const WindowStats st = stats(w);
    lhs.add_term(exps(static_cast<int>(st.inv_tilde), static_cast<int>(st.alpha),
                      static_cast<int>(st.beta)),
                 1);
  });
  return lhs;
}

MultiPoly truncated_bott_rhs(int n, int k, const Ring& ring) {
  MultiPoly rhs = MultiPoly::monomial(ring, exps(k * (k + 1) / 2, 0, k));
  rhs = rhs * q::q_binomial(ring, n, k, exps(1));
  rhs = rhs * q::pochhammer(ring, Coeff(-1), exps(n - k + 1, 1, 0), exps(1), k);
  for (int j = 0; j < k; ++j)
    rhs = rhs * q::geom_inverse(ring, exps(2 * n - k + 1 + j, 1, 1));
  return rhs;
}

}  // namespace

CheckReport check_truncated_bott(int n, int k, int qcap) {
  const auto start = Clock::now();
  const Ring ring({"q", "a", "b"}, {qcap, kUncapped, kUncapped});
  const MultiPoly lhs = truncated_bott_lhs(n, k, ring, qcap);
  const MultiPoly rhs = truncated_bott_rhs(n, k, ring);
  return compare("truncated-bott", {{"n", n}, {"k", k}}, {{"q", qcap}}, lhs, rhs, start);
}

CheckReport check_truncated_bott_sum(int n, int qcap) {
  const auto start = Clock::now();
  const Ring ring({"q", "a", "b"}, {qcap, kUncapped, kUncapped});
  // T_{n,0}, ..., T_{n,n} partition the quotient, so the k-sum of the
  // truncated enumerations must reproduce the full product formula.
  MultiPoly lhs(ring);
  for (int k = 0; k <= n; ++k) lhs += truncated_bott_lhs(n, k, ring, qcap);
  MultiPoly rhs = MultiPoly::constant(ring, 1);
  for (int i = 1; i <= n; ++i) {
    rhs = rhs * q::one_plus(ring, exps(i, 0, 1));
    rhs = rhs * q::geom_inverse(ring, exps(n + i, 1, 1));
  }
  return compare("truncated-bott-sum", {{"n", n}}, {{"q", qcap}}, lhs, rhs, start);
}

namespace {

MultiPoly odd_even_lhs(int n, const Ring& ring, int xcap, int ycap,
                       std::optional<int> tnk) {
  MultiPoly lhs(ring);
  for_each_coset_rep(n, window_bound_for_weight(n, xcap + ycap),
                     [&](const CosetRep& w) {
                       if (tnk && !in_tnk(w, *tnk)) return;
                       const WindowStats st = stats(w);
                       lhs.add_term(exps(static_cast<int>(st.odd_inv),
                                         static_cast<int>(st.even_inv)),
                                    1);
                     });
  return lhs;
}

}  // namespace

CheckReport check_odd_even(int n, int xcap, int ycap) {
  const auto start = Clock::now();
  const Ring ring({"x", "y"}, {xcap, ycap, 0});
  const MultiPoly lhs = odd_even_lhs(n, ring, xcap, ycap, std::nullopt);
  MultiPoly rhs = MultiPoly::constant(ring, 1);
  for (int i = 1; i <= n; ++i) rhs = rhs * q::geom_inverse(ring, exps(i, i - 1));
  return compare("odd-even", {{"n", n}}, {{"x", xcap}, {"y", ycap}}, lhs, rhs, start);
}

CheckReport check_truncated_odd_even(int n, int k, int xcap, int ycap) {
  const auto start = Clock::now();
  const Ring ring({"x", "y"}, {xcap, ycap, 0});
  const MultiPoly lhs = odd_even_lhs(n, ring, xcap, ycap, k);
  const int kd = k / 2;        // floor
  const int ku = (k + 1) / 2;  // ceil
  // The numerator monomial carries the two weights of the smallest element
  // of T_{n,k}, the partition (0,...,0,1,2,...,k):
  // odd positions contribute k + (k-2) + ... = floor((k+1)^2/4) and even
  // positions contribute (k-1) + (k-3) + ... = floor(k^2/4).
  MultiPoly rhs =
      MultiPoly::monomial(ring, exps((k + 1) * (k + 1) / 4, k * k / 4));
  rhs = rhs * q::q_binomial(ring, n - ku, kd, exps(1, 1));
  for (int j = 0; j < ku; ++j)
    rhs = rhs * q::geom_inverse(ring, exps(1 + j, j));
  for (int j = 0; j < kd; ++j)
    rhs = rhs * q::geom_inverse(ring, exps(n - j, n - 1 - j));
  return compare("truncated-odd-even", {{"n", n}, {"k", k}},
                 {{"x", xcap}, {"y", ycap}}, lhs, rhs, start);
}

CheckReport check_box(int n, int j, int k) {
  const auto start = Clock::now();
  if (k < 0 || k > n) throw DomainError("box parameter k must satisfy 0 <= k <= n");
  if (j < 0) throw DomainError("box parameter j must be nonnegative");
  const Ring ring({"q"});
  Coeff count = 0;
  for_each_lhp_by_last_part(n, static_cast<long long>(j) * n + k,
                            [&](const LHPartition&) { ++count; });
  const Coeff expected = int_pow(j + 1, n - k) * int_pow(j + 2, k);
  return compare("box", {{"n", n}, {"j", j}, {"k", k}}, {},
                 MultiPoly::constant(ring, count),
                 MultiPoly::constant(ring, expected), start);
}

CheckReport check_snt(int n, int t) {
  const auto start = Clock::now();
  const Ring ring({"a"});
  Coeff count = 0;
  for_each_coset_rep(n, (2LL * t + 1) * (n + 1),
                     [&](const CosetRep&) { ++count; });
  return compare("snt", {{"n", n}, {"t", t}}, {}, MultiPoly::constant(ring, count),
                 MultiPoly::constant(ring, int_pow(2LL * t + 1, n)), start);
}

CheckReport check_snt_ab(int n, int t) {
  const auto start = Clock::now();
  const Ring ring({"a", "b"});
  MultiPoly lhs(ring);
  for_each_rep_stats(n, (2LL * t + 1) * (n + 1),
                     [&](const CosetRep&, const WindowStats& st) {
                       lhs.add_term(exps(static_cast<int>(st.alpha),
                                         static_cast<int>(st.beta)),
                                    1);
                     });
  // (1 + b - a^t b^{t+1} (1+a)) / (1 - ab), raised to the n-th power.
  MultiPoly numerator = MultiPoly::constant(ring, 1);
  numerator.add_term(exps(0, 1), 1);
  numerator.add_term(exps(t, t + 1), -1);
  numerator.add_term(exps(t + 1, t + 1), -1);
  MultiPoly denominator = MultiPoly::constant(ring, 1);
  denominator.add_term(exps(1, 1), -1);
  const MultiPoly rhs = q::exact_div(numerator, denominator).pow(n);
  CheckReport report =
      compare("snt-ab", {{"n", n}, {"t", t}}, {}, lhs, rhs, start);
  if (report.equal) {
    // a = b specialization must collapse to [2t+1]_a^n.
    const Ring aring({"a"});
    const MultiPoly specialized = q::merge_var(lhs, 1, 0, aring);
    const MultiPoly bracket = q::q_bracket(aring, 2 * t + 1, exps(1)).pow(n);
    if (!(specialized == bracket))
      return compare("snt-ab", {{"n", n}, {"t", t}}, {}, specialized, bracket, start);
  }
  return report;
}

CheckReport check_ehrhart(int n, int qcap) {
  const auto start = Clock::now();
  const Ring ring({"u", "q"}, {kUncapped, qcap, 0});
  MultiPoly window_side(ring);
  for_each_rep_stats(n, window_bound_for_weight(n, qcap),
                     [&](const CosetRep&, const WindowStats& st) {
                       window_side.add_term(exps(static_cast<int>(st.beta),
                                                 static_cast<int>(st.inv_tilde)),
                                            1);
                     });
  MultiPoly denominator = MultiPoly::constant(ring, 1);
  for (int i = 0; i < n; ++i) {
    MultiPoly factor = MultiPoly::constant(ring, 1);
    factor.add_term(exps(n - i, static_cast<int>(suffix_even_sum(n, i))), -1);
    denominator = denominator * factor;
  }
  const MultiPoly lhs = window_side * denominator;
  MultiPoly rhs(ring);
  for_each_signed_permutation(n, [&](const SignedPermutation& sigma) {
    rhs.add_term(exps(static_cast<int>(comaj(sigma)), static_cast<int>(lhp_c(sigma))), 1);
  });
  return compare("ehrhart", {{"n", n}}, {{"q", qcap}}, lhs, rhs, start);
}

CheckReport check_comaj_lhp(int n) {
  const auto start = Clock::now();
  const Ring ring({"u", "q"});
  MultiPoly dist(ring);
  for_each_signed_permutation(n, [&](const SignedPermutation& sigma) {
    dist.add_term(exps(static_cast<int>(comaj(sigma)), static_cast<int>(lhp_c(sigma))), 1);
  });
  // Cross-multiplied: dist * prod(1 - u q^{n+i}) vs
  // prod(1 + u q^i) * prod(1 - u^{n-i} q^{2(i+1)+...+2n}); all exact polynomials.
  MultiPoly lhs = dist;
  for (int i = 1; i <= n; ++i) lhs = lhs * q::one_plus(ring, exps(1, n + i), -1);
  MultiPoly rhs = MultiPoly::constant(ring, 1);
  for (int i = 1; i <= n; ++i) rhs = rhs * q::one_plus(ring, exps(1, i));
  for (int i = 0; i < n; ++i)
    rhs = rhs * q::one_plus(ring, exps(n - i, static_cast<int>(suffix_even_sum(n, i))), -1);
  return compare("comaj-lhp", {{"n", n}}, {}, lhs, rhs, start);
}

CheckReport check_quadlhp(int n) {
  const auto start = Clock::now();
  const Ring ring({"q"});
  MultiPoly lhs(ring);
  for_each_signed_permutation(n, [&](const SignedPermutation& sigma) {
    lhs.add_term(exps(static_cast<int>(lhp_c(sigma))), 1);
  });
  MultiPoly rhs = MultiPoly::constant(ring, 1);
  for (int k = 1; k <= n; ++k)
    rhs = rhs * q::q_bracket(ring, 2 * k, exps(2 * (n - k) + 1));
  return compare("quadlhp", {{"n", n}}, {}, lhs, rhs, start);
}

CheckReport check_comaj_product(int n) {
  const auto start = Clock::now();
  const Ring ring({"u"});
  MultiPoly lhs(ring);
  for_each_signed_permutation(n, [&](const SignedPermutation& sigma) {
    lhs.add_term(exps(static_cast<int>(comaj(sigma))), 1);
  });
  MultiPoly rhs = q::one_plus(ring, exps(1)).pow(n);
  for (int i = 1; i <= n; ++i) rhs = rhs * q::q_bracket(ring, i, exps(1));
  return compare("comaj", {{"n", n}}, {}, lhs, rhs, start);
}

CheckReport check_typeA_lhp(int n) {
  const auto start = Clock::now();
  const Ring ring({"q"});
  MultiPoly lhs(ring);
  for_each_permutation(n, [&](const Permutation& pi) {
    lhs.add_term(exps(static_cast<int>(lhp_a(pi))), 1);
  });
  MultiPoly rhs = MultiPoly::constant(ring, 1);
  for (int k = 1; k <= n; ++k)
    rhs = rhs * q::q_bracket(ring, k, exps(2 * (n - k) + 1));
  return compare("typea-lhp", {{"n", n}}, {}, lhs, rhs, start);
}

namespace {

long long need(const std::map<std::string, long long>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw ParseError("missing parameter --" + key);
  return it->second;
}

long long get_or(const std::map<std::string, long long>& params,
                 const std::string& key, long long fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

}  // namespace

CheckReport run_check(const std::string& id,
                      const std::map<std::string, long long>& params) {
  const int n = static_cast<int>(need(params, "n"));
  if (id == "lht") return check_lht(n, static_cast<int>(get_or(params, "qcap", 24)));
  if (id == "bott") return check_bott_refined(n, static_cast<int>(get_or(params, "qcap", 12)));
  if (id == "refined") return check_refined_uv(n, static_cast<int>(get_or(params, "qcap", 12)));
  if (id == "truncated-bott")
    return check_truncated_bott(n, static_cast<int>(need(params, "k")),
                                static_cast<int>(get_or(params, "qcap", 12)));
  if (id == "truncated-bott-sum")
    return check_truncated_bott_sum(n, static_cast<int>(get_or(params, "qcap", 12)));
  if (id == "odd-even")
    return check_odd_even(n, static_cast<int>(get_or(params, "xcap", 10)),
                          static_cast<int>(get_or(params, "ycap", 10)));
  if (id == "truncated-odd-even")
    return check_truncated_odd_even(n, static_cast<int>(need(params, "k")),
                                    static_cast<int>(get_or(params, "xcap", 10)),
                                    static_cast<int>(get_or(params, "ycap", 10)));
  if (id == "box")
    return check_box(n, static_cast<int>(need(params, "j")),
                     static_cast<int>(need(params, "k")));
  if (id == "snt") return check_snt(n, static_cast<int>(need(params, "t")));
  if (id == "snt-ab") return check_snt_ab(n, static_cast<int>(need(params, "t")));
  if (id == "ehrhart")
    return check_ehrhart(n, static_cast<int>(get_or(params, "qcap",
                                                    2LL * n * n + 2 * n)));
  if (id == "comaj-lhp") return check_comaj_lhp(n);
  if (id == "quadlhp") return check_quadlhp(n);
  if (id == "comaj") return check_comaj_product(n);
  if (id == "typea-lhp") return check_typeA_lhp(n);
  throw ParseError("unknown identity id: " + id);
}

std::vector<std::string> known_checks() {
  return {"lht",      "bott",    "refined",  "truncated-bott", "truncated-bott-sum",
          "odd-even", "truncated-odd-even",  "box",            "snt",
          "snt-ab",   "ehrhart", "comaj-lhp", "quadlhp",       "comaj",
          "typea-lhp"};
}

}  // namespace hallway::identities
