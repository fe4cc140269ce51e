#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hallway/qseries.hpp"

namespace hallway::identities {

struct Mismatch {
  std::vector<int> exps;
  std::string lhs_coeff;
  std::string rhs_coeff;
};

struct CheckReport {
  std::string id;
  std::map<std::string, long long> params;
  std::map<std::string, long long> caps;
  bool equal = false;
  std::optional<Mismatch> mismatch;  // first graded-lex difference
  size_t lhs_terms = 0;
  size_t rhs_terms = 0;
  std::string lhs_str;
  std::string rhs_str;
  double wall_time_ms = 0.0;

  nlohmann::json to_json() const;
};

// Largest window entry any coset representative of rank n can have while its
// affine inversion number stays within weight_cap; every identity lhs
// enumeration derives its window bound from this.
long long window_bound_for_weight(int n, long long weight_cap);

// Lecture Hall Theorem: sum over L_n of q^{|lambda|} vs prod 1/(1-q^{2i-1}).
CheckReport check_lht(int n, int qcap);

// Refined Bott: sum q^{inv} a^alpha b^beta vs prod (1+bq^i)/(1-abq^{n+i}).
CheckReport check_bott_refined(int n, int qcap);

// sum q^{|lambda|} u^{|ceil|} v^{odd ceilings} vs prod (1+uvq^i)/(1-u^2 q^{n+i}),
// with the window-side and pair-side enumerations cross-checked against the
// lambda side.
CheckReport check_refined_uv(int n, int qcap);

// Truncated Bott over T_{n,k}.
CheckReport check_truncated_bott(int n, int k, int qcap);
// Partition cross-check: the k-sum of truncated sides equals the full side.
CheckReport check_truncated_bott_sum(int n, int qcap);

// Odd/even window weights, full and truncated to T_{n,k}.
CheckReport check_odd_even(int n, int xcap, int ycap);
CheckReport check_truncated_odd_even(int n, int k, int xcap, int ycap);

// Box counting: #{lambda in L_n : lambda_n <= jn+k} = (j+1)^(n-k) (j+2)^k.
CheckReport check_box(int n, int j, int k);

// |S_{n,t}| = (2t+1)^n, and the a,b distribution with its a=b specialization.
CheckReport check_snt(int n, int t);
CheckReport check_snt_ab(int n, int t);

// Parabolic Ehrhart relation in cross-multiplied, q-truncated form.
CheckReport check_ehrhart(int n, int qcap);
// Joint comaj/lhp_C distribution, exact cross-multiplied polynomials.
CheckReport check_comaj_lhp(int n);
// Quadratic statistic: sum q^{lhp_C} over C_n vs prod [2k] in base q^{2(n-k)+1}.
CheckReport check_quadlhp(int n);
// sum u^{comaj} over C_n vs (1+u)^n prod [i]_u.
CheckReport check_comaj_product(int n);
// Type-A analog: sum q^{lhp} over S_n vs prod [k] in base q^{2(n-k)+1}.
CheckReport check_typeA_lhp(int n);

// Name-based dispatch for the CLI; unknown ids or missing params throw
// ParseError.  Known ids: lht, bott, refined, truncated-bott,
// truncated-bott-sum, odd-even, truncated-odd-even, box, snt, snt-ab,
// ehrhart, comaj-lhp, quadlhp, comaj, typea-lhp.
CheckReport run_check(const std::string& id,
                      const std::map<std::string, long long>& params);
std::vector<std::string> known_checks();

}  // namespace hallway::identities
