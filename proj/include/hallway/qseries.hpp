#pragma once

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json_fwd.hpp>

#include "hallway/common.hpp"

namespace hallway::q {

using Coeff = boost::multiprecision::cpp_int;

inline constexpr int kMaxVars = 3;
inline constexpr int kUncapped = std::numeric_limits<int>::max();

// Exponent vector over at most three variables; unused slots stay zero.
using Exps = std::array<int, kMaxVars>;

inline Exps exps(int a, int b = 0, int c = 0) { return Exps{a, b, c}; }

// Variable list plus per-variable truncation caps.  kUncapped means exact
// polynomial mode in that variable.
struct Ring {
  std::vector<std::string> vars;
  std::array<int, kMaxVars> caps{kUncapped, kUncapped, kUncapped};

  Ring(std::vector<std::string> names,
       std::array<int, kMaxVars> degree_caps = {kUncapped, kUncapped, kUncapped});

  int num_vars() const { return static_cast<int>(vars.size()); }
  bool within_caps(const Exps& e) const {
    return e[0] <= caps[0] && e[1] <= caps[1] && e[2] <= caps[2];
  }
  Ring uncapped() const;

  bool operator==(const Ring&) const = default;
};

// Graded lexicographic order on exponent vectors.
struct GradedLex {
  bool operator()(const Exps& a, const Exps& b) const {
    const int da = a[0] + a[1] + a[2];
    const int db = b[0] + b[1] + b[2];
    if (da != db) return da < db;
    return a < b;
  }
};

// Sparse polynomial / truncated series with big-integer coefficients.
// Stored zero coefficients are never kept; terms beyond the ring caps are
// discarded on entry, so arithmetic acts in the truncation quotient.
class MultiPoly {
 public:
  explicit MultiPoly(Ring ring);
  static MultiPoly constant(const Ring& ring, const Coeff& c);
  static MultiPoly monomial(const Ring& ring, const Exps& e, const Coeff& c = 1);

  const Ring& ring() const { return ring_; }
  const std::map<Exps, Coeff, GradedLex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  Coeff coeff(const Exps& e) const;

  void add_term(const Exps& e, const Coeff& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  MultiPoly scaled(const Coeff& c) const;
  MultiPoly pow(int exponent) const;

  // Reinterprets the terms in another ring over the same variable names,
  // discarding anything beyond the new caps.
  MultiPoly truncated_to(const Ring& target) const;

  // Canonical form: terms in ascending graded-lex order, e.g.
  // "1 + q + 2*q^2 + a*b*q^4".
  std::string str() const;
  nlohmann::json to_json() const;

  bool operator==(const MultiPoly& other) const;

 private:
  Ring ring_;
  std::map<Exps, Coeff, GradedLex> terms_;
};

// Truncated expansion of 1/(1 - m) for a monomial m of positive total degree.
// Some variable appearing in m must be capped, otherwise the series would
// never terminate.
MultiPoly geom_inverse(const Ring& ring, const Exps& m);

// 1 + sign*m, as a convenience for product formulas.
MultiPoly one_plus(const Ring& ring, const Exps& m, int sign = 1);

// Exact polynomial quotient under graded-lex leading terms; throws
// DomainError("not divisible") on a nonzero remainder.
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d);

// q-analogs over an arbitrary monomial base qm (so [2k] in base q^{2(n-k)+1}
// is directly expressible).
MultiPoly q_bracket(const Ring& ring, int k, const Exps& qm);
MultiPoly q_factorial(const Ring& ring, int k, const Exps& qm);
MultiPoly q_binomial(const Ring& ring, int n, int k, const Exps& qm);

// (a; q)_count with a = acoef * am: product of (1 - acoef*am*qm^j).
MultiPoly pochhammer(const Ring& ring, const Coeff& acoef, const Exps& am,
                     const Exps& qm, int count);

// Product of (1 - am * step^{-j}) for j = 0..count-1; the exponents of am
// must dominate (count-1)*step so every factor stays polynomial.
MultiPoly falling_pochhammer(const Ring& ring, const Exps& am, const Exps& step,
                             int count);

// Exponent remap helpers used by specialization cross-checks.
// merge_var adds the exponent of variable `from` onto `to` (e.g. a = b).
MultiPoly merge_var(const MultiPoly& p, int from, int to, const Ring& target);
// set_var_to_one drops a variable (evaluates it at 1).
MultiPoly set_var_to_one(const MultiPoly& p, int var, const Ring& target);

}  // namespace hallway::q
