#include "hallway/qseries.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace hallway::q {

namespace {

Exps add_exps(const Exps& a, const Exps& b) {
  return Exps{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

bool dominates(const Exps& a, const Exps& b) {
  return a[0] >= b[0] && a[1] >= b[1] && a[2] >= b[2];
}

}  // namespace

Ring::Ring(std::vector<std::string> names, std::array<int, kMaxVars> degree_caps)
    : vars(std::move(names)), caps(degree_caps) {
  if (vars.empty() || vars.size() > kMaxVars)
    throw DomainError("a ring carries between one and three variables");
  for (size_t i = vars.size(); i < kMaxVars; ++i) caps[i] = 0;
}

Ring Ring::uncapped() const {
  Ring r = *this;
  for (size_t i = 0; i < vars.size(); ++i) r.caps[i] = kUncapped;
  return r;
}

MultiPoly::MultiPoly(Ring ring) : ring_(std::move(ring)) {}

MultiPoly MultiPoly::constant(const Ring& ring, const Coeff& c) {
  MultiPoly p(ring);
  p.add_term(exps(0), c);
  return p;
}

MultiPoly MultiPoly::monomial(const Ring& ring, const Exps& e, const Coeff& c) {
  MultiPoly p(ring);
  p.add_term(e, c);
  return p;
}

Coeff MultiPoly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Coeff(0) : it->second;
}

void MultiPoly::add_term(const Exps& e, const Coeff& c) {
  if (c == 0) return;
  for (int i = ring_.num_vars(); i < kMaxVars; ++i)
    if (e[static_cast<size_t>(i)] != 0)
      throw DomainError("exponent on a variable outside the ring");
  if (e[0] < 0 || e[1] < 0 || e[2] < 0)
    throw DomainError("negative exponent");
  if (!ring_.within_caps(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (!(ring_ == other.ring_)) throw DomainError("ring mismatch in addition");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (!(ring_ == other.ring_)) throw DomainError("ring mismatch in subtraction");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.ring_ == b.ring_)) throw DomainError("ring mismatch in multiplication");
  MultiPoly out(a.ring_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const Exps e = add_exps(ea, eb);
      if (!a.ring_.within_caps(e)) continue;
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Coeff& c) const {
  MultiPoly out(ring_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

MultiPoly MultiPoly::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative power");
  MultiPoly acc = constant(ring_, 1);
  MultiPoly base = *this;
  int k = exponent;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

MultiPoly MultiPoly::truncated_to(const Ring& target) const {
  if (target.vars != ring_.vars)
    throw DomainError("truncated_to requires identical variable names");
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Coeff mag = c < 0 ? Coeff(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::ostringstream mono;
    bool any_var = false;
    for (int i = 0; i < ring_.num_vars(); ++i) {
      const int d = e[static_cast<size_t>(i)];
      if (d == 0) continue;
      if (any_var) mono << "*";
      mono << ring_.vars[static_cast<size_t>(i)];
      if (d > 1) mono << "^" << d;
      any_var = true;
    }
    if (!any_var) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << "*";
      os << mono.str();
    }
  }
  return os.str();
}

nlohmann::json MultiPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::json ev = nlohmann::json::array();
    for (int i = 0; i < ring_.num_vars(); ++i) ev.push_back(e[static_cast<size_t>(i)]);
    terms.push_back({{"exps", ev}, {"coef", c.str()}});
  }
  return {{"vars", ring_.vars}, {"terms", terms}};
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  return ring_.vars == other.ring_.vars && terms_ == other.terms_;
}

MultiPoly geom_inverse(const Ring& ring, const Exps& m) {
  if (m[0] + m[1] + m[2] <= 0)
    throw DomainError("geometric inverse needs a monomial of positive degree");
  bool terminates = false;
  for (size_t i = 0; i < kMaxVars; ++i)
    if (m[i] > 0 && ring.caps[i] != kUncapped) terminates = true;
  if (!terminates)
    throw ResourceError("1/(1-m) does not terminate: no capped variable in m");
  MultiPoly out(ring);
  Exps e = exps(0);
  while (ring.within_caps(e)) {
    out.add_term(e, 1);
    e = add_exps(e, m);
  }
  return out;
}

MultiPoly one_plus(const Ring& ring, const Exps& m, int sign) {
  MultiPoly p = MultiPoly::constant(ring, 1);
  p.add_term(m, sign);
  return p;
}

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d) {
  if (!(p.ring().vars == d.ring().vars)) throw DomainError("ring mismatch in division");
  if (d.is_zero()) throw DomainError("division by zero polynomial");
  const Ring work = p.ring().uncapped();
  MultiPoly rem = p.truncated_to(work);
  MultiPoly quot(work);
  const auto& dlead = *d.terms().rbegin();  // graded-lex leading term
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    if (!dominates(rlead.first, dlead.first) || rlead.second % dlead.second != 0)
      throw DomainError("not divisible");
    const Exps e = Exps{rlead.first[0] - dlead.first[0], rlead.first[1] - dlead.first[1],
                        rlead.first[2] - dlead.first[2]};
    const Coeff c = rlead.second / dlead.second;
    quot.add_term(e, c);
    const MultiPoly piece = MultiPoly::monomial(work, e, c) * d.truncated_to(work);
    rem -= piece;
  }
  return quot.truncated_to(p.ring());
}

MultiPoly q_bracket(const Ring& ring, int k, const Exps& qm) {
  if (k < 0) throw DomainError("q-bracket of a negative integer");
  MultiPoly out(ring);
  Exps e = exps(0);
  for (int i = 0; i < k; ++i) {
    out.add_term(e, 1);
    e = add_exps(e, qm);
  }
  return out;
}

MultiPoly q_factorial(const Ring& ring, int k, const Exps& qm) {
  MultiPoly out = MultiPoly::constant(ring, 1);
  for (int i = 1; i <= k; ++i) out = out * q_bracket(ring, i, qm);
  return out;
}

MultiPoly q_binomial(const Ring& ring, int n, int k, const Exps& qm) {
  if (k < 0 || k > n) return MultiPoly(ring);  // zero by convention
  const Ring work = ring.uncapped();
  const MultiPoly num = q_factorial(work, n, qm);
  const MultiPoly den = q_factorial(work, k, qm) * q_factorial(work, n - k, qm);
  return exact_div(num, den).truncated_to(ring);
}

MultiPoly pochhammer(const Ring& ring, const Coeff& acoef, const Exps& am,
                     const Exps& qm, int count) {
  if (count < 0) throw DomainError("pochhammer of negative length");
  MultiPoly out = MultiPoly::constant(ring, 1);
  Exps e = am;
  for (int j = 0; j < count; ++j) {
    MultiPoly factor = MultiPoly::constant(ring, 1);
    factor.add_term(e, -acoef);
    out = out * factor;
    e = add_exps(e, qm);
  }
  return out;
}

MultiPoly falling_pochhammer(const Ring& ring, const Exps& am, const Exps& step,
                             int count) {
  if (count < 0) throw DomainError("pochhammer of negative length");
  MultiPoly out = MultiPoly::constant(ring, 1);
  for (int j = 0; j < count; ++j) {
    const Exps e =
        Exps{am[0] - j * step[0], am[1] - j * step[1], am[2] - j * step[2]};
    if (e[0] < 0 || e[1] < 0 || e[2] < 0)
      throw DomainError("falling pochhammer would create a negative exponent");
    MultiPoly factor = MultiPoly::constant(ring, 1);
    factor.add_term(e, -1);
    out = out * factor;
  }
  return out;
}

MultiPoly merge_var(const MultiPoly& p, int from, int to, const Ring& target) {
  MultiPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    Exps m = e;
    m[static_cast<size_t>(to)] += m[static_cast<size_t>(from)];
    m[static_cast<size_t>(from)] = 0;
    // Compact exponents onto the target's variable slots.
    Exps packed = exps(0);
    int slot = 0;
    for (int i = 0; i < p.ring().num_vars(); ++i) {
      if (i == from) continue;
      packed[static_cast<size_t>(slot++)] = m[static_cast<size_t>(i)];
    }
    out.add_term(packed, c);
  }
  return out;
}

MultiPoly set_var_to_one(const MultiPoly& p, int var, const Ring& target) {
  MultiPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    Exps packed = exps(0);
    int slot = 0;
    for (int i = 0; i < p.ring().num_vars(); ++i) {
      if (i == var) continue;
      packed[static_cast<size_t>(slot++)] = e[static_cast<size_t>(i)];
    }
    out.add_term(packed, c);
  }
  return out;
}

}  // namespace hallway::q
