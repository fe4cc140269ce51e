#include "hallway/lecturehall.hpp"

#include <algorithm>

namespace hallway {

LHPartition::LHPartition(std::vector<long long> parts, SSequence s)
    : parts_(std::move(parts)), s_(std::move(s)) {
  if (parts_.size() != s_.values().size())
    throw DomainError("partition length differs from its context");
  if (!is_lhp(parts_, s_))
    throw DomainError("ratio chain violated: " + format_values(parts_) +
                      " is not an s-lecture hall partition");
}

long long LHPartition::weight() const {
  long long w = 0;
  for (long long v : parts_) w += v;
  return w;
}

bool is_lhp(const std::vector<long long>& parts, const SSequence& s) {
  if (parts.size() != s.values().size())
    throw DomainError("partition length differs from its context");
  if (!parts.empty() && parts.front() < 0) return false;
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] * s.values()[i + 1] > parts[i + 1] * s.values()[i]) return false;
  return true;
}

std::vector<long long> ceiling_vec(const LHPartition& lambda) {
  std::vector<long long> b(static_cast<size_t>(lambda.size()));
  for (int i = 1; i <= lambda.size(); ++i) {
    const long long s = lambda.context().at(i);
    b[static_cast<size_t>(i) - 1] = (lambda.at(i) + s - 1) / s;
  }
  return b;
}

InversionSequence excess(const LHPartition& lambda) {
  const std::vector<long long> b = ceiling_vec(lambda);
  std::vector<long long> e(static_cast<size_t>(lambda.size()));
  for (int i = 1; i <= lambda.size(); ++i)
    e[static_cast<size_t>(i) - 1] =
        lambda.context().at(i) * b[static_cast<size_t>(i) - 1] - lambda.at(i);
  return InversionSequence(std::move(e), lambda.context());
}

LHPartition pair_to_lhp(const std::vector<long long>& b, const InversionSequence& e) {
  const int n = e.size();
  if (static_cast<int>(b.size()) != n)
    throw DomainError("ceiling vector length differs from excess length");
  // T_n^(s) membership, with b_0 = 0.
  const std::vector<int> asc = asc_set(e);
  long long prev = 0;
  for (int i = 0; i < n; ++i) {
    const long long next = b[static_cast<size_t>(i)];
    const bool must_rise = std::binary_search(asc.begin(), asc.end(), i);
    if (next < prev || (must_rise && next <= prev))
      throw DomainError("(b,e) pair leaves T_n^(s) at index " + std::to_string(i));
    prev = next;
  }
  std::vector<long long> parts(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    parts[static_cast<size_t>(i) - 1] =
        e.context().at(i) * b[static_cast<size_t>(i) - 1] - e.at(i);
  return LHPartition(std::move(parts), e.context());
}

CeilingExcessPair lhp_to_pair(const LHPartition& lambda) {
  return CeilingExcessPair{ceiling_vec(lambda), excess(lambda)};
}

std::pair<long long, long long> odd_even_weights(const LHPartition& lambda) {
  long long odd = 0, even = 0;
  for (int i = lambda.size(); i >= 1; i -= 2) odd += lambda.at(i);
  for (int i = lambda.size() - 1; i >= 1; i -= 2) even += lambda.at(i);
  return {odd, even};
}

bool is_truncated(const LHPartition& lambda, int k) {
  const int n = lambda.size();
  if (!(lambda.context() == SSequence::natural(n)))
    throw DomainError("truncation is defined on L_n with context (1,...,n)");
  if (k < 0 || k > n) throw DomainError("truncation index out of range");
  for (int i = 1; i <= n - k; ++i)
    if (lambda.at(i) != 0) return false;
  return k == 0 || lambda.at(n - k + 1) > 0;
}

namespace {

// Fills parts from index i (1-based) downward; parts above i are fixed.
// ratio_cap is floor(lambda_{i+1} * s_i / s_{i+1}) or the global bound at i=n.
void descend(const SSequence& s, int i, long long ratio_cap, long long budget,
             std::vector<long long>& parts,
             const std::function<void(const LHPartition&)>& fn) {
  if (i == 0) {
    fn(LHPartition(parts, s));
    return;
  }
  const long long hi = std::min(ratio_cap, budget);
  for (long long v = 0; v <= hi; ++v) {
    parts[static_cast<size_t>(i) - 1] = v;
    const long long next_cap =
        i > 1 ? (v * s.at(i - 1)) / s.at(i) : 0;
    descend(s, i - 1, next_cap, budget - v, parts, fn);
  }
}

}  // namespace

void for_each_lhp_by_weight(const SSequence& s, long long bound,
                            const std::function<void(const LHPartition&)>& fn) {
  check_rank(s.size());
  if (bound < 0) throw DomainError("weight bound must be nonnegative");
  const int n = s.size();
  std::vector<long long> parts(static_cast<size_t>(n), 0);
  if (n == 0) {
    fn(LHPartition(parts, s));
    return;
  }
  descend(s, n, bound, bound, parts, fn);
}

void for_each_lhp_by_last_part(int n, long long last_part_bound,
                               const std::function<void(const LHPartition&)>& fn) {
  check_rank(n);
  if (last_part_bound < 0) throw DomainError("last-part bound must be nonnegative");
  const SSequence s = SSequence::natural(n);
  std::vector<long long> parts(static_cast<size_t>(n), 0);
  if (n == 0) {
    fn(LHPartition(parts, s));
    return;
  }
  // No weight budget here; the ratio chain bounds everything once lambda_n is fixed.
  const long long budget = last_part_bound * n;
  descend(s, n, last_part_bound, budget, parts, fn);
}

}  // namespace hallway
