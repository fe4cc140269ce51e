#include "hallway/invseq.hpp"

#include <algorithm>
#include <numeric>

namespace hallway {

SSequence::SSequence(std::vector<long long> s) : s_(std::move(s)) {
  for (long long v : s_)
    if (v < 1) throw DomainError("s-sequence entries must be positive");
}

SSequence SSequence::natural(int n) {
  std::vector<long long> s(static_cast<size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  return SSequence(std::move(s));
}

SSequence SSequence::doubled(int n) {
  std::vector<long long> s(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<size_t>(i)] = 2 * (i + 1);
  return SSequence(std::move(s));
}

InversionSequence::InversionSequence(std::vector<long long> e, SSequence s)
    : e_(std::move(e)), s_(std::move(s)) {
  if (e_.size() != s_.values().size())
    throw DomainError("inversion sequence length differs from its context");
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] < 0 || e_[i] >= s_.values()[i])
      throw DomainError("inversion sequence entry out of range at position " +
                        std::to_string(i + 1));
}

long long InversionSequence::weight() const {
  long long w = 0;
  for (long long v : e_) w += v;
  return w;
}

std::vector<int> asc_set(const InversionSequence& e) {
  std::vector<int> asc;
  const int n = e.size();
  long long prev_e = 0, prev_s = 1;  // e_0 = 0, s_0 = 1
  for (int i = 1; i <= n; ++i) {
    if (prev_e * e.context().at(i) < e.at(i) * prev_s) asc.push_back(i - 1);
    prev_e = e.at(i);
    prev_s = e.context().at(i);
  }
  return asc;
}

long long amaj(const InversionSequence& e) {
  long long total = 0;
  for (int i : asc_set(e)) total += e.size() - i;
  return total;
}

long long lhp_stat(const InversionSequence& e) {
  long long total = -e.weight();
  std::vector<long long> suffix(static_cast<size_t>(e.size()) + 1, 0);
  for (int i = e.size(); i >= 1; --i)
    suffix[static_cast<size_t>(i) - 1] = suffix[static_cast<size_t>(i)] + e.context().at(i);
  for (int i : asc_set(e)) total += suffix[static_cast<size_t>(i)];
  return total;
}

InversionSequence theta(const Permutation& pi) {
  const int n = pi.size();
  std::vector<long long> e(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j)
      if (pi.at(j) > pi.at(i)) ++e[static_cast<size_t>(i) - 1];
  return InversionSequence(std::move(e), SSequence::natural(n));
}

Permutation theta_inverse(const InversionSequence& e) {
  const int n = e.size();
  if (!(e.context() == SSequence::natural(n)))
    throw DomainError("theta_inverse requires the context (1,2,...,n)");
  std::vector<int> remaining(static_cast<size_t>(n));
  std::iota(remaining.begin(), remaining.end(), 1);  // ascending
  std::vector<int> pi(static_cast<size_t>(n), 0);
  for (int i = n; i >= 1; --i) {
    // (e_i + 1)-th largest remaining value.
    const size_t idx = remaining.size() - 1 - static_cast<size_t>(e.at(i));
    pi[static_cast<size_t>(i) - 1] = remaining[idx];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(pi));
}

InversionSequence psi(const SignedPermutation& sigma) {
  const int n = sigma.size();
  const InversionSequence estar = theta(sigma.abs());
  std::vector<long long> e(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    e[static_cast<size_t>(i) - 1] =
        sigma.at(i) > 0 ? estar.at(i) : 2 * i - 1 - estar.at(i);
  return InversionSequence(std::move(e), SSequence::doubled(n));
}

SignedPermutation psi_inverse(const InversionSequence& e) {
  const int n = e.size();
  if (!(e.context() == SSequence::doubled(n)))
    throw DomainError("psi_inverse requires the context (2,4,...,2n)");
  std::vector<long long> estar(static_cast<size_t>(n));
  std::vector<bool> positive(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    positive[static_cast<size_t>(i) - 1] = e.at(i) <= i - 1;
    estar[static_cast<size_t>(i) - 1] =
        positive[static_cast<size_t>(i) - 1] ? e.at(i) : 2 * i - 1 - e.at(i);
  }
  const Permutation mags =
      theta_inverse(InversionSequence(std::move(estar), SSequence::natural(n)));
  std::vector<int> window(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    window[static_cast<size_t>(i) - 1] =
        positive[static_cast<size_t>(i) - 1] ? mags.at(i) : -mags.at(i);
  return SignedPermutation(std::move(window));
}

void for_each_inversion_sequence(const SSequence& s,
                                 const std::function<void(const InversionSequence&)>& fn) {
  check_rank(s.size());
  const int n = s.size();
  std::vector<long long> e(static_cast<size_t>(n), 0);
  while (true) {
    fn(InversionSequence(e, s));
    int i = n - 1;
    while (i >= 0 && e[static_cast<size_t>(i)] + 1 >= s.values()[static_cast<size_t>(i)]) {
      e[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++e[static_cast<size_t>(i)];
  }
}

}  // namespace hallway
