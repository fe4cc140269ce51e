#include "hallway/affine.hpp"

#include <algorithm>
#include <cstring>

#include "hallway/invseq.hpp"

namespace hallway {

namespace {

std::string window_key(const std::vector<long long>& w) {
  std::string key(w.size() * sizeof(long long), '\0');
  if (!w.empty()) std::memcpy(key.data(), w.data(), key.size());
  return key;
}

}  // namespace

AffineElement::AffineElement(std::vector<long long> window)
    : window_(std::move(window)) {
  const long long N = 2LL * static_cast<long long>(window_.size()) + 2;
  std::vector<long long> classes;
  classes.reserve(window_.size());
  for (long long w : window_) {
    const long long r = ((w % N) + N) % N;
    if (r == 0 || r == N / 2)
      throw DomainError("window residue " + std::to_string(r) +
                        " mod " + std::to_string(N) + " is forbidden");
    classes.push_back(std::min(r, N - r));
  }
  std::sort(classes.begin(), classes.end());
  if (std::adjacent_find(classes.begin(), classes.end()) != classes.end())
    throw DomainError("window values +-w_i are not distinct mod " + std::to_string(N));
}

AffineElement AffineElement::identity(int n) {
  std::vector<long long> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
  return AffineElement(std::move(w));
}

CosetRep::CosetRep(std::vector<long long> window) : element_(std::move(window)) {
  const auto& w = element_.window();
  long long prev = 0;
  for (long long v : w) {
    if (v <= prev)
      throw DomainError("coset representative window must be strictly increasing "
                        "and positive: " + format_values(w));
    prev = v;
  }
}

CosetRep CosetRep::identity(int n) {
  return CosetRep(AffineElement::identity(n).window());
}

Decomposition decompose(const CosetRep& w) {
  const int n = w.rank();
  const long long N = w.period();
  std::vector<long long> c(static_cast<size_t>(n));
  std::vector<int> sigma(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const long long r = ((w.at(i) % N) + N) % N;
    const long long s = r <= n ? r : r - N;  // representative in {-n..-1, 1..n}
    sigma[static_cast<size_t>(i) - 1] = static_cast<int>(s);
    c[static_cast<size_t>(i) - 1] = (w.at(i) - s) / N;
  }
  return Decomposition{std::move(c), SignedPermutation(std::move(sigma))};
}

CosetRep compose(const std::vector<long long>& c, const SignedPermutation& sigma) {
  const int n = sigma.size();
  if (static_cast<int>(c.size()) != n)
    throw DomainError("c vector length differs from the signed permutation rank");
  const long long N = 2LL * n + 2;
  const std::vector<int> des = des_set_signed(sigma);
  long long prev = 0;  // c_0 = 0
  for (int i = 0; i < n; ++i) {
    const long long next = c[static_cast<size_t>(i)];
    const bool strict = std::binary_search(des.begin(), des.end(), i);
    if (next < prev || (strict && next <= prev))
      throw DomainError("(c,sigma) pair leaves U_n at index " + std::to_string(i));
    prev = next;
  }
  std::vector<long long> window(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    window[static_cast<size_t>(i) - 1] = c[static_cast<size_t>(i) - 1] * N + sigma.at(i);
  return CosetRep(std::move(window));
}

ClassInvVector class_inv(const CosetRep& w) {
  const int n = w.rank();
  const long long N = w.period();
  ClassInvVector out;
  out.I.resize(static_cast<size_t>(n));
  out.I_ij.resize(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto& row = out.I_ij[static_cast<size_t>(i) - 1];
    row.resize(static_cast<size_t>(i));
    long long sum = 0;
    for (int j = 1; j <= i; ++j) {
      // Both numerators are nonnegative for j <= i, so plain division floors.
      const long long v = (w.at(i) - w.at(j)) / N + (w.at(i) + w.at(j)) / N;
      row[static_cast<size_t>(j) - 1] = v;
      sum += v;
    }
    out.I[static_cast<size_t>(i) - 1] = sum;
    out.total += sum;
  }
  return out;
}

LHPartition to_lhp(const CosetRep& w) {
  const int n = w.rank();
  const Decomposition dec = decompose(w);
  const InversionSequence e = psi(dec.sigma);
  std::vector<long long> parts(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    parts[static_cast<size_t>(i) - 1] = 2LL * i * dec.c[static_cast<size_t>(i) - 1] - e.at(i);
  return LHPartition(std::move(parts), SSequence::natural(n));
}

CosetRep from_lhp(const LHPartition& lambda) {
  const int n = lambda.size();
  // L_n and L_n^(2,4,...,2n) coincide as sets of part sequences; the inverse
  // runs through the doubled context where (ceiling, excess) = (c, e).
  const LHPartition doubled(lambda.parts(), SSequence::doubled(n));
  const CeilingExcessPair pair = lhp_to_pair(doubled);
  const SignedPermutation sigma = psi_inverse(pair.e);
  return compose(pair.b, sigma);
}

WindowStats stats(const CosetRep& w) {
  const int n = w.rank();
  WindowStats st;
  const Decomposition dec = decompose(w);
  const ClassInvVector inv = class_inv(w);
  st.inv_tilde = inv.total;
  for (int v : dec.sigma.values())
    if (v < 0) ++st.neg;
  for (long long c : dec.c) st.beta += c;
  st.alpha = st.beta - st.neg;
  st.last = n > 0 ? dec.c.back() : 0;
  st.max = n > 0 ? w.at(n) - w.at(n) / (n + 1) - n : 0;
  for (int i = n; i >= 1; i -= 2) st.odd_inv += inv.I[static_cast<size_t>(i) - 1];
  for (int i = n - 1; i >= 1; i -= 2) st.even_inv += inv.I[static_cast<size_t>(i) - 1];
  return st;
}

bool in_tnk(const CosetRep& w, int k) {
  const int n = w.rank();
  if (k < 0 || k > n) throw DomainError("truncation index out of range");
  if (n - k >= 1 && w.at(n - k) > n) return false;
  if (k >= 1 && w.at(n - k + 1) <= n) return false;
  return true;
}

bool in_snt(const CosetRep& w, long long t) {
  const int n = w.rank();
  if (t < 0) throw DomainError("t must be nonnegative");
  return n == 0 || w.at(n) <= (2 * t + 1) * (n + 1);
}

namespace {

void extend_c(const SignedPermutation& sigma, const std::vector<int>& des,
              long long N, long long max_wn, int i, long long prev,
              std::vector<long long>& c, std::vector<std::vector<long long>>& out) {
  const int n = sigma.size();
  if (i > n) {
    std::vector<long long> window(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j)
      window[static_cast<size_t>(j) - 1] = c[static_cast<size_t>(j) - 1] * N + sigma.at(j);
    out.push_back(std::move(window));
    return;
  }
  const bool strict = std::binary_search(des.begin(), des.end(), i - 1);
  const long long lo = prev + (strict ? 1 : 0);
  const long long hi = (max_wn - sigma.at(i)) / N;  // w_i <= w_n <= max_wn
  for (long long v = lo; v <= hi; ++v) {
    c[static_cast<size_t>(i) - 1] = v;
    extend_c(sigma, des, N, max_wn, i + 1, v, c, out);
  }
}

}  // namespace

void for_each_coset_rep(int n, long long max_wn,
                        const std::function<void(const CosetRep&)>& fn) {
  check_rank(n);
  if (n == 0) {
    fn(CosetRep::identity(0));
    return;
  }
  if (max_wn < n) throw DomainError("max_wn must be at least n");
  const long long N = 2LL * n + 2;
  std::vector<std::vector<long long>> windows;
  for_each_signed_permutation(n, [&](const SignedPermutation& sigma) {
    const std::vector<int> des = des_set_signed(sigma);
    std::vector<long long> c(static_cast<size_t>(n), 0);
    extend_c(sigma, des, N, max_wn, 1, 0, c, windows);
  });
  std::sort(windows.begin(), windows.end());
  for (auto& w : windows) fn(CosetRep(std::move(w)));
}

AffineElement gen_apply(const AffineElement& g, int i) {
  const int n = g.rank();
  if (n == 0 || i < 0 || i > n)
    throw DomainError("generator index out of range");
  std::vector<long long> w = g.window();
  if (i == 0) {
    w[0] = -w[0];
  } else if (i < n) {
    std::swap(w[static_cast<size_t>(i) - 1], w[static_cast<size_t>(i)]);
  } else {
    w[static_cast<size_t>(n) - 1] = g.period() - w[static_cast<size_t>(n) - 1];
  }
  return AffineElement(std::move(w));
}

CosetRep normal_form(const AffineElement& g) {
  std::vector<long long> w = g.window();
  for (long long& v : w) v = v < 0 ? -v : v;
  std::sort(w.begin(), w.end());
  return CosetRep(std::move(w));
}

LengthOracle::LengthOracle(int n, int depth_cap, std::size_t node_cap)
    : n_(n), depth_cap_(depth_cap), node_cap_(node_cap) {
  if (n < 1) throw DomainError("length oracle needs rank at least 1");
  State root;
  root.window = AffineElement::identity(n).window();
  seen_.emplace(window_key(root.window), 0);
  coset_hit_.emplace(window_key(normal_form(AffineElement(root.window)).window()), 0);
  states_.push_back(std::move(root));
}

bool LengthOracle::expand_next_level() {
  if (depth_ >= depth_cap_ || states_.size() >= node_cap_) return false;
  const std::size_t begin = level_begin_;
  const std::size_t end = states_.size();
  if (begin == end) return false;
  for (std::size_t idx = begin; idx < end; ++idx) {
    for (int g = 0; g <= n_; ++g) {
      const AffineElement next = gen_apply(AffineElement(states_[idx].window), g);
      std::string key = window_key(next.window());
      if (seen_.contains(key)) continue;
      if (states_.size() >= node_cap_) return false;
      seen_.emplace(std::move(key), states_.size());
      std::string coset = window_key(normal_form(next).window());
      coset_hit_.try_emplace(std::move(coset), states_.size());
      states_.push_back(State{next.window(), static_cast<int>(idx), g});
    }
  }
  level_begin_ = end;
  ++depth_;
  return true;
}

std::optional<OracleResult> LengthOracle::find(const CosetRep& w) {
  if (w.rank() != n_) throw DomainError("rank mismatch in length oracle query");
  const std::string target = window_key(w.window());
  auto it = coset_hit_.find(target);
  while (it == coset_hit_.end()) {
    if (!expand_next_level()) return std::nullopt;
    it = coset_hit_.find(target);
  }
  OracleResult result;
  std::size_t idx = it->second;
  while (states_[idx].parent >= 0) {
    result.word.push_back(states_[idx].gen);
    idx = static_cast<std::size_t>(states_[idx].parent);
  }
  std::reverse(result.word.begin(), result.word.end());
  result.length = static_cast<int>(result.word.size());
  for (int g : result.word) {
    if (g == 0) ++result.s0_count;
    if (g == n_) ++result.sn_count;
  }
  return result;
}

}  // namespace hallway
