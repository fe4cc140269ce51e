#include "hallway/perms.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace hallway {

namespace {

void require_permutation(const std::vector<int>& values) {
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1)
      throw DomainError("not a permutation of 1..n: " + format_values(values));
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  require_permutation(values_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

SignedPermutation::SignedPermutation(std::vector<int> values)
    : values_(std::move(values)) {
  std::vector<int> mags;
  mags.reserve(values_.size());
  for (int v : values_) {
    if (v == 0) throw DomainError("signed permutation entries must be nonzero");
    mags.push_back(v < 0 ? -v : v);
  }
  require_permutation(mags);
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return SignedPermutation(std::move(v));
}

Permutation SignedPermutation::abs() const {
  std::vector<int> mags;
  mags.reserve(values_.size());
  for (int v : values_) mags.push_back(v < 0 ? -v : v);
  return Permutation(std::move(mags));
}

long long inv(const Permutation& pi) {
  long long count = 0;
  const auto& v = pi.values();
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++count;
  return count;
}

std::vector<int> des_set(const Permutation& pi) {
  std::vector<int> des;
  for (int i = 1; i < pi.size(); ++i)
    if (pi.at(i) > pi.at(i + 1)) des.push_back(i);
  return des;
}

std::vector<int> des_set_signed(const SignedPermutation& sigma) {
  std::vector<int> des;
  if (sigma.size() > 0 && sigma.at(1) < 0) des.push_back(0);
  for (int i = 1; i < sigma.size(); ++i)
    if (sigma.at(i) > sigma.at(i + 1)) des.push_back(i);
  return des;
}

InvCParts inv_c_parts(const SignedPermutation& sigma) {
  InvCParts parts;
  const auto& v = sigma.values();
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) ++parts.neg;
    for (size_t j = 0; j < i; ++j) {
      if (v[j] > v[i]) ++parts.inv;
      if (v[j] + v[i] < 0) ++parts.nsp;
    }
  }
  return parts;
}

long long inv_c(const SignedPermutation& sigma) {
  return inv_c_parts(sigma).total();
}

long long comaj(const SignedPermutation& sigma) {
  long long total = 0;
  for (int i : des_set_signed(sigma)) total += sigma.size() - i;
  return total;
}

long long lhp_c(const SignedPermutation& sigma) {
  const long long n = sigma.size();
  long long total = -inv_c(sigma);
  // 2(i+1) + ... + 2n = n(n+1) - i(i+1)
  for (long long i : des_set_signed(sigma)) total += n * (n + 1) - i * (i + 1);
  return total;
}

long long lhp_a(const Permutation& pi) {
  const long long n = pi.size();
  long long total = -inv(pi);
  for (long long i : des_set(pi)) total += (n * (n + 1) - i * (i + 1)) / 2;
  return total;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  check_rank(n);
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

void for_each_signed_permutation(int n, const std::function<void(const SignedPermutation&)>& fn) {
  check_rank(n);
  // Iterate magnitude permutations and sign masks, collecting windows so the
  // emitted order is lexicographic on the signed values themselves.
  std::vector<std::vector<int>> windows;
  for_each_permutation(n, [&](const Permutation& pi) {
    const int masks = 1 << n;
    for (int mask = 0; mask < masks; ++mask) {
      std::vector<int> w(pi.values());
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) w[static_cast<size_t>(i)] = -w[static_cast<size_t>(i)];
      windows.push_back(std::move(w));
    }
  });
  std::sort(windows.begin(), windows.end());
  for (auto& w : windows) fn(SignedPermutation(std::move(w)));
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("expected bracketed list, got: " + text);
  std::vector<long long> out;
  const std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return out;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("bad integer '" + tok + "' in " + text);
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

namespace {
std::vector<int> narrow(const std::vector<long long>& in, const std::string& text) {
  std::vector<int> out;
  out.reserve(in.size());
  for (long long v : in) {
    if (v < -1'000'000 || v > 1'000'000)
      throw ParseError("entry out of range in " + text);
    out.push_back(static_cast<int>(v));
  }
  return out;
}
}  // namespace

Permutation parse_permutation(const std::string& text) {
  try {
    return Permutation(narrow(parse_int_list(text), text));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

SignedPermutation parse_signed_permutation(const std::string& text) {
  try {
    return SignedPermutation(narrow(parse_int_list(text), text));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

template <typename T>
static std::string format_impl(const std::vector<T>& values) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  os << ']';
  return os.str();
}

std::string format_values(const std::vector<int>& values) { return format_impl(values); }
std::string format_values(const std::vector<long long>& values) { return format_impl(values); }

}  // namespace hallway
