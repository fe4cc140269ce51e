#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hallway/common.hpp"

namespace hallway {

// One-line notation for an element of S_n: n distinct values in 1..n.
class Permutation {
 public:
  explicit Permutation(std::vector<int> values);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  // 1-based access, matching the combinatorial conventions throughout.
  int at(int i) const { return values_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

// Window of a hyperoctahedral group element: one of +i / -i per magnitude.
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> values);
  static SignedPermutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  int at(int i) const { return values_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& values() const { return values_; }

  Permutation abs() const;

  bool operator==(const SignedPermutation&) const = default;

 private:
  std::vector<int> values_;
};

long long inv(const Permutation& pi);

// Type-A descent set: positions i in 1..n-1 with pi_i > pi_{i+1}.
std::vector<int> des_set(const Permutation& pi);

// Type-C descent set: includes position 0 when sigma_1 < 0 (sigma_0 = 0).
std::vector<int> des_set_signed(const SignedPermutation& sigma);

struct InvCParts {
  long long inv = 0;  // pairs j < i with sigma_j > sigma_i
  long long neg = 0;  // negative entries
  long long nsp = 0;  // pairs j < i with sigma_j + sigma_i < 0
  long long total() const { return inv + neg + nsp; }
};

InvCParts inv_c_parts(const SignedPermutation& sigma);
long long inv_c(const SignedPermutation& sigma);

// comaj(sigma) = sum over descents i of (n - i).
long long comaj(const SignedPermutation& sigma);

// lhp_C(sigma) = -inv_C(sigma) + sum over descents i of (2(i+1) + ... + 2n).
long long lhp_c(const SignedPermutation& sigma);

// Type-A analog: -inv(pi) + sum over descents i of ((i+1) + ... + n).
long long lhp_a(const Permutation& pi);

// Lexicographic enumeration of S_n / C_n (entries compared as integers,
// so -k sorts before +k).  Guarded by the rank cap.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
void for_each_signed_permutation(int n, const std::function<void(const SignedPermutation&)>& fn);

// Textual form [a,b,c]; the signed parser rejects zeros and repeated magnitudes.
std::vector<long long> parse_int_list(const std::string& text);
Permutation parse_permutation(const std::string& text);
SignedPermutation parse_signed_permutation(const std::string& text);
std::string format_values(const std::vector<int>& values);
std::string format_values(const std::vector<long long>& values);

}  // namespace hallway
