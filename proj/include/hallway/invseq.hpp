#pragma once

#include <functional>
#include <vector>

#include "hallway/common.hpp"
#include "hallway/perms.hpp"

namespace hallway {

// Context sequence s of positive integers.
class SSequence {
 public:
  explicit SSequence(std::vector<long long> s);
  static SSequence natural(int n);  // (1, 2, ..., n)
  static SSequence doubled(int n);  // (2, 4, ..., 2n)

  int size() const { return static_cast<int>(s_.size()); }
  long long at(int i) const { return s_[static_cast<size_t>(i) - 1]; }
  const std::vector<long long>& values() const { return s_; }

  bool operator==(const SSequence&) const = default;

 private:
  std::vector<long long> s_;
};

// e with 0 <= e_i < s_i.
class InversionSequence {
 public:
  InversionSequence(std::vector<long long> e, SSequence s);

  int size() const { return static_cast<int>(e_.size()); }
  long long at(int i) const { return e_[static_cast<size_t>(i) - 1]; }
  const std::vector<long long>& values() const { return e_; }
  const SSequence& context() const { return s_; }

  long long weight() const;  // |e|

  bool operator==(const InversionSequence&) const = default;

 private:
  std::vector<long long> e_;
  SSequence s_;
};

// Ascent set with the e_0 = 0, s_0 = 1 convention; ratios compared by exact
// cross-multiplication.
std::vector<int> asc_set(const InversionSequence& e);

long long amaj(const InversionSequence& e);
long long lhp_stat(const InversionSequence& e);

// Classical encoding of S_n into I_n^(1,...,n) and its inverse.  The inverse
// picks, scanning i from n down to 1, the (e_i+1)-th largest unused value.
InversionSequence theta(const Permutation& pi);
Permutation theta_inverse(const InversionSequence& e);

// The bijection C_n -> I_n^(2,4,...,2n) and its inverse.
InversionSequence psi(const SignedPermutation& sigma);
SignedPermutation psi_inverse(const InversionSequence& e);

// Lexicographic enumeration of all prod(s_i) sequences.
void for_each_inversion_sequence(const SSequence& s,
                                 const std::function<void(const InversionSequence&)>& fn);

}  // namespace hallway
