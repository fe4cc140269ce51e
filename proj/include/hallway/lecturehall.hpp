#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hallway/common.hpp"
#include "hallway/invseq.hpp"

namespace hallway {

// An s-lecture hall partition: 0 <= lambda_1/s_1 <= ... <= lambda_n/s_n,
// stored lowest index first.  Validated on construction.
class LHPartition {
 public:
  LHPartition(std::vector<long long> parts, SSequence s);

  int size() const { return static_cast<int>(parts_.size()); }
  long long at(int i) const { return parts_[static_cast<size_t>(i) - 1]; }
  const std::vector<long long>& parts() const { return parts_; }
  const SSequence& context() const { return s_; }

  long long weight() const;

  bool operator==(const LHPartition&) const = default;

 private:
  std::vector<long long> parts_;
  SSequence s_;
};

// Ratio chain test by exact cross-multiplication.
bool is_lhp(const std::vector<long long>& parts, const SSequence& s);

// Ceiling vector (ceil(lambda_i/s_i)) and excess (s_i*ceil - lambda_i).
std::vector<long long> ceiling_vec(const LHPartition& lambda);
InversionSequence excess(const LHPartition& lambda);

// A (b, e) pair in T_n^(s): b nondecreasing from b_0 = 0, strictly increasing
// across ascents of e.
struct CeilingExcessPair {
  std::vector<long long> b;
  InversionSequence e;
};

LHPartition pair_to_lhp(const std::vector<long long>& b, const InversionSequence& e);
CeilingExcessPair lhp_to_pair(const LHPartition& lambda);

// (|lambda|_o, |lambda|_e): part sums indexed downward from n by steps of 2.
std::pair<long long, long long> odd_even_weights(const LHPartition& lambda);

// Membership in L_{n,k}: the first n-k parts are zero and part n-k+1 is
// positive.  Requires the context (1,...,n).
bool is_truncated(const LHPartition& lambda, int k);

// All lambda in L_n^(s) with |lambda| <= bound, generated from lambda_n down.
void for_each_lhp_by_weight(const SSequence& s, long long bound,
                            const std::function<void(const LHPartition&)>& fn);

// All lambda in L_n (context (1,...,n)) with lambda_n <= last_part_bound.
void for_each_lhp_by_last_part(int n, long long last_part_bound,
                               const std::function<void(const LHPartition&)>& fn);

}  // namespace hallway
