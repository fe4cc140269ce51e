#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hallway/common.hpp"
#include "hallway/lecturehall.hpp"
#include "hallway/perms.hpp"

namespace hallway {

// A general element of the affine hyperoctahedral group of rank n, given by
// its window w_1..w_n.  The 2n residues +-w_i mod N (N = 2n+2) must be
// pairwise distinct and avoid 0 and n+1.
class AffineElement {
 public:
  explicit AffineElement(std::vector<long long> window);
  static AffineElement identity(int n);

  int rank() const { return static_cast<int>(window_.size()); }
  long long period() const { return 2LL * rank() + 2; }
  long long at(int i) const { return window_[static_cast<size_t>(i) - 1]; }
  const std::vector<long long>& window() const { return window_; }

  bool operator==(const AffineElement&) const = default;

 private:
  std::vector<long long> window_;
};

// Minimal-length coset representative: strictly increasing positive window.
class CosetRep {
 public:
  explicit CosetRep(std::vector<long long> window);
  static CosetRep identity(int n);

  int rank() const { return element_.rank(); }
  long long period() const { return element_.period(); }
  long long at(int i) const { return element_.at(i); }
  const std::vector<long long>& window() const { return element_.window(); }
  const AffineElement& element() const { return element_; }

  bool operator==(const CosetRep&) const = default;

 private:
  AffineElement element_;
};

// w_i = c_i*N + sigma_i with sigma_i the residue representative in
// {-n..-1, 1..n}.
struct Decomposition {
  std::vector<long long> c;
  SignedPermutation sigma;
};

Decomposition decompose(const CosetRep& w);

// Inverse of decompose; validates the U_n conditions (c nondecreasing from
// c_0 = 0, strict across descents of sigma including position 0).
CosetRep compose(const std::vector<long long>& c, const SignedPermutation& sigma);

struct ClassInvVector {
  std::vector<long long> I;                   // I_1..I_n
  std::vector<std::vector<long long>> I_ij;   // row i holds I_{i,1}..I_{i,i}
  long long total = 0;                        // the affine inversion number
};

// Floor-division evaluation of the class inversion counts.
ClassInvVector class_inv(const CosetRep& w);

// The bijection with lecture hall partitions: lambda_i = 2i*c_i - e_i with
// e = psi(sigma); from_lhp inverts through the ceiling/excess pair.
LHPartition to_lhp(const CosetRep& w);
CosetRep from_lhp(const LHPartition& lambda);

struct WindowStats {
  long long inv_tilde = 0;
  long long neg = 0;
  long long alpha = 0;
  long long beta = 0;
  long long last = 0;
  long long max = 0;
  long long odd_inv = 0;
  long long even_inv = 0;
};

WindowStats stats(const CosetRep& w);

// T_{n,k}: exactly the last k window entries exceed n.
bool in_tnk(const CosetRep& w, int k);
// S_{n,t}: w_n <= (2t+1)(n+1).
bool in_snt(const CosetRep& w, long long t);

// All coset representatives with w_n <= max_wn, in window-lexicographic
// order, generated through U_n pairs.
void for_each_coset_rep(int n, long long max_wn,
                        const std::function<void(const CosetRep&)>& fn);

// Right multiplication by generator s_i acting on windows: s_0 negates w_1,
// s_i (0 < i < n) swaps w_i and w_{i+1}, s_n replaces w_n by N - w_n.
AffineElement gen_apply(const AffineElement& g, int i);

// Coset normal form: sorted absolute values of the window.
CosetRep normal_form(const AffineElement& g);

struct OracleResult {
  int length = 0;
  std::vector<int> word;  // generator indices, applied left to right
  int s0_count = 0;
  int sn_count = 0;
};

// Breadth-first search over the generator action, from the identity.  States
// are deduplicated by window; each coset is recorded at the first (minimal)
// depth at which any of its elements appears.
class LengthOracle {
 public:
  explicit LengthOracle(int n, int depth_cap = 14, std::size_t node_cap = 5'000'000);

  // Expands the search as needed; nullopt means the caps were reached first.
  std::optional<OracleResult> find(const CosetRep& w);

  int depth_reached() const { return depth_; }
  std::size_t nodes_visited() const { return states_.size(); }

 private:
  struct State {
    std::vector<long long> window;
    int parent = -1;
    int gen = -1;
  };

  bool expand_next_level();

  int n_;
  int depth_cap_;
  std::size_t node_cap_;
  int depth_ = 0;
  std::size_t level_begin_ = 0;
  std::vector<State> states_;
  std::unordered_map<std::string, std::size_t> seen_;       // by window bytes
  std::unordered_map<std::string, std::size_t> coset_hit_;  // by normal form bytes
};

}  // namespace hallway
