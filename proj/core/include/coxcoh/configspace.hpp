#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxcoh/cochain.hpp"

namespace coxcoh {

/// (G_1, ..., G_k): disjoint parts of {1..n} of size 1 or 2 covering it.
struct OrderedPartition {
  std::vector<std::vector<int>> parts;  ///< each part sorted, elements 1-based

  std::size_t size() const { return parts.size(); }
  int n() const;
  std::vector<int> sizes() const;
  /// Every element of G_i is smaller than every element of G_j for i < j.
  bool order_preserving() const;
  std::string to_string() const;

  friend bool operator==(const OrderedPartition& a, const OrderedPartition& b) { return a.parts == b.parts; }
  /// Size vector first, then part contents.
  friend bool operator<(const OrderedPartition& a, const OrderedPartition& b);
};

/// Throws Error unless the parts have sizes 1 or 2 and partition {1..n}.
void validate(const OrderedPartition& p, int n);

/// All cells of dimension k, ordered by size vector then contents. Empty when
/// k is outside [ceil(n/2), n].
std::vector<OrderedPartition> enumerate_cells(int n, int k);

/// The order-preserving cell with the given size vector.
OrderedPartition standard_cell(const std::vector<int>& sizes);

/// s_j in T iff some part G_i has size 2 and j = |G_1| + ... + |G_{i-1}|, with
/// j read as a 0-based generator index of A_{n-1}.
IndependentSet size_vector_to_set(const std::vector<int>& sizes);
/// Inverse of size_vector_to_set for a set of n - k generators of A_{n-1}.
std::vector<int> set_to_size_vector(const IndependentSet& t, int n);

/// (G_1, ..., G_k) sigma = (sigma^{-1}(G_1), ..., sigma^{-1}(G_k)), sigma 0-based.
OrderedPartition act_right(const OrderedPartition& p, const Permutation& sigma);
/// A sigma with standard_cell(p.sizes()) sigma = p.
Permutation translating_permutation(const OrderedPartition& p);

/// Cellular chain complex of ([0,1]^n, boundary of the cube ∪ Δ_{n,3}).
struct RelativeComplex {
  int n = 0;
  std::map<int, std::vector<OrderedPartition>> cells;
  std::map<int, SparseMatrix> boundaries;  ///< keyed by source degree
  GradedComplex complex;                   ///< dense copy; empty unless requested

  std::size_t index_of(const OrderedPartition& p) const;
};

/// ∂(G_1..G_k) = sum over 1 <= i <= k-1 with |G_i| = |G_{i+1}| = 1 of
/// (-1)^i (G_1, ..., G_i ∪ G_{i+1}, ..., G_k). ∂² = 0 is checked.
RelativeComplex relative_complex(int n, bool dense = true);

enum class PhiSign {
  head,  ///< (-1)^{sum_{j<k} (|G_1| + ... + |G_j|)}
  tail,  ///< (-1)^{sum_{j<k} (|G_{j+1}| + ... + |G_k|)}
};

int phi_sign(const std::vector<int>& sizes, PhiSign convention);

struct PhiConfigReport {
  int n = 0;
  bool chain_map = false;  ///< phi ∂ = d phi with the head convention
  bool bijective = false;
  /// With the tail convention phi ∂ = (-1)^n d phi; recorded for comparison.
  bool tail_commutes = false;
  bool tail_anticommutes = false;
  std::vector<std::size_t> cell_dims;     ///< by k = 0..n
  std::vector<std::size_t> coxeter_dims;  ///< X^{n-k}, by k
  std::string detail;
};

/// C_k -> X^{n-k}(A_{n-1}, Q[S_n]): the standard cell of size vector v goes to
/// ±prod_{s in T}(id + s), a translate P sigma goes to the right translate.
/// Throws InternalError if phi fails to be a chain map.
PhiConfigReport phi_config(int n);

struct ConfigHomologyReport {
  int n = 0;
  std::vector<std::size_t> relative_h;  ///< H_k of the relative complex, k = 0..n
  std::vector<std::size_t> coxeter_h;   ///< H^j(A_{n-1}, Q[S_n]), j = 0..n
  bool dual_match = false;              ///< relative H_k = H^{n-k} for all k
  /// H_j(X_{n,3}) = relative H_{n-j}; compared with H^j and with H^{n-j}.
  std::vector<std::size_t> complement_h;
  bool complement_matches_same_degree = false;
  bool complement_matches_printed_degree = false;
  std::string mode = "exact";
  bool probabilistic = false;
  bool primes_agreed = true;
};

/// Automatic mode switches to modular ranks from n = 6 on.
ConfigHomologyReport compare_homology(int n, const RankOptions& options = {});

struct StabilizerCheck {
  std::string cell;
  std::size_t stabilizer_size = 0;
  std::size_t parabolic_size = 0;
  bool cell_ok = false;     ///< stabilizer of the cell is <T>
  bool element_ok = false;  ///< right stabilizer of prod(id + s) is <T>
};

/// Brute force over S_n for every order-preserving cell, n <= 5.
std::vector<StabilizerCheck> stabilizer_check(int n);

struct SpechtSpotCheck {
  int n = 0;
  int degree = 0;
  std::size_t regular_dim = 0;
  std::size_t weighted_sum = 0;  ///< sum_lambda f_lambda dim H^degree(specht(lambda))
  std::size_t twisted_sum = 0;   ///< the same with specht(lambda) ⊗ sgn
  std::vector<std::pair<std::string, std::size_t>> multiplicities;  ///< lambda -> dim H(specht ⊗ sgn)
  bool ok = false;
};

/// Q[S_n] = ⊕ f_lambda S^lambda, so dim H^j(regular) = sum f_lambda dim H^j(S^lambda),
/// and the sign twist permutes the summands. n <= 5.
std::vector<SpechtSpotCheck> specht_spot_check(int n);

}  // namespace coxcoh
