#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxcoh/cochain.hpp"

namespace coxcoh {

/// Monomial basis of the maximal ideal of Q[x_1..x_m]/(x)^3: x_1..x_m, then
/// x_a x_b for a <= b in lexicographic order. Variables are 0-based.
class MBasis {
 public:
  explicit MBasis(int m);

  int m() const { return m_; }
  std::size_t dim() const { return monomials_.size(); }
  /// (a, -1) for x_a, (a, b) with a <= b for x_a x_b.
  std::pair<int, int> monomial(std::size_t idx) const { return monomials_.at(idx); }
  int degree(std::size_t idx) const { return monomials_.at(idx).second < 0 ? 1 : 2; }
  std::size_t linear(int a) const { return static_cast<std::size_t>(a); }
  std::size_t quadratic(int a, int b) const;
  /// Product in the truncated ring; nullopt when it vanishes.
  std::optional<std::size_t> product(std::size_t p, std::size_t q) const;
  std::string name(std::size_t idx) const;

 private:
  int m_;
  std::vector<std::pair<int, int>> monomials_;
};

/// The complex ... -> m⊗m⊗m -> m⊗m -> m with ∂_i = sum_{a=1}^{i-1} (-1)^a d_a,
/// d_a multiplying factors a and a+1, in degrees 1..i_max+1 (so homology is
/// known in 1..i_max). Basis of m^{⊗i}: tuples in lexicographic order.
struct TorComplex {
  MBasis basis{1};
  int i_max = 0;
  std::map<int, std::size_t> dims;
  std::map<int, SparseMatrix> boundaries;  ///< ∂_i keyed by i >= 2; ∂_1 = 0

  std::size_t dim(int i) const;
  std::size_t tuple_index(const std::vector<std::size_t>& factors) const;
  std::vector<std::size_t> tuple(std::size_t index, int i) const;
  /// dim H_i for 1 <= i <= i_max, exact ranks.
  std::vector<std::size_t> homology() const;
};

/// Charges the sparse storage against the matrix budget; throws BudgetExceeded.
TorComplex tor_complex(int m, int i_max);

struct SigmaBlock {
  int i = 0;
  int j = 0;
  std::vector<int> sigma;  ///< 1-based positions of the Sym^2 factors
  IndependentSet t;        ///< in A_{i+j-1}, 0-based generators
};

/// k = h + |{1..h-1} ∩ Σ| for h in Σ, as the 1-based generator s_k.
IndependentSet sigma_to_set(const std::vector<int>& sigma);

/// All 2^i subsets Σ of {1..i}, by size then lexicographically.
std::vector<SigmaBlock> msum_blocks(int i);

/// sum_j C(i,j) m^{i-j} (m(m+1)/2)^j = (m + m(m+1)/2)^i.
bool msum_dimension_identity(int m, int i);

struct PhiTorReport {
  int m = 0;
  int i_max = 0;
  bool chain_map = false;
  bool anticommutes = false;
  bool bijective = false;
  std::vector<std::size_t> tor_dims;      ///< dim m^{⊗i}, i = 1..i_max
  std::vector<std::size_t> coxeter_dims;  ///< sum_j dim X^j(A_{i+j-1}), i = 1..i_max
  std::string detail;
};

/// v in (V^{⊗N})^<T>, T = {s_k1..s_kj}, goes to (-1)^{sum k_a} 2^{-j} [v],
/// reading positions (k_a, k_a + 1) as Sym^2 V coordinates.
PhiTorReport phi_tor(int m, int i_max);

struct TorComparison {
  int m = 0;
  int i_max = 0;
  std::vector<std::size_t> tor;      ///< H_i of the tor complex, i = 1..i_max
  std::vector<std::size_t> coxeter;  ///< sum_j dim H^j(A_{i+j-1}, V^{⊗(i+j)})
  /// Per i, the nonzero contributions (j, dim).
  std::vector<std::vector<std::pair<int, std::size_t>>> contributions;
  bool match = false;
  std::string mode = "exact";
  bool primes_agreed = true;
};

TorComparison compare_tor(int m, int i_max, const RankOptions& options = {});

}  // namespace coxcoh
