#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxcoh/representation.hpp"

namespace coxcoh {

enum class Orientation { cochain, chain };

/// Finite graded vector space with differentials. Degrees outside
/// [min_degree, max_degree] are zero. A cochain differential goes k -> k+1, a
/// chain differential k -> k-1; both are stored under their source degree.
struct GradedComplex {
  const FieldSpec* field = &rationals();
  Orientation orientation = Orientation::cochain;
  int min_degree = 0;
  int max_degree = -1;
  std::map<int, std::size_t> dims;
  std::map<int, ExactMatrix> differentials;

  std::size_t dim(int k) const;
  int target(int k) const { return orientation == Orientation::cochain ? k + 1 : k - 1; }
  /// Differential out of degree k (a zero matrix of the right shape if absent).
  ExactMatrix differential(int k) const;
  bool has_differential(int k) const { return differentials.count(k) != 0; }

  /// Throws InternalError on a shape mismatch or a nonzero composite.
  void verify() const;
};

struct CohomologyReport {
  std::vector<int> degrees;
  std::vector<std::size_t> space_dims;
  std::vector<std::size_t> h_dims;
  long euler_spaces = 0;
  long euler = 0;
  /// "exact", "modular" or "mixed".
  std::string mode = "exact";
  bool probabilistic = false;
  bool primes_agreed = true;
  /// Per degree: (label, dimension) of each summand, when known.
  std::vector<std::vector<std::pair<std::string, std::size_t>>> blocks;

  std::size_t h(int k) const;
  std::size_t total() const;
};

/// Dimensions of (co)homology at `degrees` (all degrees of the complex by
/// default). Each differential's rank is computed once. Euler characteristics
/// are summed over the reported degrees.
CohomologyReport cohomology(const GradedComplex& c, const RankOptions& options = {},
                            std::optional<std::vector<int>> degrees = std::nullopt);

struct ComplexBlock {
  IndependentSet t;
  InvariantBasis invariants;
  std::size_t offset = 0;
};

struct BuildOptions {
  /// order[r] is the generator of rank r in the total order; identity if unset.
  std::optional<std::vector<std::size_t>> order;
  /// Only degrees whose cohomology is needed: spaces are built one degree
  /// beyond each end of the window (clipped to the complex).
  std::optional<std::pair<int, int>> window;
  bool cross_check_invariants = true;
};

/// X^k = ⊕_{|T| = k} A^<T> with d_{T,s}(v) = (-1)^{#{t in T : t < s}} (v + s v).
struct CoxeterComplex {
  std::shared_ptr<const Representation> rep;
  std::vector<std::size_t> order;
  std::vector<std::size_t> rank_of;
  std::map<int, std::vector<ComplexBlock>> blocks;
  GradedComplex complex;
  /// Degrees whose cohomology is fully determined by the built spaces.
  int valid_min = 0;
  int valid_max = -1;

  const ComplexBlock* find_block(const IndependentSet& t) const;
  std::vector<int> valid_degrees() const;
};

CoxeterComplex build_coxeter_complex(const Representation& rep, const BuildOptions& options = {});
CoxeterComplex build_coxeter_complex(std::shared_ptr<const Representation> rep, const BuildOptions& options = {});

/// Cohomology of the valid degrees, with block structure attached.
CohomologyReport coxeter_cohomology(const CoxeterComplex& x, const RankOptions& options = {});

/// Sign of the permutation taking T listed in `from` order to T listed in `to`
/// order (orders as in BuildOptions::order).
int reordering_sign(const IndependentSet& t, const std::vector<std::size_t>& from_rank,
                    const std::vector<std::size_t>& to_rank);

struct ChainMapCheck {
  bool ok = true;
  std::string detail;
};

/// Verifies that the block-diagonal map epsilon_T * id from the complex built
/// with the index order to the one built with `order` is a chain isomorphism.
ChainMapCheck reordering_isomorphism(const CoxeterComplex& natural, const CoxeterComplex& reordered);

/// Reduced simplicial cochain complex of the independence complex with
/// coefficients Q^d: degree k holds the k-element independent sets (degree 0
/// is the augmentation), coboundary signs (-1)^{#{t in T : t < s}}.
GradedComplex simplicial_reduced_complex(const CoxeterGraph& g, std::size_t d = 1);

/// Checks that v -> 2^{-k} v (in invariant coordinates) is a chain
/// isomorphism X(G, trivial(d)) -> the reduced simplicial complex.
ChainMapCheck geometric_isomorphism(const CoxeterComplex& trivial_complex, const GradedComplex& simplicial);

/// Checks f_{k'} d_src = sign * d_dst f_k for every degree k of src, where
/// maps[k] goes from src degree k to dst degree degree_map(k).
ChainMapCheck check_chain_map(const GradedComplex& src, const GradedComplex& dst,
                              const std::map<int, ExactMatrix>& maps, const std::function<int(int)>& degree_map,
                              int sign = 1);

/// Every map square and of full rank.
ChainMapCheck check_bijective(const std::map<int, ExactMatrix>& maps, const RankOptions& options = {});

}  // namespace coxcoh
