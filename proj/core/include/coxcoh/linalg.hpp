#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxcoh/matrix.hpp"

namespace coxcoh {

enum class RankMode { exact, modular, automatic };

std::string to_string(RankMode mode);
RankMode parse_rank_mode(const std::string& text);

struct RankOptions {
  RankMode mode = RankMode::automatic;
  std::uint64_t seed = 0;
  /// In automatic mode, matrices with more columns than this go modular
  /// (rational field only).
  std::size_t exact_column_limit = 2000;
};

struct EchelonForm {
  ExactMatrix reduced;               ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form.
EchelonForm rref(ExactMatrix a);

/// Rank by forward elimination only.
std::size_t exact_rank(const ExactMatrix& a);
std::size_t exact_rank(const SparseMatrix& a);

/// Columns span ker(a); rows of the free columns form an identity block.
ExactMatrix kernel_basis(const ExactMatrix& a);

/// Pivot columns of `a`: a basis of its column space drawn from its columns.
ExactMatrix image_basis(const ExactMatrix& a);

/// Solves a * x = b exactly. Returns nullopt when some column of b is not in
/// the column space of a. When a has dependent columns the solution has zeros
/// in the free positions.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

struct ModularRank {
  std::size_t rank = 0;                    ///< max over the primes (a lower bound on the true rank)
  std::array<std::uint64_t, 3> primes{};
  std::array<std::size_t, 3> ranks{};
  bool agreed = true;
};

/// Rank over three primes in (2^30, 2^31) drawn from `seed`, skipping primes
/// dividing any denominator. Rational matrices only.
ModularRank modular_rank(const ExactMatrix& a, std::uint64_t seed);

/// Rank of `a` reduced modulo a single prime p < 2^32.
std::size_t rank_mod_p(const ExactMatrix& a, std::uint64_t p);

bool is_prime_u64(std::uint64_t n);

struct RankResult {
  std::size_t rank = 0;
  bool probabilistic = false;
  bool primes_agreed = true;  ///< modular mode: all three primes gave the same rank
};

RankResult rank(const ExactMatrix& a, const RankOptions& options = {});

struct RankKernelImage {
  std::size_t rank = 0;
  bool probabilistic = false;
  RankMode mode_used = RankMode::exact;
  std::optional<ExactMatrix> kernel;   ///< exact mode only
  std::optional<ExactMatrix> image;    ///< exact mode only
  std::optional<ModularRank> modular;  ///< modular mode only
};

/// Modular mode over a field of degree > 1 throws.
RankKernelImage rank_kernel_image(const ExactMatrix& a, RankMode mode, std::uint64_t seed = 0);

/// A linear subspace of F^n with a basis normalised so that its rows at
/// `coordinate_rows()` form an identity matrix. Coordinates of a vector in the
/// subspace are then read off those rows and verified by multiplication.
class Subspace {
 public:
  Subspace() = default;

  static Subspace kernel_of(const ExactMatrix& constraints);
  static Subspace kernel_of(const SparseMatrix& constraints);
  static Subspace span_of(const ExactMatrix& vectors);
  static Subspace span_of(const SparseMatrix& vectors);
  static Subspace whole(const FieldSpec& field, std::size_t n);

  const ExactMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& coordinate_rows() const { return coord_rows_; }
  std::size_t dim() const { return coord_rows_.size(); }
  std::size_t ambient_dim() const { return basis_.rows(); }
  const FieldSpec& field() const { return basis_.field(); }

  /// Coordinates of each column of `vectors`; throws InternalError if some
  /// column lies outside the subspace.
  ExactMatrix coordinates(const ExactMatrix& vectors) const;
  bool contains(const ExactMatrix& vectors) const;

 private:
  Subspace(ExactMatrix basis, std::vector<std::size_t> rows);

  ExactMatrix basis_;
  std::vector<std::size_t> coord_rows_;
};

bool same_subspace(const Subspace& a, const Subspace& b);

}  // namespace coxcoh
