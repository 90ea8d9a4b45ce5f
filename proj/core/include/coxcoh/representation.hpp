#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxcoh/coxeter.hpp"
#include "coxcoh/linalg.hpp"
#include "coxcoh/permutation.hpp"

namespace coxcoh {

/// Braid relations (M_s M_t)^m = I are checked for labels up to this bound.
constexpr int kDefaultRelationBound = 8;

/// A representation of the Coxeter group of `graph`, given by one matrix per
/// generator (acting on column vectors).
class Representation {
 public:
  Representation() = default;
  /// Verifies M_s^2 = I and the braid relations up to `relation_bound`;
  /// throws InternalError on failure. A bound of 0 skips the braid check.
  Representation(CoxeterGraph graph, const FieldSpec& field, std::size_t dim,
                 std::vector<ExactMatrix> generators, std::string label,
                 int relation_bound = kDefaultRelationBound);

  const CoxeterGraph& graph() const { return graph_; }
  const FieldSpec& field() const { return *field_; }
  std::size_t dim() const { return dim_; }
  const ExactMatrix& generator(std::size_t s) const { return gens_.at(s); }
  const std::vector<ExactMatrix>& generators() const { return gens_; }
  const std::string& label() const { return label_; }
  /// Set when an infinite label was realised with 2cos(pi/inf) = 2.
  bool infinite_label_warning() const { return infinite_warning_; }
  void set_infinite_label_warning(bool w) { infinite_warning_ = w; }

  /// Same matrices over a larger field.
  Representation over(const FieldSpec& target) const;

 private:
  CoxeterGraph graph_;
  const FieldSpec* field_ = &rationals();
  std::size_t dim_ = 0;
  std::vector<ExactMatrix> gens_;
  std::string label_;
  bool infinite_warning_ = false;
};

/// Throws InternalError unless M_s^2 = I and (M_s M_t)^{m_st} = I for every
/// finite m_st <= bound.
void verify_relations(const Representation& rep, int bound = kDefaultRelationBound);

/// Geometric representation: s(a_t) = a_t + 2cos(pi/m_st) a_s, s(a_s) = -a_s.
Representation reflection_rep(const CoxeterGraph& g);
Representation trivial_rep(const CoxeterGraph& g, std::size_t d = 1);
Representation zero_rep(const CoxeterGraph& g);
Representation sign_rep(const CoxeterGraph& g);

/// The following need g = A_{n-1} (a path with labels 3, in index order).
/// Left multiplication on Q[S_n], basis in lexicographic one-line order.
Representation regular_rep(const CoxeterGraph& g);
/// Permutation action on Q^n.
Representation natural_rep(const CoxeterGraph& g);
/// (Q^m)^{⊗n}, s_k swapping tensor factors k and k+1; lexicographic basis.
Representation tensor_power_rep(const CoxeterGraph& g, std::size_t m);
/// The left ideal Q[S_n]·c for the Young symmetrizer c of the row-filled
/// tableau of shape lambda, n <= 7.
Representation specht_rep(const CoxeterGraph& g, const Partition& lambda);

bool is_type_a(const CoxeterGraph& g);

/// r1 ⊠ r2 on the disjoint union of the graphs, over the common field.
Representation external_tensor(const Representation& r1, const Representation& r2);
/// Generators of `sub` act by the parent's matrices.
Representation restrict(const Representation& rep, const InducedGraph& sub);
Representation sign_twist(const Representation& rep);
Representation direct_sum(const Representation& r1, const Representation& r2);

/// Basis of A^<T>, the vectors fixed by every generator in T.
struct InvariantBasis {
  IndependentSet t;
  Subspace space;

  const ExactMatrix& columns() const { return space.basis(); }
  std::size_t dim() const { return space.dim(); }
};

/// Kernel of the stacked (M_s - I), s in T, cross-checked against the image of
/// the averaging projector prod (I + M_s)/2. Throws Error if T is not
/// independent and InternalError if the two computations disagree.
InvariantBasis invariants(const Representation& rep, const IndependentSet& t, bool cross_check = true);

/// Text forms: reflection, trivial, trivial(d), zero, sign, regular, natural,
/// tensor(m), specht(a,b,...), signtwist(KIND). Throws ParseError.
Representation build_rep(const std::string& kind, const CoxeterGraph& g);

}  // namespace coxcoh
