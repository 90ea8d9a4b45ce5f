#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxcoh/budget.hpp"

namespace coxcoh {

/// Label value standing for m = infinity.
constexpr int kInfiniteLabel = 0;

/// Malformed graph or representation text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Coxeter graph on generators 0..n-1. Missing pairs carry m = 2. Generators
/// are displayed 1-based as s1, s2, ...; the integer index order is the total
/// order on S used by the cochain complex.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;
  explicit CoxeterGraph(std::size_t n, std::string name = "");

  std::size_t size() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// m_ij; 1 on the diagonal, kInfiniteLabel for infinity.
  int label(std::size_t i, std::size_t j) const;
  void set_label(std::size_t i, std::size_t j, int m);

  bool adjacent(std::size_t i, std::size_t j) const { return i != j && label(i, j) != 2; }
  std::vector<std::size_t> neighbors(std::size_t i) const;
  bool has_infinite_label() const;
  /// lcm of the finite labels >= 4 (labels 2, 3 and infinity give rational
  /// cosines); 1 if there are none.
  int field_modulus() const;

  /// "s1-s2:3, s2-s3:4" style listing of the edges.
  std::string edge_string() const;
  std::string display_name() const { return name_.empty() ? edge_string() : name_; }

  /// Compares labels only.
  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<int> labels_;
  std::string name_;
};

std::string generator_name(std::size_t i);

/// Strictly increasing list of pairwise commuting generators.
struct IndependentSet {
  std::vector<std::size_t> members;

  std::size_t size() const { return members.size(); }
  bool contains(std::size_t s) const;
  /// members ∪ {s}, kept sorted.
  IndependentSet with(std::size_t s) const;
  IndependentSet without(std::size_t s) const;
  std::string to_string() const;

  friend bool operator==(const IndependentSet& a, const IndependentSet& b) { return a.members == b.members; }
  friend bool operator<(const IndependentSet& a, const IndependentSet& b) { return a.members < b.members; }
};

bool is_independent(const CoxeterGraph& g, const std::vector<std::size_t>& members);

/// All independent k-subsets in lexicographic order; k = 0 gives {∅}.
std::vector<IndependentSet> independent_sets(const CoxeterGraph& g, std::size_t k);
std::size_t max_independent_size(const CoxeterGraph& g);

// Families (Bourbaki numbering, 0-based internally).
CoxeterGraph type_a(std::size_t n);
CoxeterGraph type_b(std::size_t n);
/// Fork at s_{n-2}: s_{n-2} is joined to s_{n-3}, s_{n-1} and s_n.
CoxeterGraph type_d(std::size_t n);
/// E6, E7, E8 with s4 trivalent, s2 hanging off s4.
CoxeterGraph type_e(std::size_t n);
CoxeterGraph type_f4();
/// H2 = I2(5), H3, H4 with the label 5 on s1-s2.
CoxeterGraph type_h(std::size_t n);
CoxeterGraph type_i2(int p);
/// Disjoint union; generators of b follow those of a.
CoxeterGraph product(const CoxeterGraph& a, const CoxeterGraph& b);

struct InducedGraph {
  CoxeterGraph graph;
  std::vector<std::size_t> to_parent;  ///< generator index in the parent graph
};

/// Induced subgraph on `vertices` (sorted internally).
InducedGraph induced(const CoxeterGraph& g, std::vector<std::size_t> vertices);

struct ParabolicDeletion {
  InducedGraph minus_s;        ///< G_s, on S \ {s}
  InducedGraph far;            ///< G^s, on S \ B_s(1)
  std::vector<std::size_t> b1; ///< s and its neighbours, sorted
};

ParabolicDeletion parabolic_deletions(const CoxeterGraph& g, std::size_t s);

/// Sorted names of the connected components, recognising A_k paths
/// ("A1", "A2", ...); other components are reported as "?k".
std::vector<std::string> component_types(const CoxeterGraph& g);

/// Grammar:
///   NAME := FAMILY RANK | "I2(" INT ")" | NAME "x" NAME
///         | "custom;n=" INT ";edges=" EDGE ("," EDGE)*
///   EDGE := INT "-" INT ":" (INT | "inf")
/// Families A, B, C (= B), D, E, F, H. Throws ParseError.
CoxeterGraph parse_graph(const std::string& text);

}  // namespace coxcoh
