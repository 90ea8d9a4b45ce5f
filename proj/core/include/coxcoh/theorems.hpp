#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxcoh/cochain.hpp"

namespace coxcoh {

enum class Verdict { exact_match, degree_shift, mismatch };

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& text);

/// Expected versus computed cohomology dimensions, indexed by degree from 0.
struct TableComparison {
  std::string group;
  std::vector<std::size_t> expected;
  std::vector<std::size_t> computed;
  Verdict verdict = Verdict::exact_match;
  int shift = 0;  ///< computed degree minus expected degree, for degree_shift
  long euler_spaces = 0;
  long euler = 0;
};

/// exact_match when the sequences agree (trailing zeros ignored); degree_shift
/// when computed is expected moved by a nonzero k; mismatch otherwise.
TableComparison compare_tables(std::string group, std::vector<std::size_t> expected,
                               std::vector<std::size_t> computed);

/// dim H^i(A_n, Q) = 1 iff n in {3i-1, 3i}, for i = 0..top.
std::vector<std::size_t> expected_trivial_a(int n, int top);

/// The printed values of H^i(G, V_n) for a named finite group spec ("A4",
/// "D5", "E8", "I2(7)", ...), for degrees 0..top. Throws Error for other
/// groups.
std::vector<std::size_t> expected_reflection(const std::string& group, int top);

std::vector<TableComparison> verify_trivial_table(int n_max, const RankOptions& options = {});
std::vector<TableComparison> verify_reflection_table(const std::vector<std::string>& groups,
                                                     const RankOptions& options = {});

/// A1..A8, B2..B7, D4..D8, E6, E7, E8, F4, H2, H3, H4, I2(5)..I2(8).
std::vector<std::string> default_reflection_groups();

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<std::size_t> expected;
  std::vector<std::size_t> computed;
};

/// H^i of a trivial-coefficient complex against the reduced cohomology of the
/// independence complex, plus the 2^{-k} rescaling chain isomorphism.
std::vector<CheckResult> geometric_check(const std::string& group, std::size_t d = 1,
                                         const RankOptions& options = {});

struct GroupRep {
  std::string graph;
  std::string rep;
  std::string to_string() const { return "(" + graph + ", " + rep + ")"; }
};

/// H(G1 x G2, A1 ⊠ A2) against the convolution of the factor dimensions.
CheckResult kunneth_check(const GroupRep& a, const GroupRep& b, const RankOptions& options = {});
std::vector<std::pair<GroupRep, GroupRep>> default_kunneth_cases();

/// H(G, A1 ⊕ A2) against the degreewise sum.
CheckResult split_additivity_check(const std::string& graph, const std::string& rep1, const std::string& rep2,
                                   const RankOptions& options = {});

struct SplitCase {
  std::string graph, rep1, rep2;
};
std::vector<SplitCase> default_split_cases();

struct LesReport {
  std::string name;
  std::vector<std::size_t> h_g, h_minus, h_far;  ///< H(G,V), H(G_s,V), H(G^s,V^s)
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// The short exact sequence 0 -> X(G^s, V^s)[-1] -> X(G, V) -> X(G_s, V) -> 0
/// and its long exact cohomology sequence, with explicit connecting maps.
LesReport les_check(const GroupRep& group, std::size_t s);

struct LesCase {
  GroupRep group;
  std::size_t s;  ///< 0-based generator
};
std::vector<LesCase> default_les_cases();

/// Representation of V^s = V^<s> as a module over G^s: generator t acts by the
/// coordinates of M_t B in the basis B of V^<s>.
Representation far_representation(const Representation& rep, std::size_t s, const InducedGraph& far);

/// Convolution c_k = sum_{i+j=k} a_i b_j.
std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

}  // namespace coxcoh
