#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace coxcoh {

/// One-line notation of a permutation of {0, ..., n-1}: p[i] is the image of i.
using Permutation = std::vector<int>;

Permutation identity_permutation(std::size_t n);
/// All n! permutations in lexicographic order of their one-line notation.
std::vector<Permutation> all_permutations(std::size_t n);
/// Position of p in the lexicographic order (Lehmer code).
std::size_t lex_index(const Permutation& p);
std::size_t factorial(std::size_t n);

/// (a ∘ b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
int sign(const Permutation& p);
/// The simple transposition s_k (0-based) exchanging k and k+1.
Permutation simple_transposition(std::size_t n, std::size_t k);

using Partition = std::vector<int>;

/// Partitions of n, largest parts first, in reverse lexicographic order.
std::vector<Partition> partitions(int n);
bool is_partition_of(const Partition& lambda, int n);
/// Number of standard Young tableaux of shape lambda (hook length formula).
std::size_t hook_length_dimension(const Partition& lambda);
Partition conjugate(const Partition& lambda);
std::string partition_string(const Partition& lambda);

}  // namespace coxcoh
