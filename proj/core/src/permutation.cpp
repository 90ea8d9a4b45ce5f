#include "coxcoh/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "coxcoh/budget.hpp"

namespace coxcoh {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  Permutation p = identity_permutation(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::size_t lex_index(const Permutation& p) {
  const std::size_t n = p.size();
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    idx += smaller * factorial(n - 1 - i);
  }
  return idx;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error("compose: size mismatch");
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return q;
}

int sign(const Permutation& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

Permutation simple_transposition(std::size_t n, std::size_t k) {
  if (k + 1 >= n) throw Error("simple_transposition: index out of range");
  Permutation p = identity_permutation(n);
  std::swap(p[k], p[k + 1]);
  return p;
}

namespace {
void build_partitions(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    build_partitions(remaining - part, part, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  build_partitions(n, n, cur, out);
  return out;
}

bool is_partition_of(const Partition& lambda, int n) {
  int total = 0;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k] < 1 || (k > 0 && lambda[k] > lambda[k - 1])) return false;
    total += lambda[k];
  }
  return total == n;
}

Partition conjugate(const Partition& lambda) {
  Partition out;
  if (lambda.empty()) return out;
  for (int c = 0; c < lambda[0]; ++c) {
    int len = 0;
    for (int row : lambda)
      if (row > c) ++len;
    out.push_back(len);
  }
  return out;
}

std::size_t hook_length_dimension(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  int n = 0;
  for (int row : lambda) n += row;
  // n! / prod(hooks), accumulated as a ratio to stay exact for n <= 12.
  std::size_t num = factorial(static_cast<std::size_t>(n));
  std::size_t den = 1;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c)
      den *= static_cast<std::size_t>(lambda[r] - c - 1 + conj[static_cast<std::size_t>(c)] - static_cast<int>(r));
  return num / den;
}

std::string partition_string(const Partition& lambda) {
  std::string out = "(";
  for (std::size_t k = 0; k < lambda.size(); ++k) out += (k ? "," : "") + std::to_string(lambda[k]);
  return out + ")";
}

}  // namespace coxcoh
