#include <algorithm>
#include <random>
#include <utility>

#include "coxcoh/budget.hpp"
#include "coxcoh/linalg.hpp"

namespace coxcoh {
namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Residues of a rational matrix, or nullopt if p divides a denominator.
std::optional<std::vector<u64>> reduce_mod(const ExactMatrix& a, u64 p) {
  if (!a.field().is_rational()) throw Error("modular rank requires the rational field");
  std::vector<u64> out(a.rows() * a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& q = a.entry(i, j)[0];
      if (sgn(q) == 0) continue;
      const u64 den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
      if (den == 0) return std::nullopt;
      const u64 num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
      out[i * a.cols() + j] = mulmod(num, powmod(den, p - 2, p), p);
    }
  return out;
}

std::size_t rank_of_residues(std::vector<u64>& m, std::size_t rows, std::size_t cols, u64 p) {
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
    u64* pr = &m[r * cols];
    const u64 inv = powmod(pr[c], p - 2, p);
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (pr[j] == 0) continue;
      pr[j] = mulmod(pr[j], inv, p);
      support.push_back(j);
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      u64* row = &m[i * cols];
      const u64 f = row[c];
      if (f == 0) continue;
      for (std::size_t j : support) row[j] = (row[j] + p - mulmod(f, pr[j], p)) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for n < 3.4e14 with these bases; our primes are below 2^32.
  for (u64 a : {2u, 7u, 61u}) {
    if (a % n == 0) continue;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::size_t rank_mod_p(const ExactMatrix& a, std::uint64_t p) {
  if (p >= (u64{1} << 32) || !is_prime_u64(p)) throw Error("rank_mod_p: p must be a prime below 2^32");
  if (a.empty()) return 0;
  charge_matrix_bytes(a.rows() * a.cols() * sizeof(u64), "modular copy");
  auto m = reduce_mod(a, p);
  if (!m) throw Error("rank_mod_p: p divides a denominator");
  return rank_of_residues(*m, a.rows(), a.cols(), p);
}

ModularRank modular_rank(const ExactMatrix& a, std::uint64_t seed) {
  if (!a.field().is_rational()) throw Error("modular rank requires the rational field");
  ModularRank out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> dist((u64{1} << 30) + 1, (u64{1} << 31) - 1);
  if (!a.empty()) charge_matrix_bytes(a.rows() * a.cols() * sizeof(u64), "modular copy");
  std::size_t found = 0;
  while (found < 3) {
    const u64 p = dist(rng) | 1u;
    if (!is_prime_u64(p)) continue;
    bool repeat = false;
    for (std::size_t k = 0; k < found; ++k) repeat = repeat || out.primes[k] == p;
    if (repeat) continue;
    std::size_t r = 0;
    if (!a.empty()) {
      auto m = reduce_mod(a, p);
      if (!m) continue;
      r = rank_of_residues(*m, a.rows(), a.cols(), p);
    }
    out.primes[found] = p;
    out.ranks[found] = r;
    ++found;
  }
  out.rank = std::max({out.ranks[0], out.ranks[1], out.ranks[2]});
  out.agreed = out.ranks[0] == out.ranks[1] && out.ranks[1] == out.ranks[2];
  return out;
}

}  // namespace coxcoh
