#pragma once

// Randomised identity checks for the exact linear algebra, shared by the unit
// tests and the acceptance runner.

#include <random>
#include <sstream>
#include <string>

#include "coxcoh/linalg.hpp"
#include "support/oracle.hpp"

namespace properties {

struct Outcome {
  int trials = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && trials > 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

inline coxcoh::ExactMatrix random_matrix(std::mt19937_64& rng, const coxcoh::FieldSpec& f, std::size_t rows,
                                         std::size_t cols, std::size_t inner) {
  std::uniform_int_distribution<long> small(-4, 4), den(1, 3);
  auto random_factor = [&](std::size_t r, std::size_t c) {
    coxcoh::ExactMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        std::vector<coxcoh::Rational> coeffs(static_cast<std::size_t>(f.degree()));
        for (auto& x : coeffs) x = coxcoh::Rational(small(rng), den(rng)), x.canonicalize();
        m.set(i, j, coxcoh::FieldElement(f, coeffs));
      }
    return m;
  };
  return random_factor(rows, inner) * random_factor(inner, cols);
}

// Kernel, rank and image identities on `count` random matrices over `f`.
inline Outcome kernel_rank_image(const coxcoh::FieldSpec& f, int count, std::uint64_t seed) {
  using coxcoh::ExactMatrix;
  Outcome out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 9);
  for (int trial = 0; trial < count; ++trial) {
    ++out.trials;
    const std::size_t r = size(rng), c = size(rng), k = size(rng);
    const ExactMatrix a = random_matrix(rng, f, r, c, k);
    std::ostringstream tag;
    tag << "M=" << f.M() << " trial " << trial << " (" << r << "x" << c << ", inner " << k << "): ";
    const std::size_t rk = coxcoh::exact_rank(a);
    const ExactMatrix ker = coxcoh::kernel_basis(a);
    const ExactMatrix img = coxcoh::image_basis(a);
    if (!(a * ker).is_zero()) out.fail(tag.str() + "A*K != 0");
    else if (rk + ker.cols() != c) out.fail(tag.str() + "rank + nullity != cols");
    else if (coxcoh::exact_rank(ker) != ker.cols()) out.fail(tag.str() + "kernel basis dependent");
    else if (img.cols() != rk || coxcoh::exact_rank(img) != rk) out.fail(tag.str() + "image basis size");
    else if (coxcoh::exact_rank(coxcoh::hstack(a, img)) != rk) out.fail(tag.str() + "image outside column space");
    else if (coxcoh::exact_rank(a.transpose()) != rk) out.fail(tag.str() + "row rank != column rank");
    else if (rk > std::min({r, c, k})) out.fail(tag.str() + "rank exceeds factorisation bound");
    else if (f.is_rational() && oracle::rank(oracle::to_q(a)) != rk) out.fail(tag.str() + "reference rank differs");
  }
  return out;
}

// Modular rank against exact rank on random rational matrices up to 40x40.
inline Outcome modular_vs_exact(int count, std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 40);
  for (int trial = 0; trial < count; ++trial) {
    ++out.trials;
    const std::size_t r = size(rng), c = size(rng), k = size(rng);
    const coxcoh::ExactMatrix a = random_matrix(rng, coxcoh::rationals(), r, c, k);
    const std::size_t exact = coxcoh::exact_rank(a);
    const coxcoh::ModularRank m = coxcoh::modular_rank(a, seed + static_cast<std::uint64_t>(trial));
    if (m.rank != exact || !m.agreed)
      out.fail("trial " + std::to_string(trial) + ": modular " + std::to_string(m.rank) + ", exact " +
               std::to_string(exact));
  }
  return out;
}

}  // namespace properties
