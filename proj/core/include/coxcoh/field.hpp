#pragma once

// Exact arithmetic in Q and in the real cyclotomic fields Q(2cos(pi/M)).
//
// An element is stored as its residue polynomial in y = 2cos(pi/M) modulo the
// minimal polynomial of y, i.e. `degree` rational coefficients, low to high.
// Field descriptors are interned: `field_for(M)` always returns the same
// object, so fields compare by address and live for the whole program.

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace coxcoh {

using Rational = mpq_class;
using Integer = mpz_class;

class FieldSpec {
 public:
  int M() const { return M_; }
  int degree() const { return degree_; }
  bool is_rational() const { return degree_ == 1; }
  /// Monic minimal polynomial of 2cos(pi/M), coefficients low to high.
  const std::vector<Integer>& minpoly() const { return minpoly_; }
  /// Numeric value of the generator y = 2cos(pi/M).
  double generator_value() const;
  std::string minpoly_string() const;

  // Coefficient-span kernels used by the matrix code. All spans have length
  // degree(); `out` may not alias the inputs.
  bool is_zero(std::span<const Rational> a) const;
  void mul(std::span<const Rational> a, std::span<const Rational> b,
           std::span<Rational> out) const;
  /// dst -= a * b
  void sub_mul(std::span<Rational> dst, std::span<const Rational> a,
               std::span<const Rational> b) const;
  /// dst += a * b
  void add_mul(std::span<Rational> dst, std::span<const Rational> a,
               std::span<const Rational> b) const;
  void inverse(std::span<const Rational> a, std::span<Rational> out) const;

  /// Reduces a polynomial in y of any length modulo the minimal polynomial.
  std::vector<Rational> reduce(std::vector<Rational> poly) const;

 private:
  friend const FieldSpec& field_for(int M);
  explicit FieldSpec(int M);

  int M_;
  int degree_;
  std::vector<Integer> minpoly_;
  std::vector<Rational> minpoly_q_;
};

/// Interned field Q(2cos(pi/M)); M >= 1.
const FieldSpec& field_for(int M);
inline const FieldSpec& rationals() { return field_for(1); }
/// Smallest interned field containing both arguments (modulus lcm).
const FieldSpec& common_field(const FieldSpec& a, const FieldSpec& b);
/// True when every element of `from` has a canonical image in `to`.
bool embeds_into(const FieldSpec& from, const FieldSpec& to);

/// Cyclotomic polynomial Phi_n over Z, coefficients low to high.
std::vector<Integer> cyclotomic_polynomial(int n);

/// Monic minimal polynomial of 2cos(pi/M) over Q. Computed as the minimal
/// polynomial of multiplication by z + 1/z on Q[z]/Phi_{2M}(z).
std::vector<Integer> minimal_polynomial(int M);

/// Euler's totient.
int euler_phi(int n);

class FieldElement {
 public:
  explicit FieldElement(const FieldSpec& field);
  FieldElement(const FieldSpec& field, const Rational& value);
  FieldElement(const FieldSpec& field, long value) : FieldElement(field, Rational(value)) {}
  /// Residue coefficients; longer inputs are reduced modulo the minimal polynomial.
  FieldElement(const FieldSpec& field, std::vector<Rational> coeffs);

  static FieldElement generator(const FieldSpec& field);

  const FieldSpec& field() const { return *field_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  double to_double() const;
  std::string to_string() const;

  FieldElement inverse() const;
  FieldElement pow(unsigned e) const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);
  FieldElement operator-() const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  void require_same_field(const FieldElement& other) const;

  const FieldSpec* field_;
  std::vector<Rational> coeffs_;
};

/// 2cos(pi/m) inside `field`. Valid when m divides field.M(), or when the value
/// is rational (m = 1, 2, 3). m = 0 stands for an infinite label and yields 2.
FieldElement embed_cos(int m, const FieldSpec& field);

/// Image of `x` under the canonical embedding into `target`.
FieldElement embed(const FieldElement& x, const FieldSpec& target);

}  // namespace coxcoh
