#include "coxcoh/field.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "coxcoh/budget.hpp"

namespace coxcoh {
namespace {

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor; throws if the remainder is nonzero.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() - 1 < dd) throw InternalError("divide_exact: degree too small");
  IntPoly q(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const Integer c = num[k];
    q[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (num[i] != 0) throw InternalError("divide_exact: nonzero remainder");
  }
  return q;
}

// In-place row reduction of a small dense rational matrix; returns pivot columns.
std::vector<std::size_t> small_rref(std::vector<RatPoly>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Reduces `p` modulo the monic integer polynomial `mod` (length d + 1).
RatPoly reduce_mod(RatPoly p, const RatPoly& mod) {
  const std::size_t d = mod.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    if (p[k] == 0) continue;
    const Rational c = p[k];
    for (std::size_t i = 0; i < d; ++i) p[k - d + i] -= c * mod[i];
    p[k] = 0;
  }
  p.resize(d);
  return p;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  RatPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

thread_local RatPoly scratch_product;

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error("cyclotomic_polynomial: n must be positive");
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  cache.emplace(n, p);
  return p;
}

std::vector<Integer> minimal_polynomial(int M) {
  if (M < 1) throw Error("minimal_polynomial: M must be positive");
  const IntPoly phi = cyclotomic_polynomial(2 * M);
  const std::size_t D = phi.size() - 1;
  RatPoly mod(phi.begin(), phi.end());

  // y = z + z^{-1}, with z^{-1} = z^{2M-1} modulo Phi_{2M}.
  RatPoly y(2 * M, 0);
  y[1] += 1;
  y[2 * M - 1] += 1;
  y = reduce_mod(y, mod);

  std::vector<RatPoly> krylov;
  RatPoly w(D, 0);
  w[0] = 1;
  krylov.push_back(w);
  for (std::size_t k = 1; k <= D; ++k) {
    w = reduce_mod(poly_mul(w, y), mod);
    krylov.push_back(w);
    // Columns are the Krylov vectors; a kernel vector gives the dependency.
    std::vector<RatPoly> rows(D, RatPoly(k + 1, 0));
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j <= k; ++j) rows[i][j] = krylov[j][i];
    const auto pivots = small_rref(rows, k + 1);
    if (pivots.size() == k + 1) continue;
    // First k vectors are independent, so column k is the only free column:
    // w_k = sum_r rows[r][k] * w_{pivot r}.
    std::vector<Integer> poly(k + 1, 0);
    RatPoly coeffs(k + 1, 0);
    coeffs[k] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = -rows[r][k];
    for (std::size_t i = 0; i <= k; ++i) {
      coeffs[i].canonicalize();
      if (coeffs[i].get_den() != 1) throw InternalError("minimal_polynomial: non-integral coefficient");
      poly[i] = coeffs[i].get_num();
    }
    return poly;
  }
  throw InternalError("minimal_polynomial: Krylov sequence did not terminate");
}

FieldSpec::FieldSpec(int M) : M_(M), minpoly_(minimal_polynomial(M)) {
  degree_ = static_cast<int>(minpoly_.size()) - 1;
  minpoly_q_.assign(minpoly_.begin(), minpoly_.end());
}

double FieldSpec::generator_value() const { return 2.0 * std::cos(std::numbers::pi / M_); }

std::string FieldSpec::minpoly_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = minpoly_.size(); k-- > 0;) {
    const Integer& c = minpoly_[k];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k > 0) os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

bool FieldSpec::is_zero(std::span<const Rational> a) const {
  for (const auto& c : a)
    if (sgn(c) != 0) return false;
  return true;
}

void FieldSpec::mul(std::span<const Rational> a, std::span<const Rational> b,
                    std::span<Rational> out) const {
  if (degree_ == 1) {
    mpq_mul(out[0].get_mpq_t(), a[0].get_mpq_t(), b[0].get_mpq_t());
    return;
  }
  const std::size_t d = static_cast<std::size_t>(degree_);
  auto& p = scratch_product;
  p.assign(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(b[j]) == 0) continue;
      p[i + j] += a[i] * b[j];
    }
  }
  for (std::size_t k = p.size(); k-- > d;) {
    if (sgn(p[k]) == 0) continue;
    for (std::size_t i = 0; i < d; ++i) p[k - d + i] -= p[k] * minpoly_q_[i];
  }
  for (std::size_t i = 0; i < d; ++i) out[i] = p[i];
}

void FieldSpec::sub_mul(std::span<Rational> dst, std::span<const Rational> a,
                        std::span<const Rational> b) const {
  if (degree_ == 1) {
    thread_local Rational t;
    mpq_mul(t.get_mpq_t(), a[0].get_mpq_t(), b[0].get_mpq_t());
    mpq_sub(dst[0].get_mpq_t(), dst[0].get_mpq_t(), t.get_mpq_t());
    return;
  }
  thread_local RatPoly t;
  t.resize(static_cast<std::size_t>(degree_));
  mul(a, b, t);
  for (std::size_t i = 0; i < t.size(); ++i) dst[i] -= t[i];
}

void FieldSpec::add_mul(std::span<Rational> dst, std::span<const Rational> a,
                        std::span<const Rational> b) const {
  if (degree_ == 1) {
    thread_local Rational t;
    mpq_mul(t.get_mpq_t(), a[0].get_mpq_t(), b[0].get_mpq_t());
    mpq_add(dst[0].get_mpq_t(), dst[0].get_mpq_t(), t.get_mpq_t());
    return;
  }
  thread_local RatPoly t;
  t.resize(static_cast<std::size_t>(degree_));
  mul(a, b, t);
  for (std::size_t i = 0; i < t.size(); ++i) dst[i] += t[i];
}

void FieldSpec::inverse(std::span<const Rational> a, std::span<Rational> out) const {
  if (is_zero(a)) throw Error("division by zero in field Q(2cos(pi/" + std::to_string(M_) + "))");
  if (degree_ == 1) {
    mpq_inv(out[0].get_mpq_t(), a[0].get_mpq_t());
    return;
  }
  // Solve (multiplication by a) * u = 1 on the power basis.
  const std::size_t d = static_cast<std::size_t>(degree_);
  std::vector<RatPoly> rows(d, RatPoly(d + 1, 0));
  RatPoly basis(d, 0), col(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    std::fill(basis.begin(), basis.end(), 0);
    basis[j] = 1;
    mul(a, basis, col);
    for (std::size_t i = 0; i < d; ++i) rows[i][j] = col[i];
  }
  rows[0][d] = 1;
  const auto pivots = small_rref(rows, d + 1);
  if (pivots.size() != d || pivots.back() != d - 1) throw InternalError("field inverse: singular multiplication map");
  for (std::size_t i = 0; i < d; ++i) out[i] = rows[i][d];
}

std::vector<Rational> FieldSpec::reduce(std::vector<Rational> poly) const {
  if (poly.size() < static_cast<std::size_t>(degree_)) {
    poly.resize(static_cast<std::size_t>(degree_), 0);
    return poly;
  }
  return reduce_mod(std::move(poly), minpoly_q_);
}

const FieldSpec& field_for(int M) {
  if (M < 1) throw Error("field_for: M must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FieldSpec>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[M];
  if (!slot) slot.reset(new FieldSpec(M));
  return *slot;
}

const FieldSpec& common_field(const FieldSpec& a, const FieldSpec& b) {
  if (&a == &b) return a;
  if (embeds_into(a, b)) return b;
  if (embeds_into(b, a)) return a;
  return field_for(std::lcm(a.M(), b.M()));
}

bool embeds_into(const FieldSpec& from, const FieldSpec& to) {
  return from.is_rational() || to.M() % from.M() == 0;
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(const FieldSpec& field)
    : field_(&field), coeffs_(static_cast<std::size_t>(field.degree()), 0) {}

FieldElement::FieldElement(const FieldSpec& field, const Rational& value) : FieldElement(field) {
  coeffs_[0] = value;
}

FieldElement::FieldElement(const FieldSpec& field, std::vector<Rational> coeffs)
    : field_(&field), coeffs_(field.reduce(std::move(coeffs))) {}

FieldElement FieldElement::generator(const FieldSpec& field) {
  if (field.is_rational()) return FieldElement(field, Rational(-field.minpoly()[0]));
  std::vector<Rational> c(static_cast<std::size_t>(field.degree()), 0);
  c[1] = 1;
  return FieldElement(field, std::move(c));
}

bool FieldElement::is_zero() const { return field_->is_zero(coeffs_); }

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

double FieldElement::to_double() const {
  const double y = field_->generator_value();
  double acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * y + coeffs_[k].get_d();
  return acc;
}

std::string FieldElement::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str() << (k > 0 ? "*" : "");
    if (k > 0) os << "y";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

void FieldElement::require_same_field(const FieldElement& other) const {
  if (field_ != other.field_) throw Error("field mismatch in FieldElement arithmetic");
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(rhs);
  std::vector<Rational> out(coeffs_.size());
  field_->mul(coeffs_, rhs.coeffs_, out);
  coeffs_ = std::move(out);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) { return *this *= rhs.inverse(); }

FieldElement FieldElement::operator-() const {
  FieldElement out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

FieldElement FieldElement::inverse() const {
  FieldElement out(*field_);
  field_->inverse(coeffs_, out.coeffs_);
  return out;
}

FieldElement FieldElement::pow(unsigned e) const {
  FieldElement result(*field_, 1);
  FieldElement base(*this);
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

FieldElement embed_cos(int m, const FieldSpec& field) {
  switch (m) {
    case 0: return FieldElement(field, 2);   // infinite label
    case 1: return FieldElement(field, -2);
    case 2: return FieldElement(field, 0);
    case 3: return FieldElement(field, 1);
    default: break;
  }
  if (m < 0 || field.M() % m != 0) {
    throw Error("embed_cos: " + std::to_string(m) + " does not divide M = " + std::to_string(field.M()));
  }
  // 2cos(k*theta) = y * 2cos((k-1)*theta) - 2cos((k-2)*theta) with y = 2cos(theta).
  const int k = field.M() / m;
  const FieldElement y = FieldElement::generator(field);
  FieldElement prev(field, 2);
  FieldElement cur = y;
  for (int i = 1; i < k; ++i) {
    FieldElement next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

FieldElement embed(const FieldElement& x, const FieldSpec& target) {
  if (&x.field() == &target) return x;
  if (x.is_rational()) return FieldElement(target, x.coeffs()[0]);
  if (!embeds_into(x.field(), target)) {
    throw Error("cannot embed Q(2cos(pi/" + std::to_string(x.field().M()) + ")) into Q(2cos(pi/" +
                std::to_string(target.M()) + "))");
  }
  const FieldElement y = embed_cos(x.field().M(), target);
  FieldElement acc(target);
  const auto c = x.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * y + FieldElement(target, c[k]);
  }
  return acc;
}

}  // namespace coxcoh
