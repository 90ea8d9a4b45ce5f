#include "coxcoh/tor.hpp"

#include <algorithm>
#include <memory>

namespace coxcoh {

MBasis::MBasis(int m) : m_(m) {
  if (m < 1) throw Error("the number of variables must be positive");
  for (int a = 0; a < m; ++a) monomials_.emplace_back(a, -1);
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) monomials_.emplace_back(a, b);
}

std::size_t MBasis::quadratic(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (a < 0 || b >= m_) throw Error("variable out of range");
  // pairs (a', b') with a' < a come first: sum_{a'<a} (m - a')
  const std::size_t before = static_cast<std::size_t>(a * m_ - a * (a - 1) / 2);
  return static_cast<std::size_t>(m_) + before + static_cast<std::size_t>(b - a);
}

std::optional<std::size_t> MBasis::product(std::size_t p, std::size_t q) const {
  if (degree(p) != 1 || degree(q) != 1) return std::nullopt;
  return quadratic(monomials_[p].first, monomials_[q].first);
}

std::string MBasis::name(std::size_t idx) const {
  const auto [a, b] = monomial(idx);
  if (b < 0) return "x" + std::to_string(a + 1);
  if (a == b) return "x" + std::to_string(a + 1) + "^2";
  return "x" + std::to_string(a + 1) + "x" + std::to_string(b + 1);
}

std::size_t TorComplex::dim(int i) const {
  auto it = dims.find(i);
  return it == dims.end() ? 0 : it->second;
}

std::size_t TorComplex::tuple_index(const std::vector<std::size_t>& factors) const {
  std::size_t idx = 0;
  for (std::size_t f : factors) idx = idx * basis.dim() + f;
  return idx;
}

std::vector<std::size_t> TorComplex::tuple(std::size_t index, int i) const {
  std::vector<std::size_t> out(static_cast<std::size_t>(i));
  for (std::size_t a = out.size(); a-- > 0;) {
    out[a] = index % basis.dim();
    index /= basis.dim();
  }
  return out;
}

std::vector<std::size_t> TorComplex::homology() const {
  std::map<int, std::size_t> ranks;
  for (const auto& [i, b] : boundaries) ranks[i] = exact_rank(b);
  std::vector<std::size_t> out;
  for (int i = 1; i <= i_max; ++i) {
    const std::size_t out_rank = ranks.count(i) ? ranks.at(i) : 0;
    const std::size_t in_rank = ranks.count(i + 1) ? ranks.at(i + 1) : 0;
    out.push_back(dim(i) - out_rank - in_rank);
  }
  return out;
}

TorComplex tor_complex(int m, int i_max) {
  if (m < 1 || m > 3) throw Error("tor_complex needs 1 <= m <= 3");
  if (i_max < 1 || i_max > 6) throw Error("tor_complex needs 1 <= i_max <= 6");
  TorComplex c;
  c.basis = MBasis(m);
  c.i_max = i_max;
  const std::size_t d = c.basis.dim();
  std::size_t size = 1;
  for (int i = 1; i <= i_max + 1; ++i) {
    size *= d;
    c.dims[i] = size;
  }
  // about i - 1 entries per column of the top boundary
  charge_matrix_bytes(c.dims[i_max + 1] * static_cast<std::size_t>(i_max) * 96,
                      "tor complex for m = " + std::to_string(m) + ", i_max = " + std::to_string(i_max));

  for (int i = 2; i <= i_max + 1; ++i) {
    SparseMatrix b(rationals(), c.dims[i - 1], c.dims[i]);
    for (std::size_t col = 0; col < c.dims[i]; ++col) {
      const auto factors = c.tuple(col, i);
      std::vector<std::pair<std::size_t, long>> entries;
      for (int a = 1; a <= i - 1; ++a) {
        const auto p = c.basis.product(factors[static_cast<std::size_t>(a - 1)], factors[static_cast<std::size_t>(a)]);
        if (!p) continue;
        std::vector<std::size_t> merged(factors.begin(), factors.begin() + (a - 1));
        merged.push_back(*p);
        merged.insert(merged.end(), factors.begin() + a + 1, factors.end());
        entries.emplace_back(c.tuple_index(merged), a % 2 ? -1 : 1);
      }
      std::sort(entries.begin(), entries.end());
      for (std::size_t e = 0; e < entries.size(); ++e) {
        long v = entries[e].second;
        while (e + 1 < entries.size() && entries[e + 1].first == entries[e].first) v += entries[++e].second;
        if (v != 0) b.push(entries[e].first, col, Rational(v));
      }
    }
    c.boundaries.emplace(i, std::move(b));
  }
  for (int i = 3; i <= i_max + 1; ++i)
    if ((c.boundaries.at(i - 1) * c.boundaries.at(i)).nonzeros() != 0)
      throw InternalError("tor boundary squares to a nonzero map out of degree " + std::to_string(i));
  return c;
}

IndependentSet sigma_to_set(const std::vector<int>& sigma) {
  IndependentSet t;
  for (int h : sigma) {
    int before = 0;
    for (int x : sigma) before += (x < h) ? 1 : 0;
    t.members.push_back(static_cast<std::size_t>(h + before - 1));
  }
  std::sort(t.members.begin(), t.members.end());
  return t;
}

std::vector<SigmaBlock> msum_blocks(int i) {
  if (i < 1 || i > 6) throw Error("msum_blocks needs 1 <= i <= 6");
  std::vector<SigmaBlock> out;
  for (int j = 0; j <= i; ++j) {
    std::vector<bool> pick(static_cast<std::size_t>(i), false);
    std::fill(pick.begin(), pick.begin() + j, true);
    do {
      SigmaBlock b;
      b.i = i;
      b.j = j;
      for (int h = 1; h <= i; ++h)
        if (pick[static_cast<std::size_t>(h - 1)]) b.sigma.push_back(h);
      b.t = sigma_to_set(b.sigma);
      if (!is_independent(type_a(static_cast<std::size_t>(i + j - 1)), b.t.members))
        throw InternalError("T_Sigma is not a set of disjoint transpositions");
      out.push_back(std::move(b));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

bool msum_dimension_identity(int m, int i) {
  const MBasis basis(m);
  const std::size_t quad = basis.dim() - static_cast<std::size_t>(m);
  std::size_t lhs = 0;
  for (const auto& b : msum_blocks(i)) {
    std::size_t term = 1;
    for (int a = 0; a < i - b.j; ++a) term *= static_cast<std::size_t>(m);
    for (int a = 0; a < b.j; ++a) term *= quad;
    lhs += term;
  }
  std::size_t rhs = 1;
  for (int a = 0; a < i; ++a) rhs *= basis.dim();
  return lhs == rhs;
}

namespace {

// X(A_{N-1}, V^{⊗N}) for N = 1..2 i_max, restricted to the degrees j with
// 1 <= N - j <= i_max.
std::map<int, CoxeterComplex> coxeter_side(int m, int i_max) {
  std::map<int, CoxeterComplex> out;
  for (int n = 1; n <= 2 * i_max; ++n) {
    const int lo = std::max(0, n - i_max), hi = n / 2;
    if (lo > hi) continue;
    BuildOptions options;
    options.window = std::make_pair(lo, hi);
    const CoxeterGraph g = type_a(static_cast<std::size_t>(n - 1));
    out.emplace(n, build_coxeter_complex(tensor_power_rep(g, static_cast<std::size_t>(m)), options));
  }
  return out;
}

struct Piece {
  int n;
  int j;
  std::size_t offset;
};

// Tor degree i of the assembled complex: the pieces X^j(A_{i+j-1}), j = 0..i.
std::vector<Piece> pieces(const std::map<int, CoxeterComplex>& side, int i) {
  std::vector<Piece> out;
  std::size_t offset = 0;
  for (int j = 0; j <= i; ++j) {
    auto it = side.find(i + j);
    if (it == side.end()) continue;
    out.push_back({i + j, j, offset});
    offset += it->second.complex.dim(j);
  }
  return out;
}

std::size_t pieces_dim(const std::map<int, CoxeterComplex>& side, const std::vector<Piece>& list) {
  std::size_t d = 0;
  for (const auto& p : list) d += side.at(p.n).complex.dim(p.j);
  return d;
}

}  // namespace

PhiTorReport phi_tor(int m, int i_max) {
  const TorComplex tor = tor_complex(m, i_max);
  const auto side = coxeter_side(m, i_max);
  const FieldSpec& q = rationals();
  const std::size_t mm = static_cast<std::size_t>(m);

  PhiTorReport report;
  report.m = m;
  report.i_max = i_max;
  std::map<int, SparseMatrix> phi, diff;
  std::map<int, std::vector<Piece>> layout;
  for (int i = 1; i <= i_max; ++i) {
    layout[i] = pieces(side, i);
    report.tor_dims.push_back(tor.dim(i));
    report.coxeter_dims.push_back(pieces_dim(side, layout[i]));
  }

  for (int i = 1; i <= i_max; ++i) {
    const auto& list = layout[i];
    SparseMatrix f(q, tor.dim(i), pieces_dim(side, list));
    for (const auto& piece : list) {
      const CoxeterComplex& x = side.at(piece.n);
      auto blocks = x.blocks.find(piece.j);
      if (blocks == x.blocks.end()) continue;
      const std::size_t n = static_cast<std::size_t>(piece.n);
      for (const auto& block : blocks->second) {
        long ksum = 0;
        for (std::size_t t : block.t.members) ksum += static_cast<long>(t) + 1;
        const Rational scale(ksum % 2 ? -1 : 1, 1L << piece.j);
        const ExactMatrix& basis = block.invariants.columns();
        for (std::size_t col = 0; col < basis.cols(); ++col) {
          std::map<std::size_t, Rational> image;
          for (std::size_t row = 0; row < basis.rows(); ++row) {
            if (basis.is_zero(row, col)) continue;
            std::vector<std::size_t> digits(n);
            std::size_t r = row;
            for (std::size_t a = n; a-- > 0;) {
              digits[a] = r % mm;
              r /= mm;
            }
            std::vector<std::size_t> factors;
            for (std::size_t pos = 0; pos < n;) {
              if (block.t.contains(pos)) {
                factors.push_back(tor.basis.quadratic(static_cast<int>(digits[pos]), static_cast<int>(digits[pos + 1])));
                pos += 2;
              } else {
                factors.push_back(tor.basis.linear(static_cast<int>(digits[pos])));
                pos += 1;
              }
            }
            image[tor.tuple_index(factors)] += basis.entry(row, col)[0];
          }
          for (const auto& [idx, v] : image)
            if (sgn(v) != 0) f.push(idx, piece.offset + block.offset + col, v * scale);
        }
      }
    }
    phi.emplace(i, std::move(f));

    // D_i: piece (i, j) -> piece (i - 1, j + 1) through the Coxeter differential.
    if (i >= 2) {
      const auto& below = layout[i - 1];
      SparseMatrix d(q, pieces_dim(side, below), pieces_dim(side, list));
      for (const auto& piece : list) {
        const CoxeterComplex& x = side.at(piece.n);
        auto target = std::find_if(below.begin(), below.end(),
                                   [&](const Piece& p) { return p.n == piece.n && p.j == piece.j + 1; });
        const std::size_t src_dim = x.complex.dim(piece.j);
        if (target == below.end() || x.complex.dim(piece.j + 1) == 0) continue;
        const ExactMatrix dx = x.complex.differential(piece.j);
        for (std::size_t c = 0; c < src_dim; ++c)
          for (std::size_t r = 0; r < dx.rows(); ++r)
            if (!dx.is_zero(r, c)) d.push(target->offset + r, piece.offset + c, dx.entry(r, c)[0]);
      }
      diff.emplace(i, std::move(d));
    }
  }

  report.chain_map = true;
  report.anticommutes = true;
  for (int i = 2; i <= i_max; ++i) {
    const SparseMatrix lhs = phi.at(i - 1) * diff.at(i);
    const SparseMatrix rhs = tor.boundaries.at(i) * phi.at(i);
    if (!(lhs == rhs)) report.chain_map = false;
    if (!(lhs == rhs.scaled(Rational(-1)))) report.anticommutes = false;
  }
  report.bijective = true;
  for (const auto& [i, f] : phi)
    if (f.rows() != f.cols() || exact_rank(f) != f.cols()) {
      report.bijective = false;
      report.detail = "phi is not bijective in degree " + std::to_string(i);
    }
  if (!report.chain_map && !report.anticommutes)
    throw InternalError("phi_tor is not a chain map for m = " + std::to_string(m));
  if (report.bijective)
    report.detail = report.chain_map ? "bijective chain map" : "bijective, anticommutes with the differentials";
  return report;
}

TorComparison compare_tor(int m, int i_max, const RankOptions& options) {
  TorComparison report;
  report.m = m;
  report.i_max = i_max;
  report.tor = tor_complex(m, i_max).homology();
  report.coxeter.assign(static_cast<std::size_t>(i_max), 0);
  report.contributions.resize(static_cast<std::size_t>(i_max));
  bool probabilistic = false;
  for (const auto& [n, x] : coxeter_side(m, i_max)) {
    const CohomologyReport h = coxeter_cohomology(x, options);
    probabilistic = probabilistic || h.probabilistic;
    report.primes_agreed = report.primes_agreed && h.primes_agreed;
    for (std::size_t a = 0; a < h.degrees.size(); ++a) {
      const int j = h.degrees[a];
      const int i = n - j;
      if (i < 1 || i > i_max || j > i) continue;
      report.coxeter[static_cast<std::size_t>(i - 1)] += h.h_dims[a];
      if (h.h_dims[a] != 0) report.contributions[static_cast<std::size_t>(i - 1)].emplace_back(j, h.h_dims[a]);
    }
  }
  for (auto& list : report.contributions) std::sort(list.begin(), list.end());
  report.match = report.tor == report.coxeter;
  report.mode = probabilistic ? "modular" : "exact";
  return report;
}

}  // namespace coxcoh
