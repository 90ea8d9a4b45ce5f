#include "coxcoh/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace coxcoh {

CoxeterGraph::CoxeterGraph(std::size_t n, std::string name)
    : n_(n), labels_(n * n, 2), name_(std::move(name)) {
  for (std::size_t i = 0; i < n; ++i) labels_[i * n + i] = 1;
}

int CoxeterGraph::label(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw Error("generator index out of range");
  return labels_[i * n_ + j];
}

void CoxeterGraph::set_label(std::size_t i, std::size_t j, int m) {
  if (i >= n_ || j >= n_ || i == j) throw Error("set_label: bad generator pair");
  if (m != kInfiniteLabel && m < 2) throw Error("edge label must be >= 2 or infinite");
  labels_[i * n_ + j] = m;
  labels_[j * n_ + i] = m;
}

std::vector<std::size_t> CoxeterGraph::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j)
    if (adjacent(i, j)) out.push_back(j);
  return out;
}

bool CoxeterGraph::has_infinite_label() const {
  return std::find(labels_.begin(), labels_.end(), kInfiniteLabel) != labels_.end();
}

int CoxeterGraph::field_modulus() const {
  int M = 1;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      const int m = label(i, j);
      if (m >= 4) M = std::lcm(M, m);
    }
  return M;
}

std::string CoxeterGraph::edge_string() const {
  std::ostringstream os;
  os << "n=" << n_;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      const int m = label(i, j);
      if (m == 2) continue;
      os << " " << generator_name(i) << "-" << generator_name(j) << ":";
      if (m == kInfiniteLabel)
        os << "inf";
      else
        os << m;
    }
  return os.str();
}

std::string generator_name(std::size_t i) { return "s" + std::to_string(i + 1); }

bool IndependentSet::contains(std::size_t s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

IndependentSet IndependentSet::with(std::size_t s) const {
  IndependentSet out = *this;
  auto it = std::lower_bound(out.members.begin(), out.members.end(), s);
  if (it == out.members.end() || *it != s) out.members.insert(it, s);
  return out;
}

IndependentSet IndependentSet::without(std::size_t s) const {
  IndependentSet out = *this;
  out.members.erase(std::remove(out.members.begin(), out.members.end(), s), out.members.end());
  return out;
}

std::string IndependentSet::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < members.size(); ++k) out += (k ? "," : "") + generator_name(members[k]);
  return out + "}";
}

bool is_independent(const CoxeterGraph& g, const std::vector<std::size_t>& members) {
  for (std::size_t a = 0; a < members.size(); ++a) {
    if (members[a] >= g.size()) return false;
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (members[a] == members[b] || g.label(members[a], members[b]) != 2) return false;
  }
  return true;
}

namespace {

void extend(const CoxeterGraph& g, std::size_t k, std::size_t next, std::vector<std::size_t>& cur,
            std::vector<IndependentSet>& out) {
  if (cur.size() == k) {
    out.push_back({cur});
    return;
  }
  for (std::size_t v = next; v < g.size(); ++v) {
    bool ok = true;
    for (std::size_t u : cur) ok = ok && g.label(u, v) == 2;
    if (!ok) continue;
    cur.push_back(v);
    extend(g, k, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<IndependentSet> independent_sets(const CoxeterGraph& g, std::size_t k) {
  std::vector<IndependentSet> out;
  std::vector<std::size_t> cur;
  extend(g, k, 0, cur, out);
  return out;
}

std::size_t max_independent_size(const CoxeterGraph& g) {
  std::size_t k = 0;
  while (!independent_sets(g, k + 1).empty()) ++k;
  return k;
}

CoxeterGraph type_a(std::size_t n) {
  CoxeterGraph g(n, "A" + std::to_string(n));
  for (std::size_t i = 0; i + 1 < n; ++i) g.set_label(i, i + 1, 3);
  return g;
}

CoxeterGraph type_b(std::size_t n) {
  if (n < 2) throw Error("B_n needs n >= 2");
  CoxeterGraph g = type_a(n);
  g.set_label(n - 2, n - 1, 4);
  g.set_name("B" + std::to_string(n));
  return g;
}

CoxeterGraph type_d(std::size_t n) {
  if (n < 4) throw Error("D_n needs n >= 4");
  CoxeterGraph g(n, "D" + std::to_string(n));
  for (std::size_t i = 0; i + 3 < n; ++i) g.set_label(i, i + 1, 3);
  g.set_label(n - 3, n - 2, 3);
  g.set_label(n - 3, n - 1, 3);
  return g;
}

CoxeterGraph type_e(std::size_t n) {
  if (n < 6 || n > 8) throw Error("E_n needs 6 <= n <= 8");
  CoxeterGraph g(n, "E" + std::to_string(n));
  g.set_label(0, 2, 3);
  g.set_label(1, 3, 3);
  for (std::size_t i = 2; i + 1 < n; ++i) g.set_label(i, i + 1, 3);
  return g;
}

CoxeterGraph type_f4() {
  CoxeterGraph g(4, "F4");
  g.set_label(0, 1, 3);
  g.set_label(1, 2, 4);
  g.set_label(2, 3, 3);
  return g;
}

CoxeterGraph type_h(std::size_t n) {
  if (n < 2 || n > 4) throw Error("H_n needs 2 <= n <= 4");
  CoxeterGraph g = type_a(n);
  g.set_label(0, 1, 5);
  g.set_name("H" + std::to_string(n));
  return g;
}

CoxeterGraph type_i2(int p) {
  if (p < 2) throw Error("I2(p) needs p >= 2");
  CoxeterGraph g(2, "I2(" + std::to_string(p) + ")");
  g.set_label(0, 1, p);
  return g;
}

CoxeterGraph product(const CoxeterGraph& a, const CoxeterGraph& b) {
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "x" + b.name();
  CoxeterGraph g(a.size() + b.size(), name);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a.label(i, j) != 2) g.set_label(i, j, a.label(i, j));
  const std::size_t off = a.size();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (b.label(i, j) != 2) g.set_label(off + i, off + j, b.label(i, j));
  return g;
}

InducedGraph induced(const CoxeterGraph& g, std::vector<std::size_t> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  CoxeterGraph sub(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    if (vertices[a] >= g.size()) throw Error("induced: vertex out of range");
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      const int m = g.label(vertices[a], vertices[b]);
      if (m != 2) sub.set_label(a, b, m);
    }
  }
  const auto types = component_types(sub);
  bool all_known = true;
  std::string name;
  for (const auto& t : types) {
    all_known = all_known && t[0] != '?';
    name += (name.empty() ? "" : "x") + t;
  }
  if (vertices.empty()) name = "A0";
  if (all_known) sub.set_name(name);
  return {std::move(sub), std::move(vertices)};
}

ParabolicDeletion parabolic_deletions(const CoxeterGraph& g, std::size_t s) {
  if (s >= g.size()) throw Error("parabolic_deletions: generator out of range");
  std::vector<std::size_t> rest, far, b1;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (v != s) rest.push_back(v);
    if (v == s || g.adjacent(v, s))
      b1.push_back(v);
    else
      far.push_back(v);
  }
  return {induced(g, rest), induced(g, far), b1};
}

std::vector<std::string> component_types(const CoxeterGraph& g) {
  std::vector<std::string> out;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp{start};
    seen[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t w : g.neighbors(comp[k]))
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::size_t edges = 0;
    bool path = true;
    for (std::size_t v : comp) {
      const auto nb = g.neighbors(v);
      edges += nb.size();
      path = path && nb.size() <= 2;
      for (std::size_t w : nb) path = path && g.label(v, w) == 3;
    }
    path = path && edges / 2 + 1 == comp.size();
    out.push_back((path ? "A" : "?") + std::to_string(comp.size()));
  }
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    const int na = std::stoi(a.substr(1)), nb = std::stoi(b.substr(1));
    return na != nb ? na > nb : a < b;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

int parse_int(const std::string& s, const std::string& context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || s[0] == '-' || s[0] == '+')
    throw ParseError("expected a non-negative integer in " + context + ", got '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

CoxeterGraph parse_custom(const std::string& text) {
  const auto fields = split(text, ';');
  if (fields.size() != 3 || fields[0] != "custom" || fields[1].rfind("n=", 0) != 0 ||
      fields[2].rfind("edges=", 0) != 0)
    throw ParseError("custom graph must look like custom;n=N;edges=i-j:m,...");
  const int n = parse_int(fields[1].substr(2), "custom n");
  if (n < 1) throw ParseError("custom graph needs n >= 1");
  const std::string edges = fields[2].substr(6);
  if (edges.empty()) throw ParseError("custom graph has an empty edge list");
  CoxeterGraph g(static_cast<std::size_t>(n), text);
  std::vector<bool> used(static_cast<std::size_t>(n * n), false);
  for (const auto& e : split(edges, ',')) {
    const auto colon = e.find(':');
    const auto dash = e.find('-');
    if (colon == std::string::npos || dash == std::string::npos || dash > colon)
      throw ParseError("malformed edge '" + e + "'");
    const int i = parse_int(e.substr(0, dash), "edge '" + e + "'");
    const int j = parse_int(e.substr(dash + 1, colon - dash - 1), "edge '" + e + "'");
    const std::string lab = e.substr(colon + 1);
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw ParseError("bad vertices in edge '" + e + "'");
    int m = kInfiniteLabel;
    if (lab != "inf") {
      m = parse_int(lab, "edge '" + e + "'");
      if (m < 2) throw ParseError("edge label must be >= 2 in '" + e + "'");
    }
    const auto key = static_cast<std::size_t>(std::min(i, j) - 1) * n + static_cast<std::size_t>(std::max(i, j) - 1);
    if (used[key]) throw ParseError("duplicate edge '" + e + "'");
    used[key] = true;
    g.set_label(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), m);
  }
  return g;
}

CoxeterGraph parse_factor(const std::string& text) {
  if (text.empty()) throw ParseError("empty graph name");
  if (text.rfind("custom", 0) == 0) return parse_custom(text);
  if (text.rfind("I2(", 0) == 0) {
    if (text.back() != ')') throw ParseError("malformed '" + text + "'");
    const int p = parse_int(text.substr(3, text.size() - 4), "I2(p)");
    if (p < 2) throw ParseError("I2(p) needs p >= 2");
    return type_i2(p);
  }
  const char family = text[0];
  const int n = parse_int(text.substr(1), "rank of '" + text + "'");
  auto range = [&](int lo, int hi) {
    if (n < lo || n > hi)
      throw ParseError(std::string("rank of family ") + family + " must be in [" + std::to_string(lo) + ", " +
                       (hi == 1 << 20 ? std::string("inf") : std::to_string(hi)) + "], got " +
                       std::to_string(n));
  };
  constexpr int big = 1 << 20;
  const auto un = static_cast<std::size_t>(n);
  switch (family) {
    case 'A': range(1, big); return type_a(un);
    case 'B':
    case 'C': {
      range(2, big);
      CoxeterGraph g = type_b(un);
      g.set_name(std::string(1, family) + std::to_string(n));
      return g;
    }
    case 'D': range(4, big); return type_d(un);
    case 'E': range(6, 8); return type_e(un);
    case 'F': range(4, 4); return type_f4();
    case 'H': range(2, 4); return type_h(un);
    default: throw ParseError("unknown family '" + std::string(1, family) + "'");
  }
}

}  // namespace

CoxeterGraph parse_graph(const std::string& text) {
  if (text.empty()) throw ParseError("empty graph spec");
  for (char c : text)
    if (std::isspace(static_cast<unsigned char>(c))) throw ParseError("graph spec must not contain whitespace");
  const auto parts = split(text, 'x');
  CoxeterGraph g = parse_factor(parts[0]);
  for (std::size_t k = 1; k < parts.size(); ++k) g = product(g, parse_factor(parts[k]));
  if (parts.size() > 1 && g.name().empty()) g.set_name(text);
  return g;
}

}  // namespace coxcoh
