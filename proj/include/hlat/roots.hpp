#pragma once

// Norm-2 roots, their ADE decomposition, Dynkin-diagram checks, a small
// catalog of reference lattices and invariant-based identification.

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlat/charvec.hpp"
#include "hlat/gram.hpp"
#include "hlat/lattice.hpp"

namespace hlat {

enum class RootType : char { A = 'A', D = 'D', E = 'E' };

/// Edges of the Dynkin diagram of type (t, n), nodes 0..n-1.
/// A_n: a path. D_n: path 0..n-3 with node n-3 joined to n-2 and n-1.
/// E_n (n = 6, 7, 8): path 0-2-3-4-...-(n-1) with node 1 joined to node 3.
inline std::vector<std::pair<std::size_t, std::size_t>> dynkin_edges(RootType t, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  switch (t) {
    case RootType::A:
      if (n < 1) throw InputError("A_n needs n >= 1");
      for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
    case RootType::D:
      if (n < 2) throw InputError("D_n needs n >= 2");
      if (n == 2) break;
      for (std::size_t i = 0; i + 3 < n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 3, n - 2);
      e.emplace_back(n - 3, n - 1);
      break;
    case RootType::E:
      if (n < 6 || n > 8) throw InputError("E_n needs 6 <= n <= 8");
      e.emplace_back(0, 2);
      e.emplace_back(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
  }
  return e;
}

/// Roots in an irreducible system of the given type.
inline Int root_count(RootType t, Int n) {
  switch (t) {
    case RootType::A: return n * (n + 1);
    case RootType::D: return 2 * n * (n - 1);
    case RootType::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Catalog

/// Cartan-type Gram: 2 on the diagonal, -1 on diagram edges.
inline GramMatrix root_lattice_gram(RootType t, std::size_t n) {
  IntMatrix m(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 2;
  for (auto [i, j] : dynkin_edges(t, n)) m(i, j) = m(j, i) = -1;
  return GramMatrix(std::move(m));
}

/// Basis of the lattice spanned by integer generator rows (integer echelon
/// form by Euclidean row operations).
inline std::vector<std::vector<Int>> lattice_basis(std::vector<std::vector<Int>> rows) {
  if (rows.empty()) return {};
  const std::size_t dim = rows.front().size();
  std::vector<std::vector<BigInt>> m;
  for (const auto& r : rows) {
    if (r.size() != dim) throw InputError("generators of differing dimension");
    m.emplace_back(r.begin(), r.end());
  }
  std::size_t top = 0;
  for (std::size_t col = 0; col < dim && top < m.size(); ++col) {
    for (;;) {
      std::size_t piv = m.size();
      for (std::size_t i = top; i < m.size(); ++i)
        if (m[i][col] != 0 && (piv == m.size() || abs(m[i][col]) < abs(m[piv][col]))) piv = i;
      if (piv == m.size()) break;
      std::swap(m[piv], m[top]);
      bool clean = true;
      for (std::size_t i = top + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        const BigInt q = m[i][col] / m[top][col];
        for (std::size_t j = col; j < dim; ++j) m[i][j] -= q * m[top][j];
        if (m[i][col] != 0) clean = false;
      }
      if (clean) {
        ++top;
        break;
      }
    }
  }
  std::vector<std::vector<Int>> basis;
  for (std::size_t i = 0; i < top; ++i) {
    std::vector<Int> r(dim);
    for (std::size_t j = 0; j < dim; ++j) r[j] = checked::narrow(m[i][j]);
    basis.push_back(std::move(r));
  }
  return basis;
}

/// Gram of row vectors given in coordinates scaled by `scale`: entries dot/scale^2.
inline GramMatrix gram_of_scaled_rows(const std::vector<std::vector<Int>>& rows, Int scale) {
  const Int s2 = scale * scale;
  IntMatrix m(rows.size(), rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) {
      Int dot = 0;
      for (std::size_t k = 0; k < rows[i].size(); ++k) checked::fma(dot, rows[i][k], rows[j][k]);
      if (dot % s2 != 0) throw InternalError("scaled rows are not integral");
      m(i, j) = dot / s2;
    }
  return GramMatrix(std::move(m));
}

/// Gamma_{4m}: all-integer or all-half-integer vectors in R^{4m} with even
/// coordinate sum. Basis g = (v_1 + ... + v_{4m})/2, v_1 + v_2 and
/// v_i - v_{i-1} for i = 2..4m-1, held in doubled coordinates.
inline GramMatrix gamma_gram(Int dim) {
  if (dim < 4 || dim % 4 != 0) throw InputError("Gamma lattices exist in ranks divisible by 4");
  const auto n = static_cast<std::size_t>(dim);
  std::vector<std::vector<Int>> rows;
  rows.emplace_back(n, 1);
  std::vector<Int> r(n, 0);
  r[0] = r[1] = 2;
  rows.push_back(r);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    std::vector<Int> v(n, 0);
    v[i] = 2;
    v[i - 1] = -2;
    rows.push_back(v);
  }
  GramMatrix g = gram_of_scaled_rows(rows, 2);
  if (determinant(g) != 1) throw InternalError("Gamma basis is not unimodular");
  return g;
}

/// The odd unimodular lattice D8 + D8 glued by (s, v) and (v, s), where s is
/// the half-spinor class (1/2, ..., 1/2) and v the vector class (1, 0, ..., 0).
inline GramMatrix d8_squared_glue_gram() {
  std::vector<std::vector<Int>> gens;
  for (std::size_t block = 0; block < 2; ++block) {
    const std::size_t o = 8 * block;
    for (std::size_t i = 0; i + 1 < 8; ++i) {
      std::vector<Int> v(16, 0);
      v[o + i] = 2;
      v[o + i + 1] = -2;
      gens.push_back(v);
    }
    std::vector<Int> v(16, 0);
    v[o + 6] = v[o + 7] = 2;
    gens.push_back(v);
  }
  for (std::size_t block = 0; block < 2; ++block) {
    std::vector<Int> v(16, 0);
    const std::size_t s = 8 * block, t = 8 * (1 - block);
    for (std::size_t i = 0; i < 8; ++i) v[s + i] = 1;
    v[t] = 2;
    gens.push_back(v);
  }
  GramMatrix g = gram_of_scaled_rows(lattice_basis(gens), 2);
  if (g.rank() != 16 || determinant(g) != 1) throw InternalError("glued D8^2 is not unimodular of rank 16");
  return g;
}

/// Catalog names: I<k>, A<n>, D<n>, E6, E7, E8, Gamma<4m>, D8^2[(12)],
/// and '+'-joined direct sums of these, e.g. "Gamma8+I4".
inline GramMatrix catalog_gram(const std::string& name) {
  const auto plus = name.find('+');
  if (plus != std::string::npos)
    return direct_sum(catalog_gram(name.substr(0, plus)), catalog_gram(name.substr(plus + 1)));
  if (name == "D8^2[(12)]") return d8_squared_glue_gram();

  std::size_t digits = name.size();
  while (digits > 0 && std::isdigit(static_cast<unsigned char>(name[digits - 1]))) --digits;
  const std::string head = name.substr(0, digits);
  if (digits == name.size() || name.size() - digits > 6) throw InputError("unknown catalog lattice '" + name + "'");
  const Int k = std::stoll(name.substr(digits));
  if (k < 1) throw InputError("catalog parameter must be >= 1 in '" + name + "'");
  const auto n = static_cast<std::size_t>(k);
  if (head == "I") return identity_gram(n);
  if (head == "A") return root_lattice_gram(RootType::A, n);
  if (head == "D") return root_lattice_gram(RootType::D, n);
  if (head == "E") return root_lattice_gram(RootType::E, n);
  if (head == "Gamma") return gamma_gram(k);
  throw InputError("unknown catalog lattice '" + name + "'");
}

// ---------------------------------------------------------------------------
// Roots

inline EnumerationResult root_vectors(const Enumerator& en, const EnumerationOptions& opt = {}) {
  auto all = en.short_vectors(2, opt);
  EnumerationResult roots;
  roots.bound = 2;
  roots.nodes = all.nodes;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all.norms[i] == 2) {
      roots.vectors.push_back(std::move(all.vectors[i]));
      roots.norms.push_back(2);
    }
  return roots;
}

inline EnumerationResult root_vectors(const GramMatrix& g, const EnumerationOptions& opt = {}) {
  return root_vectors(Enumerator(g), opt);
}

struct RootComponent {
  RootType type;
  Int rank;
  Int roots;
  friend bool operator==(const RootComponent&, const RootComponent&) = default;
  std::string label() const { return std::string(1, static_cast<char>(type)) + std::to_string(rank); }
};

struct RootSystemReport {
  std::vector<RootComponent> components;  // sorted: type, then rank descending
  Int total_roots = 0;
  Int spanning_rank = 0;

  std::string label() const {
    if (components.empty()) return "0";
    std::string s;
    for (const auto& c : components) s += (s.empty() ? "" : "+") + c.label();
    return s;
  }
  friend bool operator==(const RootSystemReport&, const RootSystemReport&) = default;
};

/// Rank of a set of integer vectors (fraction-free elimination).
inline Int integer_rank(const std::vector<LatticeVector>& vs) {
  if (vs.empty()) return 0;
  std::vector<std::vector<BigInt>> m;
  for (const auto& v : vs) m.emplace_back(v.begin(), v.end());
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const BigInt a = m[r][c], b = m[i][c];
      const BigInt g = gcd(a, b);
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * (a / g) - m[r][j] * (b / g);
    }
    ++r;
  }
  return static_cast<Int>(r);
}

/// Witt decomposition of the root sublattice: connected components of the
/// graph on roots with edges where the inner product is nonzero, each typed by
/// the rank of its span and its root count. D_3 is reported as A_3.
inline RootSystemReport root_system(const GramMatrix& g, const EnumerationResult& roots) {
  const std::size_t k = roots.size();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<std::vector<Int>> gv;
  gv.reserve(k);
  for (const auto& v : roots.vectors) gv.push_back(gram_times(g, v));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Int ip = 0;
      for (std::size_t c = 0; c < g.rank(); ++c) checked::fma(ip, gv[i][c], roots.vectors[j][c]);
      if (ip != 0) parent[find(i)] = find(j);
    }

  std::map<std::size_t, std::vector<LatticeVector>> classes;
  for (std::size_t i = 0; i < k; ++i) classes[find(i)].push_back(roots.vectors[i]);

  RootSystemReport rep;
  for (const auto& [root, members] : classes) {
    const Int r = integer_rank(members);
    const Int count = 2 * static_cast<Int>(members.size());
    std::optional<RootType> t;
    if (count == root_count(RootType::A, r))
      t = RootType::A;
    else if (r >= 4 && count == root_count(RootType::D, r))
      t = RootType::D;
    else if (r >= 6 && r <= 8 && count == root_count(RootType::E, r))
      t = RootType::E;
    if (!t)
      throw InternalError("root component of rank " + std::to_string(r) + " with " + std::to_string(count) +
                          " roots is not of type A, D or E");
    rep.components.push_back({*t, r, count});
    rep.total_roots += count;
  }
  std::sort(rep.components.begin(), rep.components.end(), [](const RootComponent& a, const RootComponent& b) {
    if (a.type != b.type) return a.type < b.type;
    return a.rank > b.rank;
  });
  rep.spanning_rank = integer_rank(roots.vectors);
  return rep;
}

inline RootSystemReport root_system(const GramMatrix& g, const EnumerationOptions& opt = {}) {
  return root_system(g, root_vectors(g, opt));
}

/// True iff all vectors have norm 2 and |(v_i, v_j)| is 1 exactly on the
/// diagram edges and 0 elsewhere. Dynkin diagrams are trees, so sign flips of
/// the v_i reach any sign pattern on the edges; the +1 and -1 conventions agree.
inline bool check_dynkin(const GramMatrix& g, const std::vector<LatticeVector>& vs, RootType t, std::size_t n) {
  if (vs.size() != n) return false;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [i, j] : dynkin_edges(t, n)) adj[i][j] = adj[j][i] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (vs[i].size() != g.rank() || norm(g, vs[i]) != 2) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Int ip = inner(g, vs[i], vs[j]);
      if (adj[i][j] ? (ip != 1 && ip != -1) : ip != 0) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Fingerprints

struct Fingerprint {
  std::size_t rank = 0;
  bool odd = false;
  BigInt determinant;
  Int defect = 0;
  Int mu = 0;
  RootSystemReport root_system;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const GramMatrix& g, const EnumerationOptions& opt = {}) {
  const auto v = require(g, Expect::unimodular);
  const Enumerator en(g);
  const auto cr = min_characteristic(en, opt);
  Fingerprint f;
  f.rank = g.rank();
  f.odd = v.odd;
  f.determinant = v.determinant;
  f.defect = cr.defect;
  f.mu = cr.mu;
  f.root_system = root_system(g, root_vectors(en, opt));
  return f;
}

/// Reference lattices of a given rank (<= 16) that identify() can name.
inline std::vector<std::string> reference_names(std::size_t rank) {
  std::vector<std::string> names{"I" + std::to_string(rank)};
  auto with_units = [&](const std::string& base, std::size_t base_rank) {
    if (rank == base_rank)
      names.push_back(base);
    else if (rank > base_rank)
      names.push_back(base + "+I" + std::to_string(rank - base_rank));
  };
  with_units("Gamma8", 8);
  with_units("Gamma12", 12);
  if (rank == 16) {
    names.push_back("Gamma8+Gamma8");
    names.push_back("Gamma16");
    names.push_back("D8^2[(12)]");
  }
  return names;
}

namespace detail {
inline const std::vector<std::pair<std::string, Fingerprint>>& reference_fingerprints(std::size_t rank) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<std::pair<std::string, Fingerprint>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(rank);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<std::string, Fingerprint>> entries;
  for (const auto& name : reference_names(rank)) entries.emplace_back(name, fingerprint(catalog_gram(name)));
  return cache.emplace(rank, std::move(entries)).first->second;
}
}  // namespace detail

/// Name of the unique reference lattice whose fingerprint equals G's, or
/// "unrecognized". Fingerprints are invariants, not an isometry test.
inline std::string identify(const GramMatrix& g, const EnumerationOptions& opt = {}) {
  if (g.rank() > 16 || g.rank() == 0) return "unrecognized";
  const Fingerprint f = fingerprint(g, opt);
  std::string match;
  int hits = 0;
  for (const auto& [name, ref] : detail::reference_fingerprints(g.rank()))
    if (ref == f) {
      match = name;
      ++hits;
    }
  return hits == 1 ? match : "unrecognized";
}

inline RootType parse_root_type(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return RootType::A;
    case 'D': return RootType::D;
    case 'E': return RootType::E;
  }
  throw InputError(std::string("unknown root system type '") + c + "'");
}

}  // namespace hlat
