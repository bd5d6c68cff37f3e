#pragma once

// Integral symmetric bilinear forms given by Gram matrices, and the exact
// linear algebra they need: fraction-free determinants and leading minors,
// GF(2) solves, direct sums and basis changes.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hlat/checked.hpp"
#include "hlat/errors.hpp"
#include "hlat/matrix.hpp"

namespace hlat {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = Matrix<Int>;

/// Coordinates of a lattice vector with respect to the Gram basis.
using LatticeVector = std::vector<Int>;

/// Symmetric integer matrix; symmetry is checked at construction.
class GramMatrix {
 public:
  GramMatrix() = default;
  explicit GramMatrix(IntMatrix m) : m_(std::move(m)) {
    if (!m_.square()) throw InputError("Gram matrix must be square");
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (m_(i, j) != m_(j, i))
          throw InputError("Gram matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  GramMatrix(std::initializer_list<std::initializer_list<Int>> rows)
      : GramMatrix(from_rows(std::vector<std::vector<Int>>(rows.begin(), rows.end()))) {}
  static GramMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
    IntMatrix m(rows.size(), rows.size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw InputError("Gram matrix row " + std::to_string(i) + " has wrong length");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return GramMatrix(std::move(m));
  }

  std::size_t rank() const noexcept { return m_.rows(); }
  Int operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const IntMatrix& matrix() const noexcept { return m_; }

  /// Odd iff some basis vector has odd norm.
  bool is_odd() const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (m_(i, i) % 2 != 0) return true;
    return false;
  }

  std::vector<Int> diagonal() const {
    std::vector<Int> d(rank());
    for (std::size_t i = 0; i < rank(); ++i) d[i] = m_(i, i);
    return d;
  }

  friend bool operator==(const GramMatrix& a, const GramMatrix& b) { return a.m_ == b.m_; }

 private:
  IntMatrix m_;
};

inline GramMatrix identity_gram(std::size_t k) { return GramMatrix(IntMatrix::identity(k, 0, 1)); }

inline void check_dimension(const GramMatrix& g, const LatticeVector& v) {
  if (v.size() != g.rank())
    throw InputError("vector of length " + std::to_string(v.size()) + " used with rank " + std::to_string(g.rank()) +
                     " lattice");
}

inline Int inner(const GramMatrix& g, const LatticeVector& u, const LatticeVector& v) {
  check_dimension(g, u);
  check_dimension(g, v);
  Int s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < v.size(); ++j) checked::fma(row, g(i, j), v[j]);
    checked::fma(s, u[i], row);
  }
  return s;
}

inline Int norm(const GramMatrix& g, const LatticeVector& v) { return inner(g, v, v); }

/// G * v
inline std::vector<Int> gram_times(const GramMatrix& g, const LatticeVector& v) {
  check_dimension(g, v);
  std::vector<Int> r(g.rank(), 0);
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j) checked::fma(r[i], g(i, j), v[j]);
  return r;
}

inline GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b) {
  const std::size_t n = a.rank() + b.rank();
  IntMatrix m(n, n, 0);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) m(a.rank() + i, a.rank() + j) = b(i, j);
  return GramMatrix(std::move(m));
}

/// U^T G U; the columns of U are the new basis vectors in old coordinates.
inline GramMatrix change_basis(const GramMatrix& g, const IntMatrix& u) {
  if (u.rows() != g.rank()) throw InputError("basis change: dimension mismatch");
  IntMatrix gu(g.rank(), u.cols(), 0);
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t k = 0; k < g.rank(); ++k) {
      if (g(i, k) == 0) continue;
      for (std::size_t j = 0; j < u.cols(); ++j) checked::fma(gu(i, j), g(i, k), u(k, j));
    }
  IntMatrix r(u.cols(), u.cols(), 0);
  for (std::size_t i = 0; i < u.cols(); ++i)
    for (std::size_t k = 0; k < g.rank(); ++k) {
      if (u(k, i) == 0) continue;
      for (std::size_t j = 0; j < u.cols(); ++j) checked::fma(r(i, j), u(k, i), gu(k, j));
    }
  return GramMatrix(std::move(r));
}

/// Column j of an integer matrix.
inline LatticeVector column(const IntMatrix& m, std::size_t j) {
  LatticeVector v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

/// Bareiss fraction-free elimination. Without pivoting the k-th pivot is the
/// k-th leading principal minor, so a single pass yields both the leading
/// minors (until one vanishes) and, with pivoting from there on, the determinant.
struct BareissResult {
  BigInt determinant;
  std::vector<BigInt> leading_minors;  // as many as were computed before a zero pivot
};

inline BareissResult bareiss(const IntMatrix& a) {
  if (!a.square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);

  BareissResult out;
  BigInt prev = 1;
  int sign = 1;
  bool pivoted = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      pivoted = true;
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) {
        out.determinant = 0;
        return out;
      }
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    if (!pivoted) out.leading_minors.push_back(m[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  out.determinant = n == 0 ? BigInt(1) : BigInt(sign * prev);
  return out;
}

inline BigInt determinant(const GramMatrix& g) { return bareiss(g.matrix()).determinant; }

enum class Expect { any, positive_definite, unimodular };

struct ValidationReport {
  std::size_t rank = 0;
  BigInt determinant;
  bool positive_definite = false;
  bool odd = false;
  bool unimodular() const { return determinant == 1 || determinant == -1; }
};

/// Exact structural report. Symmetry was enforced when the GramMatrix was built.
inline ValidationReport validate(const GramMatrix& g) {
  const auto b = bareiss(g.matrix());
  ValidationReport r;
  r.rank = g.rank();
  r.determinant = b.determinant;
  r.odd = g.is_odd();
  r.positive_definite = b.leading_minors.size() == g.rank() &&
                        std::all_of(b.leading_minors.begin(), b.leading_minors.end(), [](const BigInt& m) { return m > 0; });
  return r;
}

/// Throws DomainError unless the lattice satisfies `expect`.
inline ValidationReport require(const GramMatrix& g, Expect expect) {
  auto r = validate(g);
  if (expect != Expect::any && !r.positive_definite) throw DomainError("Gram matrix is not positive definite");
  if (expect == Expect::unimodular && r.determinant != 1)
    throw DomainError("Gram matrix is not unimodular (determinant " + r.determinant.str() + ")");
  return r;
}

/// Solution of A x = b over GF(2); `ok` is false when A is singular mod 2.
struct Gf2Solution {
  bool ok = false;
  std::vector<Int> x;  // entries in {0, 1}
};

inline Gf2Solution solve_mod2(const IntMatrix& a, const std::vector<Int>& b) {
  const std::size_t n = a.rows();
  if (!a.square() || b.size() != n) throw InputError("GF(2) solve: dimension mismatch");
  std::vector<std::vector<unsigned char>> m(n, std::vector<unsigned char>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<unsigned char>(mod_floor(a(i, j), 2));
    m[i][n] = static_cast<unsigned char>(mod_floor(b[i], 2));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && !m[p][col]) ++p;
    if (p == n) return {};
    std::swap(m[p], m[col]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != col && m[i][col])
        for (std::size_t j = col; j <= n; ++j) m[i][j] ^= m[col][j];
  }
  Gf2Solution s;
  s.ok = true;
  s.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.x[i] = m[i][n];
  return s;
}

/// Makes the first nonzero coordinate positive.
inline void normalize_sign(LatticeVector& v) {
  for (Int c : v) {
    if (c == 0) continue;
    if (c < 0)
      for (Int& e : v) e = -e;
    return;
  }
}

}  // namespace hlat
