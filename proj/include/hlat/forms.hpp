#pragma once

// Hermitian forms over Z[x, x^-1] and Z[Z/n], the four-generator family L(a),
// and the transfer of a form over Z[Z/n] to an integral Gram matrix.

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hlat/gram.hpp"
#include "hlat/matrix.hpp"
#include "hlat/ring.hpp"

namespace hlat {

using Rational = boost::multiprecision::cpp_rational;
using RationalLaurentPoly = BasicLaurentPoly<Rational>;

/// Square matrix over Z[x, x^-1] with entries[j][i] = conj(entries[i][j]).
class HermitianForm {
 public:
  explicit HermitianForm(Matrix<LaurentPoly> entries) : m_(std::move(entries)) {
    if (!m_.square() || m_.rows() == 0) throw InputError("hermitian form must be a non-empty square matrix");
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (m_(j, i) != m_(i, j).conj())
          throw DomainError("matrix is not hermitian at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }

  std::size_t size() const noexcept { return m_.rows(); }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix<LaurentPoly>& matrix() const noexcept { return m_; }

  friend bool operator==(const HermitianForm& a, const HermitianForm& b) { return a.m_ == b.m_; }

 private:
  Matrix<LaurentPoly> m_;
};

/// Square matrix over Z[Z/n], hermitian under the induced involution.
class CyclicForm {
 public:
  CyclicForm(Int modulus, Matrix<CyclicElement> entries) : n_(modulus), m_(std::move(entries)) {
    if (!m_.square() || m_.rows() == 0) throw InputError("cyclic form must be a non-empty square matrix");
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        if (m_(i, j).modulus() != n_ || m_(j, i).modulus() != n_) throw InputError("cyclic form: entry modulus mismatch");
        if (m_(j, i) != m_(i, j).conj())
          throw DomainError("cyclic matrix is not hermitian at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
  }

  Int modulus() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_.rows(); }
  const CyclicElement& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix<CyclicElement>& matrix() const noexcept { return m_; }

  /// True when every entry is a constant, i.e. the form is extended from Z.
  bool is_integral() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (!m_(i, j).is_constant()) return false;
    return true;
  }

  friend bool operator==(const CyclicForm& a, const CyclicForm& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

 private:
  Int n_;
  Matrix<CyclicElement> m_;
};

/// Coordinates with respect to the module basis e_1..e_m.
template <class Elem>
using ModuleVector = std::vector<Elem>;

using CyclicVector = ModuleVector<CyclicElement>;
using LaurentVector = ModuleVector<LaurentPoly>;

/// c * e_i in Z[Z/n]^m.
inline CyclicVector basis_vector(std::size_t m, std::size_t i, Int n, const CyclicElement& c) {
  CyclicVector v(m, CyclicElement(n));
  v.at(i) = c;
  return v;
}

inline CyclicVector basis_vector(std::size_t m, std::size_t i, Int n) {
  return basis_vector(m, i, n, CyclicElement::constant(n, 1));
}

template <class Elem>
ModuleVector<Elem> operator+(ModuleVector<Elem> a, const ModuleVector<Elem>& b) {
  if (a.size() != b.size()) throw InputError("module vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] + b[i];
  return a;
}

template <class Elem>
ModuleVector<Elem> operator*(const Elem& c, ModuleVector<Elem> v) {
  for (auto& e : v) e = c * e;
  return v;
}

/// Z-coordinates of v in the basis x^j e_i ordered by generator first:
/// index i*n + j.
inline LatticeVector flatten(const CyclicVector& v) {
  if (v.empty()) return {};
  const Int n = v.front().modulus();
  LatticeVector out;
  out.reserve(v.size() * static_cast<std::size_t>(n));
  for (const auto& c : v) {
    if (c.modulus() != n) throw InputError("module vector has mixed moduli");
    out.insert(out.end(), c.coeffs().begin(), c.coeffs().end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// The family L(a)

/// L(a) with rows (1+a+a^2, a+a^2, 1+a, a), (a+a^2, 1+a+a^2, a, 1+a),
/// (1+a, a, 2, 0), (a, 1+a, 0, 2). Hermitian exactly when a is self-conjugate.
template <class C>
Matrix<BasicLaurentPoly<C>> l_matrix(const BasicLaurentPoly<C>& a) {
  using P = BasicLaurentPoly<C>;
  const P one(C(1)), two(C(2)), zero;
  const P a2 = a * a;
  Matrix<P> m(4, 4, zero);
  const P diag = one + a + a2, off = a + a2, opa = one + a;
  m(0, 0) = diag, m(0, 1) = off, m(0, 2) = opa, m(0, 3) = a;
  m(1, 0) = off, m(1, 1) = diag, m(1, 2) = a, m(1, 3) = opa;
  m(2, 0) = opa, m(2, 1) = a, m(2, 2) = two, m(2, 3) = zero;
  m(3, 0) = a, m(3, 1) = opa, m(3, 2) = zero, m(3, 3) = two;
  return m;
}

inline HermitianForm build_L_a(const LaurentPoly& a) {
  if (!a.is_self_conjugate())
    throw DomainError("substituted element " + to_string(a) + " is not self-conjugate; L(a) would not be hermitian");
  return HermitianForm(l_matrix(a));
}

/// The base form L = L(x + x^-1).
inline HermitianForm build_L() { return build_L_a(laurent_t()); }

/// b_1 = 1, b_{k+1} = 4 b_k + 1.
inline Int b_sequence(Int k) {
  if (k < 1) throw InputError("b_k is defined for k >= 1");
  Int b = 1;
  for (Int i = 1; i < k; ++i) b = checked::add(checked::mul(4, b), 1);
  return b;
}

/// L(k) = L(x^{b_k} + x^{-b_k}).
inline HermitianForm build_L_k(Int k) { return build_L_a(LaurentPoly::symmetric_power(b_sequence(k))); }

/// Entry-wise substitution x -> x^d.
inline HermitianForm substitute_power(const HermitianForm& g, Int d) {
  if (d < 1) throw InputError("substitution exponent must be positive");
  return HermitianForm(g.matrix().map([d](const LaurentPoly& p) { return p.substitute_power(d); }));
}

/// Division-free determinant over a commutative ring: Laplace expansion along
/// the last row with minors memoised by column subset. O(2^m * m) ring ops.
template <class T>
T ring_determinant(const Matrix<T>& a, const T& zero, const T& one) {
  if (!a.square()) throw InputError("determinant of a non-square matrix");
  const std::size_t m = a.rows();
  if (m > 20) throw InputError("division-free determinant limited to size 20");
  std::vector<T> minor(std::size_t{1} << m, zero);
  minor[0] = one;
  // Minors are filled in order of subset size, rows 0..k-1 against column set S.
  for (std::size_t k = 1; k <= m; ++k) {
    for (std::size_t s = 1; s < minor.size(); ++s) {
      if (static_cast<std::size_t>(__builtin_popcountll(s)) != k) continue;
      T acc = zero;
      std::size_t pos = 0;
      for (std::size_t c = 0; c < m; ++c) {
        if (!(s >> c & 1)) continue;
        const T term = a(k - 1, c) * minor[s & ~(std::size_t{1} << c)];
        acc = ((k - 1 + pos) % 2 == 0) ? acc + term : acc - term;
        ++pos;
      }
      minor[s] = acc;
    }
  }
  return minor[minor.size() - 1];
}

inline LaurentPoly form_det(const HermitianForm& g) { return ring_determinant(g.matrix(), LaurentPoly(), LaurentPoly(1)); }

/// Entry-wise augmentation x -> 1.
inline GramMatrix aug_form(const HermitianForm& g) {
  IntMatrix m(g.size(), g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) m(i, j) = g(i, j).augmentation();
  return GramMatrix(std::move(m));
}

/// Entry-wise projection to Z[Z/n].
inline CyclicForm reduce_form(const HermitianForm& g, Int n) {
  return CyclicForm(n, g.matrix().map([n](const LaurentPoly& p) { return reduce_mod(p, n); }));
}

/// <u, v> = sum_{i,j} u_i G_ij conj(v_j): linear in u, conjugate-linear in v.
template <class Elem>
Elem sesq_eval(const Matrix<Elem>& g, const ModuleVector<Elem>& u, const ModuleVector<Elem>& v, const Elem& zero) {
  if (u.size() != g.rows() || v.size() != g.rows()) throw InputError("sesquilinear evaluation: dimension mismatch");
  Elem acc = zero;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) acc = acc + u[i] * g(i, j) * conj(v[j]);
  return acc;
}

inline LaurentPoly sesq_eval(const HermitianForm& g, const LaurentVector& u, const LaurentVector& v) {
  return sesq_eval(g.matrix(), u, v, LaurentPoly());
}

inline CyclicElement sesq_eval(const CyclicForm& g, const CyclicVector& u, const CyclicVector& v) {
  return sesq_eval(g.matrix(), u, v, CyclicElement(g.modulus()));
}

/// Integral form on the Z-basis {x^j e_i}: entry ((i,j),(i',j')) is the
/// coefficient of x^{(j'-j) mod n} in G[i][i'], i.e. the identity coefficient
/// of <x^j e_i, x^{j'} e_{i'}>. Basis index is i*n + j.
inline GramMatrix transfer(const CyclicForm& g) {
  const std::size_t m = g.size();
  const Int n = g.modulus();
  const std::size_t nn = static_cast<std::size_t>(n);
  IntMatrix out(m * nn, m * nn, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t ip = 0; ip < m; ++ip)
      for (Int j = 0; j < n; ++j)
        for (Int jp = 0; jp < n; ++jp)
          out(i * nn + static_cast<std::size_t>(j), ip * nn + static_cast<std::size_t>(jp)) = g(i, ip).coeff(jp - j);
  return GramMatrix(std::move(out));
}

/// transfer(reduce_form(g, n)): the integral lattice of the n-fold cyclic cover.
inline GramMatrix transfer_gram(const HermitianForm& g, Int n) { return transfer(reduce_form(g, n)); }

/// Exact check over Q[x, x^-1] of P L(a) conj(P)^T = diag(1/2, 1/2, 2, 2)
/// with P = [[I, -B(a)/2], [0, I]] and B(a) = [[1+a, a], [a, 1+a]].
inline bool rational_congruence_check(const LaurentPoly& a) {
  if (!a.is_self_conjugate()) throw DomainError("rational congruence check needs a self-conjugate element");
  using Q = RationalLaurentPoly;
  Q qa;
  for (const auto& [e, c] : a.terms()) qa += Q::monomial(Rational(c), e);

  const Q zero, one(Rational(1)), half(Rational(1, 2)), two(Rational(2));
  const Matrix<Q> l = l_matrix(qa);
  Matrix<Q> b(2, 2, zero);
  b(0, 0) = one + qa, b(0, 1) = qa, b(1, 0) = qa, b(1, 1) = one + qa;

  Matrix<Q> p = Matrix<Q>::identity(4, zero, one);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) p(i, 2 + j) = Q() - half * b(i, j);
  Matrix<Q> p_star = p.transposed().map([](const Q& q) { return q.conj(); });

  const Matrix<Q> lhs = multiply(multiply(p, l, zero), p_star, zero);
  Matrix<Q> d(4, 4, zero);
  d(0, 0) = half, d(1, 1) = half, d(2, 2) = two, d(3, 3) = two;
  return lhs == d;
}

}  // namespace hlat
