#pragma once

// Characteristic vectors, defect and the standardness test for unimodular
// lattices, plus closed-form witnesses for the cyclic-cover lattices of L(a).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hlat/forms.hpp"
#include "hlat/gram.hpp"
#include "hlat/lattice.hpp"
#include "hlat/ring.hpp"

namespace hlat {

/// The characteristic vector mod 2: the unique solution of G w = diag(G) over GF(2).
inline LatticeVector char_rep(const GramMatrix& g) {
  const auto sol = solve_mod2(g.matrix(), g.diagonal());
  if (!sol.ok) throw DomainError("Gram determinant is even; no characteristic coset");
  return sol.x;
}

/// (w, e_i) = (e_i, e_i) mod 2 on every basis vector, which suffices by bilinearity.
inline bool is_characteristic(const GramMatrix& g, const LatticeVector& w) {
  const auto gw = gram_times(g, w);
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (mod_floor(checked::sub(gw[i], g(i, i)), 2) != 0) return false;
  return true;
}

struct CharReport {
  std::size_t rank = 0;
  Int min_norm = 0;
  Int defect = 0;
  Int mu = 0;                              // number of minimal characteristic vectors (not pairs)
  std::vector<LatticeVector> minimizers;   // one per +-pair, canonical order
  bool is_standard = false;
};

/// Minimal characteristic norm by coset enumeration. Characteristic norms are
/// congruent to the rank mod 8, so the radius starts at rank mod 8 and grows
/// in steps of 8 until the coset is hit.
inline CharReport min_characteristic(const Enumerator& en, const EnumerationOptions& opt = {}) {
  const GramMatrix& g = en.gram();
  const auto rank = static_cast<Int>(g.rank());
  const LatticeVector c = char_rep(g);
  for (Int bound = rank % 8; bound <= rank; bound += 8) {
    auto hit = en.coset_vectors(c, bound, opt);
    if (hit.size() == 0) continue;
    CharReport r;
    r.rank = g.rank();
    r.min_norm = bound;
    for (Int nv : hit.norms)
      if (nv != bound) throw InternalError("characteristic norm not congruent to rank mod 8");
    r.defect = (rank - bound) / 8;
    r.mu = bound == 0 ? 1 : 2 * static_cast<Int>(hit.size());
    r.minimizers = std::move(hit.vectors);
    r.is_standard = r.defect == 0;
    return r;
  }
  throw InternalError("no characteristic vector of norm <= rank; lattice cannot be unimodular positive definite");
}

inline CharReport min_characteristic(const GramMatrix& g, const EnumerationOptions& opt = {}) {
  require(g, Expect::unimodular);
  return min_characteristic(Enumerator(g), opt);
}

inline Int defect(const GramMatrix& g, const EnumerationOptions& opt = {}) { return min_characteristic(g, opt).defect; }

struct StandardnessResult {
  bool standard = false;
  /// Columns form an orthonormal basis: U^T G U = I.
  std::optional<IntMatrix> orthonormal_basis;
  /// Characteristic vector of norm < rank.
  std::optional<LatticeVector> witness;
  Int witness_norm = 0;
  std::size_t unit_pairs = 0;
};

/// Decides whether G is isometric to I_r. Norm-1 vectors are pairwise
/// orthogonal or opposite, so r unit pairs give an orthonormal basis; otherwise
/// a minimal characteristic vector has norm < r.
inline StandardnessResult is_standard(const GramMatrix& g, const EnumerationOptions& opt = {}) {
  require(g, Expect::unimodular);
  const Enumerator en(g);
  const auto units = en.short_vectors(1, opt);
  StandardnessResult res;
  res.unit_pairs = units.size();
  if (units.size() == g.rank()) {
    IntMatrix u(g.rank(), g.rank(), 0);
    for (std::size_t j = 0; j < g.rank(); ++j)
      for (std::size_t i = 0; i < g.rank(); ++i) u(i, j) = units.vectors[j][i];
    if (!(change_basis(g, u) == identity_gram(g.rank()))) throw InternalError("unit vectors are not orthonormal");
    res.standard = true;
    res.orthonormal_basis = std::move(u);
    return res;
  }
  const CharReport rep = min_characteristic(en, opt);
  if (rep.min_norm >= static_cast<Int>(g.rank()))
    throw InternalError("lattice without an orthonormal basis has no short characteristic vector");
  res.witness = rep.minimizers.front();
  res.witness_norm = rep.min_norm;
  return res;
}

/// O(r^2) certificate: w characteristic with |w|^2 <= rank - 8d proves defect >= d.
inline bool defect_certificate_check(const GramMatrix& g, const LatticeVector& w, Int d) {
  if (w.size() != g.rank() || !is_characteristic(g, w)) return false;
  return norm(g, w) <= static_cast<Int>(g.rank()) - 8 * d;
}

// ---------------------------------------------------------------------------
// Witnesses in the transfer basis of a four-generator form over Z[Z/n].

/// w = N (e_3 + e_4) with N = 1 + x + ... + x^{n-1}.
inline CyclicVector norm_element_vector(Int n) {
  const auto nrm = CyclicElement::norm_element(n);
  return basis_vector(4, 2, n, nrm) + basis_vector(4, 3, n, nrm);
}

/// w_a = w - 2 a(x) e_1 with a(x) = sum_j a_j x^j (exponents taken mod n).
inline CyclicVector shifted_witness(Int n, const std::vector<Int>& a_coeffs) {
  LaurentPoly a;
  for (std::size_t j = 0; j < a_coeffs.size(); ++j) a += LaurentPoly::monomial(a_coeffs[j], static_cast<Int>(j));
  const CyclicElement two_a = CyclicElement::constant(n, -2) * reduce_mod(a, n);
  return norm_element_vector(n) + basis_vector(4, 0, n, two_a);
}

/// Cyclic autocorrelations a^i = sum_j a_j a_{(j+i) mod n} of the coefficient
/// vector of a(x) reduced into Z[Z/n].
struct Autocorrelation {
  Int n = 1;
  std::vector<Int> coeffs;  // reduced, length n
  Int a0 = 0, a1 = 0, a2 = 0;
  Int at_one = 0;           // a(1)

  static Autocorrelation of(Int n, const std::vector<Int>& a_coeffs) {
    Autocorrelation r;
    r.n = n;
    LaurentPoly a;
    for (std::size_t j = 0; j < a_coeffs.size(); ++j) a += LaurentPoly::monomial(a_coeffs[j], static_cast<Int>(j));
    r.coeffs = reduce_mod(a, n).coeffs();
    auto shift = [&](Int i) {
      Int s = 0;
      for (Int j = 0; j < n; ++j) checked::fma(s, r.coeffs[j], r.coeffs[mod_floor(j + i, n)]);
      return s;
    };
    r.a0 = shift(0);
    r.a1 = shift(1);
    r.a2 = shift(2);
    for (Int c : r.coeffs) r.at_one = checked::add(r.at_one, c);
    return r;
  }
};

/// Closed form |w_a|^2 = 4n - 4(5 a(1) - 3 a^0 - 2(a^1 + a^2)) in transfer(L mod x^n - 1).
inline Int wa_norm(Int n, const std::vector<Int>& a_coeffs) {
  const auto ac = Autocorrelation::of(n, a_coeffs);
  const Int inner_term = checked::sub(checked::sub(checked::mul(5, ac.at_one), checked::mul(3, ac.a0)),
                                      checked::mul(2, checked::add(ac.a1, ac.a2)));
  return checked::sub(checked::mul(4, n), checked::mul(4, inner_term));
}

/// a(x) = 1 + x^3 + ... + x^{3(floor(n/3)-1)}.
inline std::vector<Int> every_third_coeffs(Int n) {
  std::vector<Int> a(static_cast<std::size_t>(std::max<Int>(n, 1)), 0);
  for (Int j = 0; j < n / 3; ++j) a[static_cast<std::size_t>(3 * j)] = 1;
  return a;
}

/// Sufficient condition for L_n(a) to be non-standard for every n > 4m, where
/// a = a_0 + sum_{l=1}^m a_l (x^l + x^-l):
///   a_0^2 + 2 sum a_l^2 < a_0 + 4 sum a_l.
struct SpecificCriterion {
  bool holds = false;
  Int m = 0;
  Int a0 = 0;
  Int sum = 0;          // sum_{l>=1} a_l
  Int sum_squares = 0;  // sum_{l>=1} a_l^2

  /// Smallest n covered by the criterion.
  Int first_n() const { return 4 * m + 1; }

  /// Norm of w - 2 e_1 in transfer(L(a) mod x^n - 1) for n > 4m.
  Int witness_norm(Int n) const {
    if (n <= 4 * m) throw InputError("witness formula needs n > 4m");
    const Int gain = checked::sub(checked::add(a0, checked::mul(4, sum)),
                                  checked::add(checked::mul(a0, a0), checked::mul(2, sum_squares)));
    return checked::sub(checked::mul(4, n), checked::mul(4, gain));
  }
};

inline SpecificCriterion specific_criterion(const LaurentPoly& a) {
  if (!a.is_self_conjugate()) throw DomainError("criterion needs a self-conjugate element, got " + to_string(a));
  SpecificCriterion c;
  c.a0 = a.coeff(0);
  c.m = std::max<Int>(0, a.max_exponent());
  for (const auto& [e, v] : a.terms()) {
    if (e <= 0) continue;
    c.sum = checked::add(c.sum, v);
    c.sum_squares = checked::add(c.sum_squares, checked::mul(v, v));
  }
  c.holds = checked::add(checked::mul(c.a0, c.a0), checked::mul(2, c.sum_squares)) <
            checked::add(c.a0, checked::mul(4, c.sum));
  return c;
}

}  // namespace hlat
