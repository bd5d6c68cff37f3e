#pragma once

// Exact LLL reduction and Fincke-Pohst enumeration for positive definite
// integral lattices.
//
// Enumeration never touches floating point. With d_0 = 1, d_k the k-th leading
// principal minor and lambda_{ij} = d_{j+1} mu_{ij} the integral Gram-Schmidt
// coefficients, the norm of x splits as
//
//   |x|^2 = sum_j y_j^2 / (d_j d_{j+1}),   y_j = d_{j+1} x_j + sum_{i>j} lambda_{ij} x_i,
//
// with every y_j an integer. Scaling by T = lcm(d_j d_{j+1}) turns the pruning
// test into integer comparisons.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/integer/common_factor.hpp>

#include "hlat/checked.hpp"
#include "hlat/errors.hpp"
#include "hlat/gram.hpp"

namespace hlat {

struct LllResult {
  GramMatrix reduced;  // U^T G U
  IntMatrix basis;     // U, unimodular; column k is the k-th reduced vector
};

/// Integral LLL on a Gram matrix (delta = 3/4), all arithmetic in exact integers.
inline LllResult lll_reduce(const GramMatrix& g) {
  require(g, Expect::positive_definite);
  const std::size_t n = g.rank();
  std::vector<std::vector<BigInt>> b(n, std::vector<BigInt>(n));  // Gram entries b_i . b_j
  std::vector<std::vector<BigInt>> u(n, std::vector<BigInt>(n));  // u[i] = i-th basis vector (original coords)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b[i][j] = g(i, j);
    u[i][i] = 1;
  }
  if (n <= 1) return {g, IntMatrix::identity(n, 0, 1)};

  // d[0] = 1, d[k+1] = det of the leading (k+1)x(k+1) block; lambda[k][j] for j < k.
  std::vector<BigInt> d(n + 1);
  std::vector<std::vector<BigInt>> lambda(n, std::vector<BigInt>(n));
  d[0] = 1;
  d[1] = b[0][0];

  auto size_reduce = [&](std::size_t k, std::size_t l) {
    // Uses |2 lambda_kl| <= d_{l+1}.
    if (2 * abs(lambda[k][l]) <= d[l + 1]) return;
    const BigInt num = 2 * lambda[k][l] + d[l + 1];
    const BigInt den = 2 * d[l + 1];
    BigInt q = num / den;
    if ((num % den != 0) && (num < 0)) --q;  // floor
    const BigInt bkl = b[k][l], bll = b[l][l], bkk = b[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      b[k][j] -= q * b[l][j];
      b[j][k] = b[k][j];
    }
    b[k][k] = bkk - 2 * q * bkl + q * q * bll;
    for (std::size_t j = 0; j < n; ++j) u[k][j] -= q * u[l][j];
    lambda[k][l] -= q * d[l + 1];
    for (std::size_t i = 0; i < l; ++i) lambda[k][i] -= q * lambda[l][i];
  };

  auto swap_vectors = [&](std::size_t k, std::size_t kmax) {
    std::swap(u[k], u[k - 1]);
    std::swap(b[k], b[k - 1]);
    for (auto& row : b) std::swap(row[k], row[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lambda[k][j], lambda[k - 1][j]);
    const BigInt lam = lambda[k][k - 1];
    const BigInt nb = (d[k - 1] * d[k + 1] + lam * lam) / d[k];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const BigInt t = lambda[i][k];
      lambda[i][k] = (d[k + 1] * lambda[i][k - 1] - lam * t) / d[k];
      lambda[i][k - 1] = (nb * t + lam * lambda[i][k]) / d[k + 1];
    }
    d[k] = nb;
  };

  std::size_t k = 1, kmax = 0;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 0; j <= k; ++j) {
        BigInt acc = b[k][j];
        for (std::size_t i = 0; i < j; ++i) acc = (d[i + 1] * acc - lambda[k][i] * lambda[j][i]) / d[i];
        if (j < k)
          lambda[k][j] = acc;
        else
          d[k + 1] = acc;
      }
      if (d[k + 1] == 0) throw DomainError("LLL: basis vectors are linearly dependent");
    }
    size_reduce(k, k - 1);
    // Lovasz condition with delta = 3/4: 4 d_{k+1} d_{k-1} < 3 d_k^2 - 4 lambda^2 triggers a swap.
    if (4 * d[k + 1] * d[k - 1] < 3 * d[k] * d[k] - 4 * lambda[k][k - 1] * lambda[k][k - 1]) {
      swap_vectors(k, kmax);
      if (k > 1) --k;
      continue;
    }
    for (std::size_t l = k - 1; l-- > 0;) size_reduce(k, l);
    ++k;
  }

  IntMatrix basis(n, n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(j, i) = checked::narrow(u[i][j]);
  return {change_basis(g, basis), std::move(basis)};
}

struct EnumerationOptions {
  unsigned long long node_budget = 1'000'000'000ULL;
};

/// One representative per +-pair (first nonzero coordinate positive), sorted
/// lexicographically. `norms[i]` is the norm of `vectors[i]`.
struct EnumerationResult {
  Int bound = 0;
  std::vector<LatticeVector> vectors;
  std::vector<Int> norms;
  unsigned long long nodes = 0;

  std::size_t size() const noexcept { return vectors.size(); }
};

/// LLL-reduces once, then answers any number of short-vector and
/// parity-coset queries on the same lattice.
class Enumerator {
 public:
  explicit Enumerator(const GramMatrix& g) : g_(g), lll_(lll_reduce(g)) { prepare(); }

  const GramMatrix& gram() const noexcept { return g_; }
  const LllResult& reduction() const noexcept { return lll_; }

  /// All +-pairs with 0 < |v|^2 <= bound.
  EnumerationResult short_vectors(Int bound, const EnumerationOptions& opt = {}) const {
    if (bound < 1) throw InputError("short vector bound must be >= 1");
    return run(bound, nullptr, opt);
  }

  /// All +-pairs w = c (mod 2) with |w|^2 <= bound; the zero vector is
  /// included iff c = 0 (mod 2).
  EnumerationResult coset_vectors(const LatticeVector& c, Int bound, const EnumerationOptions& opt = {}) const {
    if (bound < 0) throw InputError("coset bound must be >= 0");
    check_dimension(g_, c);
    // Parity in reduced coordinates: U x' = c (mod 2).
    const auto sol = solve_mod2(lll_.basis, c);
    if (!sol.ok) throw InternalError("unimodular basis change is singular mod 2");
    return run(bound, &sol.x, opt);
  }

 private:
  using Wide = __int128;

  void prepare() {
    const std::size_t n = g_.rank();
    const GramMatrix& r = lll_.reduced;
    std::vector<BigInt> d(n + 1);
    std::vector<std::vector<BigInt>> lam(n, std::vector<BigInt>(n));
    d[0] = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j <= k; ++j) {
        BigInt acc = r(k, j);
        for (std::size_t i = 0; i < j; ++i) acc = (d[i + 1] * acc - lam[k][i] * lam[j][i]) / d[i];
        if (j < k)
          lam[k][j] = acc;
        else
          d[k + 1] = acc;
      }
    BigInt t = 1;
    for (std::size_t j = 0; j < n; ++j) t = boost::integer::lcm(t, BigInt(d[j] * d[j + 1]));
    scale_ = t;
    dd_.resize(n);
    weight_.resize(n);
    lambda_.assign(n, std::vector<Int>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
      dd_[j] = checked::narrow(d[j + 1]);
      weight_[j] = checked::narrow(BigInt(t / (d[j] * d[j + 1])));
      for (std::size_t i = j + 1; i < n; ++i) lambda_[i][j] = checked::narrow(lam[i][j]);
    }
  }

  static Wide isqrt(Wide v) {
    if (v <= 0) return 0;
    Wide r = static_cast<Wide>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
  }

  struct Search {
    const Enumerator* self;
    const std::vector<Int>* parity;
    bool include_zero;
    unsigned long long budget;
    unsigned long long nodes = 0;
    std::vector<Int> x;
    std::vector<LatticeVector> found;

    void descend(std::ptrdiff_t j, Wide remaining, bool top_zero) {
      if (j < 0) {
        if (!top_zero || include_zero) found.push_back(x);
        return;
      }
      const auto uj = static_cast<std::size_t>(j);
      const std::size_t n = x.size();
      Wide s = 0;
      for (std::size_t i = uj + 1; i < n; ++i) s += static_cast<Wide>(self->lambda_[i][uj]) * x[i];
      const Wide dj = self->dd_[uj];
      const Wide wj = self->weight_[uj];
      const Wide ymax = isqrt(remaining / wj);
      Wide lo = ceil_div<Wide>(-ymax - s, dj);
      const Wide hi = floor_div<Wide>(ymax - s, dj);
      if (top_zero && lo < 0) lo = 0;
      if (parity) {
        const Wide p = (*parity)[uj];
        if (((lo % 2) + 2) % 2 != p) ++lo;
      }
      const Wide step = parity ? 2 : 1;
      for (Wide v = lo; v <= hi; v += step) {
        if (++nodes > budget) throw BudgetExceeded(budget);
        const Wide y = dj * v + s;
        x[uj] = static_cast<Int>(v);
        descend(j - 1, remaining - wj * y * y, top_zero && v == 0);
      }
      x[uj] = 0;
    }
  };

  EnumerationResult run(Int bound, const std::vector<Int>* parity, const EnumerationOptions& opt) const {
    const std::size_t n = g_.rank();
    const BigInt budget_scaled = scale_ * bound;
    if (budget_scaled > BigInt(1) << 100) throw OverflowError("enumeration radius too large for exact 128-bit search");
    bool include_zero = true;
    if (parity)
      include_zero = std::all_of(parity->begin(), parity->end(), [](Int p) { return p == 0; });
    else
      include_zero = false;

    Search search{this, parity, include_zero, opt.node_budget, 0, std::vector<Int>(n, 0), {}};
    search.descend(static_cast<std::ptrdiff_t>(n) - 1, static_cast<Wide>(budget_scaled), true);

    EnumerationResult out;
    out.bound = bound;
    out.nodes = search.nodes;
    out.vectors.reserve(search.found.size());
    for (const auto& xr : search.found) {
      LatticeVector v(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          if (xr[k] != 0) checked::fma(v[i], lll_.basis(i, k), xr[k]);
      normalize_sign(v);
      out.vectors.push_back(std::move(v));
    }
    std::sort(out.vectors.begin(), out.vectors.end());
    out.norms.reserve(out.vectors.size());
    for (const auto& v : out.vectors) {
      const Int nv = norm(g_, v);
      if (nv > bound || (nv == 0 && !include_zero)) throw InternalError("enumeration produced a vector outside the bound");
      out.norms.push_back(nv);
    }
    return out;
  }

  GramMatrix g_;
  LllResult lll_;
  BigInt scale_;
  std::vector<Int> dd_;
  std::vector<Int> weight_;
  std::vector<std::vector<Int>> lambda_;
};

inline EnumerationResult enumerate_short(const GramMatrix& g, Int bound, const EnumerationOptions& opt = {}) {
  return Enumerator(g).short_vectors(bound, opt);
}

inline EnumerationResult enumerate_coset(const GramMatrix& g, const LatticeVector& c, Int bound,
                                         const EnumerationOptions& opt = {}) {
  return Enumerator(g).coset_vectors(c, bound, opt);
}

/// Number of +-pairs of norm-1 vectors: the largest k with G = I_k + (min norm >= 2).
inline std::size_t unit_pair_count(const GramMatrix& g, const EnumerationOptions& opt = {}) {
  return enumerate_short(g, 1, opt).size();
}

}  // namespace hlat
