#pragma once

// Exact arithmetic in the Laurent ring Z[x, x^-1] and the cyclic group rings
// Z[Z/n] = Z[x]/(x^n - 1).

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hlat/checked.hpp"
#include "hlat/errors.hpp"

namespace hlat {

/// Coefficient arithmetic. Machine integers trap on overflow; any other
/// coefficient type (boost cpp_int, cpp_rational) uses its own operators.
template <class C>
struct CoeffOps {
  static C add(const C& a, const C& b) { return a + b; }
  static C sub(const C& a, const C& b) { return a - b; }
  static C mul(const C& a, const C& b) { return a * b; }
  static bool is_zero(const C& a) { return a == C(0); }
};

template <>
struct CoeffOps<Int> {
  static Int add(Int a, Int b) { return checked::add(a, b); }
  static Int sub(Int a, Int b) { return checked::sub(a, b); }
  static Int mul(Int a, Int b) { return checked::mul(a, b); }
  static bool is_zero(Int a) { return a == 0; }
};

/// Element of Z[x, x^-1] (or R[x, x^-1] for another coefficient ring R).
/// Stored as a sparse exponent -> coefficient map with no zero coefficients,
/// so equality is structural.
template <class C>
class BasicLaurentPoly {
 public:
  using Coeff = C;
  using Terms = std::map<Int, C>;
  using Ops = CoeffOps<C>;

  BasicLaurentPoly() = default;
  BasicLaurentPoly(const C& constant) { set(0, constant); }  // NOLINT: constants embed implicitly

  static BasicLaurentPoly monomial(const C& coeff, Int exponent) {
    BasicLaurentPoly p;
    p.set(exponent, coeff);
    return p;
  }
  static BasicLaurentPoly x_power(Int exponent) { return monomial(C(1), exponent); }
  /// x^k + x^-k
  static BasicLaurentPoly symmetric_power(Int k) { return x_power(k) + x_power(-k); }

  static BasicLaurentPoly from_terms(const Terms& terms) {
    BasicLaurentPoly p;
    for (const auto& [e, c] : terms) p.set(e, c);
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  C coeff(Int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? C(0) : it->second;
  }

  Int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  Int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  BasicLaurentPoly& operator+=(const BasicLaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) accumulate(e, c);
    return *this;
  }
  BasicLaurentPoly& operator-=(const BasicLaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) accumulate(e, Ops::sub(C(0), c));
    return *this;
  }
  friend BasicLaurentPoly operator+(BasicLaurentPoly a, const BasicLaurentPoly& b) { return a += b; }
  friend BasicLaurentPoly operator-(BasicLaurentPoly a, const BasicLaurentPoly& b) { return a -= b; }
  friend BasicLaurentPoly operator-(const BasicLaurentPoly& a) { return BasicLaurentPoly() - a; }

  friend BasicLaurentPoly operator*(const BasicLaurentPoly& a, const BasicLaurentPoly& b) {
    BasicLaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.accumulate(checked::add(ea, eb), Ops::mul(ca, cb));
    return r;
  }
  BasicLaurentPoly& operator*=(const BasicLaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const BasicLaurentPoly& a, const BasicLaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Ring involution x -> x^-1.
  BasicLaurentPoly conj() const {
    BasicLaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(checked::neg(e), c);
    return r;
  }
  bool is_self_conjugate() const { return conj() == *this; }

  /// Augmentation x -> 1: sum of coefficients.
  C augmentation() const {
    C s(0);
    for (const auto& [e, c] : terms_) s = Ops::add(s, c);
    return s;
  }

  /// Coefficient of the identity group element (exponent 0). Linear, not multiplicative.
  C identity_coefficient() const { return coeff(0); }

  /// Substitution x -> x^d.
  BasicLaurentPoly substitute_power(Int d) const {
    if (d == 0) return BasicLaurentPoly(augmentation());
    BasicLaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(checked::mul(e, d), c);
    return r;
  }

 private:
  void set(Int e, const C& c) {
    if (Ops::is_zero(c))
      terms_.erase(e);
    else
      terms_[e] = c;
  }
  void accumulate(Int e, const C& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!Ops::is_zero(c)) terms_.emplace(e, c);
      return;
    }
    it->second = Ops::add(it->second, c);
    if (Ops::is_zero(it->second)) terms_.erase(it);
  }

  Terms terms_;
};

using LaurentPoly = BasicLaurentPoly<Int>;

template <class C>
BasicLaurentPoly<C> conj(const BasicLaurentPoly<C>& a) {
  return a.conj();
}

/// t = x + x^-1
inline LaurentPoly laurent_t() { return LaurentPoly::symmetric_power(1); }

/// Element of Z[Z/n]; coeffs[j] is the coefficient of x^j, 0 <= j < n.
class CyclicElement {
 public:
  explicit CyclicElement(Int n) : coeffs_(check_modulus(n), 0) {}
  CyclicElement(Int n, std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (static_cast<Int>(coeffs_.size()) != check_modulus(n))
      throw InputError("cyclic element: coefficient count " + std::to_string(coeffs_.size()) +
                       " does not match modulus " + std::to_string(n));
  }

  static CyclicElement constant(Int n, Int c) {
    CyclicElement r(n);
    r.coeffs_[0] = c;
    return r;
  }
  static CyclicElement x_power(Int n, Int exponent) {
    CyclicElement r(n);
    r.coeffs_[static_cast<std::size_t>(mod_floor(exponent, n))] = 1;
    return r;
  }
  /// N = 1 + x + ... + x^(n-1).
  static CyclicElement norm_element(Int n) { return CyclicElement(n, std::vector<Int>(static_cast<std::size_t>(check_modulus(n)), 1)); }

  Int modulus() const noexcept { return static_cast<Int>(coeffs_.size()); }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  Int coeff(Int j) const { return coeffs_[static_cast<std::size_t>(mod_floor(j, modulus()))]; }
  bool is_zero() const { return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; }); }
  bool is_constant() const { return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](Int c) { return c == 0; }); }

  friend CyclicElement operator+(const CyclicElement& a, const CyclicElement& b) {
    same_modulus(a, b);
    CyclicElement r(a.modulus());
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j) r.coeffs_[j] = checked::add(a.coeffs_[j], b.coeffs_[j]);
    return r;
  }
  friend CyclicElement operator-(const CyclicElement& a, const CyclicElement& b) {
    same_modulus(a, b);
    CyclicElement r(a.modulus());
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j) r.coeffs_[j] = checked::sub(a.coeffs_[j], b.coeffs_[j]);
    return r;
  }
  friend CyclicElement operator-(const CyclicElement& a) { return CyclicElement(a.modulus()) - a; }
  friend CyclicElement operator*(const CyclicElement& a, const CyclicElement& b) {
    same_modulus(a, b);
    const std::size_t n = a.coeffs_.size();
    CyclicElement r(a.modulus());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) checked::fma(r.coeffs_[(i + j) % n], a.coeffs_[i], b.coeffs_[j]);
    }
    return r;
  }
  CyclicElement& operator+=(const CyclicElement& o) { return *this = *this + o; }
  CyclicElement& operator*=(const CyclicElement& o) { return *this = *this * o; }
  friend bool operator==(const CyclicElement& a, const CyclicElement& b) { return a.coeffs_ == b.coeffs_; }

  CyclicElement conj() const {
    const Int n = modulus();
    CyclicElement r(n);
    for (Int j = 0; j < n; ++j) r.coeffs_[static_cast<std::size_t>(mod_floor(-j, n))] = coeffs_[static_cast<std::size_t>(j)];
    return r;
  }
  bool is_self_conjugate() const { return conj() == *this; }

  Int augmentation() const {
    Int s = 0;
    for (Int c : coeffs_) s = checked::add(s, c);
    return s;
  }
  Int identity_coefficient() const { return coeffs_[0]; }

 private:
  static Int check_modulus(Int n) {
    if (n < 1) throw InputError("cyclic group ring modulus must be >= 1, got " + std::to_string(n));
    return n;
  }
  static void same_modulus(const CyclicElement& a, const CyclicElement& b) {
    if (a.modulus() != b.modulus())
      throw InputError("cyclic modulus mismatch: " + std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()));
  }

  std::vector<Int> coeffs_;
};

inline CyclicElement conj(const CyclicElement& a) { return a.conj(); }

/// Projection Z[x, x^-1] -> Z[Z/n]: exponents are taken mod n.
inline CyclicElement reduce_mod(const LaurentPoly& a, Int n) {
  if (n < 1) throw InputError("cyclic group ring modulus must be >= 1, got " + std::to_string(n));
  std::vector<Int> c(static_cast<std::size_t>(n), 0);
  for (const auto& [e, v] : a.terms()) {
    auto& slot = c[static_cast<std::size_t>(mod_floor(e, n))];
    slot = checked::add(slot, v);
  }
  return CyclicElement(n, std::move(c));
}

/// Lift of a cyclic element to the Laurent polynomial with exponents 0..n-1.
inline LaurentPoly lift(const CyclicElement& a) {
  LaurentPoly::Terms t;
  for (Int j = 0; j < a.modulus(); ++j)
    if (a.coeff(j) != 0) t.emplace(j, a.coeff(j));
  return LaurentPoly::from_terms(t);
}

// ---------------------------------------------------------------------------
// Text syntax: "c0 + c1*x^e1 + ...", x^-k for negative exponents, whitespace ignored.

inline LaurentPoly parse_laurent(std::string_view text) {
  std::string s;
  char last = ' ';
  bool gap = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      gap = true;
      continue;
    }
    if (gap && std::isdigit(static_cast<unsigned char>(last)) && std::isdigit(static_cast<unsigned char>(ch)))
      throw InputError("cannot parse Laurent polynomial '" + std::string(text) + "': whitespace inside a number");
    s.push_back(ch);
    last = ch;
    gap = false;
  }
  if (s.empty()) throw InputError("empty Laurent polynomial");

  auto fail = [&](const std::string& why) -> LaurentPoly {
    throw InputError("cannot parse Laurent polynomial '" + std::string(text) + "': " + why);
  };
  auto read_int = [&](std::size_t& pos, Int& out) {
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) negative = s[pos++] == '-';
    const std::size_t start = pos;
    Int v = 0;
    try {
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        v = checked::add(checked::mul(v, 10), s[pos++] - '0');
    } catch (const OverflowError&) {
      fail("integer literal out of 64-bit range");
    }
    if (pos == start) return false;
    out = negative ? -v : v;
    return true;
  };

  LaurentPoly result;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    Int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      return fail("expected '+' or '-' at position " + std::to_string(pos));
    }
    first = false;

    Int coeff = 1;
    bool have_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      read_int(pos, coeff);
      have_coeff = true;
    }
    Int exponent = 0;
    bool have_x = false;
    if (have_coeff && pos < s.size() && s[pos] == '*') {
      ++pos;
      if (pos >= s.size() || s[pos] != 'x') return fail("expected 'x' after '*'");
    }
    if (pos < s.size() && s[pos] == 'x') {
      have_x = true;
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (pos < s.size() && s[pos] == '(') {
          ++pos;
          if (!read_int(pos, exponent)) return fail("bad exponent");
          if (pos >= s.size() || s[pos] != ')') return fail("missing ')'");
          ++pos;
        } else if (!read_int(pos, exponent)) {
          return fail("bad exponent");
        }
      }
    }
    if (!have_coeff && !have_x) return fail("empty term at position " + std::to_string(pos));
    result += LaurentPoly::monomial(checked::mul(sign, coeff), exponent);
  }
  return result;
}

/// Inverse of parse_laurent; terms in ascending exponent order, "0" for zero.
template <class C>
std::string to_string(const BasicLaurentPoly<C>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < C(0);
    const C mag = negative ? C(0) - c : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != C(1)) os << mag << "*";
    os << "x";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

template <class C>
std::ostream& operator<<(std::ostream& os, const BasicLaurentPoly<C>& p) {
  return os << to_string(p);
}

inline std::ostream& operator<<(std::ostream& os, const CyclicElement& a) {
  os << "[";
  for (Int j = 0; j < a.modulus(); ++j) os << (j ? "," : "") << a.coeff(j);
  return os << "] mod x^" << a.modulus() << "-1";
}

}  // namespace hlat
