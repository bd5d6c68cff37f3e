// Randomized law checks. Every suite draws at least 500 cases from a fixed seed.
#include <gtest/gtest.h>

#include <random>

#include "hlat/charvec.hpp"
#include "hlat/roots.hpp"
#include "oracles.hpp"

using namespace hlat;

namespace {

constexpr int kCases = 500;

class Rng {
 public:
  explicit Rng(std::uint32_t seed) : gen_(seed) {}
  Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }

  LaurentPoly laurent(Int span, Int coeff) {
    LaurentPoly p;
    for (Int e = -span; e <= span; ++e)
      if (coin()) p = p + LaurentPoly::monomial(uniform(-coeff, coeff), e);
    return p;
  }

  LaurentPoly self_conjugate(Int span, Int coeff) {
    LaurentPoly p(uniform(-coeff, coeff));
    for (Int e = 1; e <= span; ++e)
      if (coin()) p = p + uniform(-coeff, coeff) * LaurentPoly::symmetric_power(e);
    return p;
  }

  CyclicElement cyclic(Int n, Int coeff) {
    std::vector<Int> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = uniform(-coeff, coeff);
    return CyclicElement(n, c);
  }

  /// Product of random elementary column operations on the identity.
  IntMatrix unimodular(std::size_t k, int steps) {
    IntMatrix u = IntMatrix::identity(k, 0, 1);
    if (k < 2) return u;
    for (int s = 0; s < steps; ++s) {
      const auto i = static_cast<std::size_t>(uniform(0, static_cast<Int>(k) - 1));
      auto j = static_cast<std::size_t>(uniform(0, static_cast<Int>(k) - 2));
      if (j >= i) ++j;
      const Int c = coin() ? 1 : -1;
      for (std::size_t r = 0; r < k; ++r) u(r, i) += c * u(r, j);
    }
    return u;
  }

  LatticeVector vector(std::size_t k, Int coeff) {
    LatticeVector v(k);
    for (auto& x : v) x = uniform(-coeff, coeff);
    return v;
  }

 private:
  std::mt19937 gen_;
};

GramMatrix scrambled(Rng& rng, const GramMatrix& g) { return change_basis(g, rng.unimodular(g.rank(), 2 * static_cast<int>(g.rank()))); }

}  // namespace

TEST(RingLaws, LaurentRing) {
  Rng rng(101);
  for (int c = 0; c < kCases; ++c) {
    const auto a = rng.laurent(3, 4), b = rng.laurent(3, 4), d = rng.laurent(3, 4);
    ASSERT_EQ((a * b) * d, a * (b * d));
    ASSERT_EQ(a * (b + d), a * b + a * d);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(conj(a * b), conj(a) * conj(b));
    ASSERT_EQ(conj(conj(a)), a);
    ASSERT_EQ((a * b).augmentation(), a.augmentation() * b.augmentation());
    ASSERT_TRUE((a + conj(a)).is_self_conjugate());
    ASSERT_EQ(parse_laurent(to_string(a)), a);
  }
}

TEST(RingLaws, ReductionIsAHomomorphism) {
  Rng rng(102);
  for (int c = 0; c < kCases; ++c) {
    const Int n = rng.uniform(1, 9);
    const auto a = rng.laurent(4, 5), b = rng.laurent(4, 5);
    ASSERT_EQ(reduce_mod(a * b, n), reduce_mod(a, n) * reduce_mod(b, n));
    ASSERT_EQ(reduce_mod(a + b, n), reduce_mod(a, n) + reduce_mod(b, n));
    ASSERT_EQ(reduce_mod(conj(a), n), conj(reduce_mod(a, n)));
    ASSERT_EQ(reduce_mod(a, n).augmentation(), a.augmentation());
  }
}

TEST(RingLaws, NormElementAbsorbs) {
  Rng rng(103);
  for (int c = 0; c < kCases; ++c) {
    const Int n = rng.uniform(1, 12);
    const auto r = rng.cyclic(n, 6);
    const auto N = CyclicElement::norm_element(n);
    ASSERT_EQ(N * r, CyclicElement::constant(n, r.augmentation()) * N);
    ASSERT_EQ(conj(conj(r)), r);
    ASSERT_EQ((r * conj(r)).identity_coefficient(), (r * conj(r)).conj().identity_coefficient());
  }
}

TEST(FormLaws, DeterminantOfLaIsOne) {
  Rng rng(104);
  for (int c = 0; c < kCases; ++c) {
    const auto a = rng.self_conjugate(3, 4);
    const auto f = build_L_a(a);
    ASSERT_EQ(form_det(f), LaurentPoly(1)) << to_string(a);
    ASSERT_EQ(determinant(aug_form(f)), 1);
  }
}

TEST(FormLaws, TransferIsSymmetricEquivariantAndUnimodular) {
  Rng rng(105);
  for (int c = 0; c < kCases; ++c) {
    const auto a = rng.self_conjugate(3, 3);
    const Int n = rng.uniform(1, 8);
    const auto cf = reduce_form(build_L_a(a), n);
    const auto g = transfer(cf);
    const auto nn = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < g.rank(); ++i)
      for (std::size_t k = 0; k < g.rank(); ++k) {
        ASSERT_EQ(g(i, k), g(k, i));
        const std::size_t is = (i / nn) * nn + (i % nn + 1) % nn, ks = (k / nn) * nn + (k % nn + 1) % nn;
        ASSERT_EQ(g(is, ks), g(i, k));
      }
    ASSERT_EQ(determinant(g), 1);
    if (c % 10 == 0) {
      ASSERT_EQ(g, oracle::transfer_by_definition(cf));
    }
  }
}

TEST(LatticeLaws, EnumerationMatchesBoxSearch) {
  Rng rng(106);
  for (int c = 0; c < kCases; ++c) {
    const auto k = static_cast<std::size_t>(rng.uniform(1, 5));
    // U^T U with U nonsingular is positive definite.
    IntMatrix u(k, k, 0);
    do {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) u(i, j) = rng.uniform(-1, 1);
    } while (bareiss(u).determinant == 0);
    const auto g = change_basis(identity_gram(k), u);
    const Int bound = rng.uniform(1, 6);
    auto got = enumerate_short(g, bound).vectors;
    for (auto& v : got) normalize_sign(v);
    std::sort(got.begin(), got.end());
    ASSERT_EQ(got, oracle::box_search(g, bound, 1)) << c;
  }
}

TEST(LatticeLaws, VanDerBlijCongruence) {
  Rng rng(107);
  const std::vector<std::string> names = {"I1", "I3", "E8", "Gamma12", "Gamma8+I2", "I5+E8"};
  for (int c = 0; c < kCases; ++c) {
    GramMatrix g;
    if (rng.coin()) {
      g = scrambled(rng, catalog_gram(names[static_cast<std::size_t>(rng.uniform(0, 5))]));
    } else {
      g = transfer_gram(build_L_a(rng.self_conjugate(2, 3)), rng.uniform(1, 4));
    }
    const auto w0 = char_rep(g);
    auto w = w0;
    const auto y = rng.vector(g.rank(), 3);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += 2 * y[i];
    ASSERT_TRUE(is_characteristic(g, w));
    const Int r = static_cast<Int>(g.rank());
    ASSERT_EQ(((norm(g, w) - r) % 8 + 8) % 8, 0) << c;
  }
}

TEST(CharLaws, MuMultipliesAndDefectAdds) {
  Rng rng(108);
  const std::vector<std::string> names = {"I1", "I2", "I3", "I4", "E8", "Gamma12", "Gamma4"};
  std::vector<CharReport> base;
  for (const auto& n : names) base.push_back(min_characteristic(catalog_gram(n)));
  for (int c = 0; c < kCases; ++c) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, 6));
    auto j = static_cast<std::size_t>(rng.uniform(0, 6));
    while (names[i] == "Gamma12" && names[j] == "Gamma12") j = static_cast<std::size_t>(rng.uniform(0, 6));
    const auto g = scrambled(rng, direct_sum(catalog_gram(names[i]), catalog_gram(names[j])));
    const auto r = min_characteristic(g);
    ASSERT_EQ(r.mu, base[i].mu * base[j].mu) << names[i] << "+" << names[j];
    ASSERT_EQ(r.defect, base[i].defect + base[j].defect) << names[i] << "+" << names[j];
    ASSERT_EQ(r.min_norm, base[i].min_norm + base[j].min_norm);
  }
}

TEST(CharLaws, DefectZeroIffUnitPairsIffCertificate) {
  Rng rng(109);
  const std::vector<std::string> names = {"I1", "I4", "I7", "E8", "E8+I1", "Gamma12", "Gamma4+I3", "Gamma8+I2"};
  int standard_seen = 0;
  for (int c = 0; c < kCases; ++c) {
    GramMatrix g;
    if (c % 4 == 0) {
      g = transfer_gram(build_L_a(rng.self_conjugate(2, 2)), rng.uniform(1, 3));
    } else {
      g = scrambled(rng, catalog_gram(names[static_cast<std::size_t>(rng.uniform(0, 7))]));
    }
    const bool zero = defect(g) == 0;
    const auto s = is_standard(g);
    ASSERT_EQ(zero, s.unit_pairs == g.rank()) << c;
    ASSERT_EQ(zero, s.standard) << c;
    if (s.standard) {
      ++standard_seen;
      ASSERT_EQ(change_basis(g, *s.orthonormal_basis), identity_gram(g.rank()));
      ASSERT_EQ(abs(bareiss(*s.orthonormal_basis).determinant), 1);
    } else {
      ASSERT_TRUE(defect_certificate_check(g, *s.witness, (static_cast<Int>(g.rank()) - s.witness_norm) / 8));
    }
  }
  EXPECT_GT(standard_seen, 50);
  EXPECT_LT(standard_seen, kCases - 50);
}

TEST(CharLaws, WitnessNormMatchesGram) {
  Rng rng(110);
  for (int c = 0; c < kCases; ++c) {
    const Int n = rng.uniform(1, 12);
    std::vector<Int> a(static_cast<std::size_t>(rng.uniform(1, n)));
    for (auto& x : a) x = rng.uniform(-1, 1);
    const auto g = transfer_gram(build_L(), n);
    const auto w = flatten(shifted_witness(n, a));
    ASSERT_TRUE(is_characteristic(g, w));
    ASSERT_EQ(norm(g, w), wa_norm(n, a)) << c;
  }
}
