#include <gtest/gtest.h>

#include "hlat/ring.hpp"

using namespace hlat;

namespace {

LaurentPoly P(const char* s) { return parse_laurent(s); }

}  // namespace

TEST(LaurentPoly, SquareOfT) {
  const LaurentPoly t = laurent_t();
  EXPECT_EQ(t * t, P("x^2 + 2 + x^-2"));
}

TEST(LaurentPoly, OnePlusTPlusTSquared) {
  const LaurentPoly t = laurent_t();
  EXPECT_EQ(LaurentPoly(1) + t + t * t, P("3 + x + x^-1 + x^2 + x^-2"));
}

TEST(LaurentPoly, AdditiveInverseIsEmpty) {
  const LaurentPoly p = P("3 - 2x^5 + x^-7");
  const LaurentPoly z = p + (-p);
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.terms().empty());
  EXPECT_TRUE((p - p).terms().empty());
}

TEST(LaurentPoly, Conjugation) {
  EXPECT_EQ(conj(P("x")), P("x^-1"));
  EXPECT_EQ(conj(P("x^2 + x^-2")), P("x^2 + x^-2"));
  EXPECT_TRUE(P("x^2 + x^-2").is_self_conjugate());
  EXPECT_EQ(conj(P("3 + 2x")), P("3 + 2x^-1"));
  EXPECT_FALSE(P("x").is_self_conjugate());
}

TEST(LaurentPoly, AugmentationAndIdentityCoefficient) {
  EXPECT_EQ(P("3 + x + x^-1 + x^2 + x^-2").augmentation(), 7);
  EXPECT_EQ(LaurentPoly().augmentation(), 0);
  EXPECT_EQ(LaurentPoly::symmetric_power(5).augmentation(), 2);
  EXPECT_EQ(P("3 + x + x^-1 + x^2 + x^-2").identity_coefficient(), 3);
  EXPECT_EQ(P("x").identity_coefficient(), 0);
}

TEST(LaurentPoly, SubstitutePower) {
  EXPECT_EQ(P("3 + x + x^-1 + x^2 + x^-2").substitute_power(5), P("3 + x^5 + x^-5 + x^10 + x^-10"));
  EXPECT_EQ(laurent_t().substitute_power(1), laurent_t());
}

TEST(LaurentPoly, ParseVariants) {
  EXPECT_EQ(P("  x^-3+ 2 *x^2 -x "), LaurentPoly::monomial(1, -3) + LaurentPoly::monomial(2, 2) - P("x"));
  EXPECT_EQ(P("x^(-2)"), LaurentPoly::x_power(-2));
  EXPECT_EQ(P("-x"), LaurentPoly::monomial(-1, 1));
  EXPECT_EQ(P("0"), LaurentPoly());
  EXPECT_EQ(P("x^1 + x^1"), LaurentPoly::monomial(2, 1));
  EXPECT_EQ(P("5x^0"), LaurentPoly(5));
}

TEST(LaurentPoly, ParseErrors) {
  for (const char* bad : {"", "x^", "2 +", "y", "x^1.5", "3 3", "x^^2", "+", "99999999999999999999"})
    EXPECT_THROW(parse_laurent(bad), InputError) << bad;
}

TEST(LaurentPoly, PrintRoundTrip) {
  for (const char* s : {"0", "1", "-1", "x", "-x^-1", "3 + x + x^-1 + x^2 + x^-2", "7x^12 - 4x^-3 + 2"}) {
    const LaurentPoly p = P(s);
    EXPECT_EQ(P(to_string(p).c_str()), p) << s;
  }
  EXPECT_EQ(to_string(P("3 + x + x^-1 + x^2 + x^-2")), "x^-2 + x^-1 + 3 + x + x^2");
}

TEST(LaurentPoly, OverflowTraps) {
  const LaurentPoly big = LaurentPoly(INT64_MAX);
  EXPECT_THROW(big + LaurentPoly(1), OverflowError);
  EXPECT_THROW(big * LaurentPoly(2), OverflowError);
}

TEST(Reduce, ExamplesModN) {
  const LaurentPoly e11 = P("3 + x + x^-1 + x^2 + x^-2");
  EXPECT_EQ(reduce_mod(e11, 2).coeffs(), (std::vector<Int>{5, 2}));
  EXPECT_EQ(reduce_mod(e11, 2).identity_coefficient(), 5);
  EXPECT_EQ(reduce_mod(e11, 1).coeffs(), (std::vector<Int>{7}));
  EXPECT_EQ(reduce_mod(LaurentPoly::x_power(4), 4).coeffs(), (std::vector<Int>{1, 0, 0, 0}));
  EXPECT_EQ(reduce_mod(e11, 3).identity_coefficient(), 3);
  EXPECT_THROW(reduce_mod(e11, 0), InputError);
}

TEST(Cyclic, Construction) {
  EXPECT_THROW(CyclicElement(0), InputError);
  EXPECT_THROW(CyclicElement(3, {1, 2}), InputError);
  EXPECT_EQ(CyclicElement(3).coeffs(), (std::vector<Int>{0, 0, 0}));
  EXPECT_EQ(CyclicElement::x_power(3, -1).coeffs(), (std::vector<Int>{0, 0, 1}));
}

TEST(Cyclic, NormElementAbsorbs) {
  const auto n3 = CyclicElement::norm_element(3);
  EXPECT_EQ(n3 * CyclicElement(3, {1, 1, 0}), CyclicElement(3, {2, 2, 2}));
}

TEST(Cyclic, Arithmetic) {
  EXPECT_EQ(CyclicElement(2, {5, 2}).conj(), CyclicElement(2, {5, 2}));
  EXPECT_EQ(CyclicElement(3, {0, 1, 0}) * CyclicElement(3, {0, 1, 0}), CyclicElement(3, {0, 0, 1}));
  EXPECT_EQ(CyclicElement(4, {1, 2, 3, 4}).conj(), CyclicElement(4, {1, 4, 3, 2}));
  EXPECT_EQ(CyclicElement(4, {1, 2, 3, 4}).augmentation(), 10);
  EXPECT_THROW(CyclicElement(3) + CyclicElement(4), InputError);
  EXPECT_EQ(lift(CyclicElement(3, {1, 0, 2})), P("1 + 2x^2"));
}
