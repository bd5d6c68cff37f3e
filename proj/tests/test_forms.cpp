#include <gtest/gtest.h>

#include "hlat/forms.hpp"
#include "oracles.hpp"

using namespace hlat;

namespace {

LaurentPoly P(const char* s) { return parse_laurent(s); }

const GramMatrix kL1{{7, 6, 3, 2}, {6, 7, 2, 3}, {3, 2, 2, 0}, {2, 3, 0, 2}};

}  // namespace

TEST(BuildL, EntryOneOne) {
  const auto L = build_L();
  EXPECT_EQ(L(0, 0), P("3 + x + x^-1 + x^2 + x^-2"));
  EXPECT_EQ(L(0, 2), P("1 + x + x^-1"));
  EXPECT_EQ(L(2, 2), LaurentPoly(2));
  EXPECT_EQ(L(2, 3), LaurentPoly());
}

TEST(BuildL, ZeroSubstitution) {
  const auto L0 = build_L_a(LaurentPoly());
  const Int rows[4][4] = {{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 2, 0}, {0, 1, 0, 2}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(L0(i, j), LaurentPoly(rows[i][j]));
  EXPECT_EQ(aug_form(L0), GramMatrix({{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 2, 0}, {0, 1, 0, 2}}));
}

TEST(BuildL, RejectsNonSelfConjugate) {
  EXPECT_THROW(build_L_a(P("x")), DomainError);
  EXPECT_THROW(build_L_a(P("1 + x^2")), DomainError);
}

TEST(BuildL, BSequence) {
  EXPECT_EQ(b_sequence(1), 1);
  EXPECT_EQ(b_sequence(2), 5);
  EXPECT_EQ(b_sequence(3), 21);
  EXPECT_EQ(b_sequence(4), 85);
  EXPECT_THROW(b_sequence(0), InputError);
  EXPECT_EQ(build_L_k(1), build_L());
  EXPECT_EQ(build_L_k(2), build_L_a(P("x^5 + x^-5")));
  EXPECT_EQ(build_L_k(3), build_L_a(P("x^21 + x^-21")));
}

TEST(BuildL, SubstitutePower) {
  EXPECT_EQ(substitute_power(build_L(), 1), build_L());
  EXPECT_EQ(substitute_power(build_L(), 5), build_L_k(2));
  EXPECT_EQ(substitute_power(build_L(), 21), build_L_k(3));
  EXPECT_EQ(substitute_power(build_L(), 5)(0, 0), P("3 + x^5 + x^-5 + x^10 + x^-10"));
}

TEST(Determinant, UnitForFamily) {
  EXPECT_EQ(form_det(build_L()), LaurentPoly(1));
  EXPECT_EQ(form_det(build_L_a(LaurentPoly())), LaurentPoly(1));
  EXPECT_EQ(form_det(build_L_a(P("x^2 + x^-2"))), LaurentPoly(1));
}

TEST(Determinant, SymbolicOracle) {
  // det L(a) as a polynomial in a is identically 1.
  EXPECT_EQ(oracle::symbolic_det_L(), std::vector<Int>{1});
}

TEST(Determinant, GenericRingMatrix) {
  Matrix<LaurentPoly> m(2, 2, LaurentPoly());
  m(0, 0) = P("x");
  m(0, 1) = P("1");
  m(1, 0) = P("1");
  m(1, 1) = P("x^-1");
  EXPECT_EQ(ring_determinant(m, LaurentPoly(), LaurentPoly(1)), LaurentPoly());
}

TEST(Augmentation, MatchesL1) {
  EXPECT_EQ(aug_form(build_L()), kL1);
  for (Int k = 1; k <= 3; ++k) EXPECT_EQ(aug_form(build_L_k(k)), kL1) << k;
}

TEST(Reduce, Examples) {
  const auto L = build_L();
  EXPECT_EQ(reduce_form(L, 2)(0, 0).coeffs(), (std::vector<Int>{5, 2}));
  for (Int k = 1; k <= 3; ++k) EXPECT_TRUE(reduce_form(build_L_k(k), b_sequence(k)).is_integral()) << k;
  EXPECT_FALSE(reduce_form(build_L_k(1), 5).is_integral());
  EXPECT_FALSE(reduce_form(build_L_k(2), 21).is_integral());
  const auto r1 = reduce_form(L, 1);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(r1(i, j).coeffs().front(), kL1(i, j));
}

TEST(Sesquilinear, PaperValues) {
  const auto L = build_L();
  LaurentVector e1{LaurentPoly(1), LaurentPoly(), LaurentPoly(), LaurentPoly()};
  EXPECT_EQ(sesq_eval(L, e1, e1), P("3 + x + x^-1 + x^2 + x^-2"));
  const LaurentVector xe1 = LaurentPoly::x_power(1) * e1;
  EXPECT_EQ(sesq_eval(L, xe1, xe1), P("3 + x + x^-1 + x^2 + x^-2"));
  // Linear in the first slot, conjugate-linear in the second.
  LaurentVector e3{LaurentPoly(), LaurentPoly(), LaurentPoly(1), LaurentPoly()};
  EXPECT_EQ(sesq_eval(L, xe1, e3), LaurentPoly::x_power(1) * L(0, 2));
  EXPECT_EQ(sesq_eval(L, e1, LaurentPoly::x_power(1) * e3), LaurentPoly::x_power(-1) * L(0, 2));
  EXPECT_EQ(sesq_eval(L, e3, xe1), conj(sesq_eval(L, xe1, e3)));
}

TEST(Sesquilinear, NormElementCollapses) {
  for (Int n = 1; n <= 6; ++n) {
    const auto f = reduce_form(build_L(), n);
    const auto N = CyclicElement::norm_element(n);
    const CyclicVector v = basis_vector(4, 0, n, CyclicElement(n, std::vector<Int>(n, 1))) +
                           basis_vector(4, 3, n, CyclicElement::x_power(n, 1));
    const CyclicVector e = basis_vector(4, 2, n);
    EXPECT_EQ(sesq_eval(f, N * v, e), N * CyclicElement::constant(n, sesq_eval(f, v, e).augmentation()));
  }
}

TEST(Transfer, SmallN) {
  EXPECT_EQ(transfer_gram(build_L(), 1), kL1);
  const auto g2 = transfer_gram(build_L(), 2);
  EXPECT_EQ(g2.rank(), 8u);
  EXPECT_EQ(g2.diagonal(), (std::vector<Int>{5, 5, 5, 5, 2, 2, 2, 2}));
  EXPECT_EQ(transfer_gram(build_L(), 3).diagonal(), (std::vector<Int>{3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2}));
}

TEST(Transfer, MatchesDefinition) {
  for (Int n = 1; n <= 5; ++n) {
    const auto f = reduce_form(build_L(), n);
    EXPECT_EQ(transfer(f), oracle::transfer_by_definition(f)) << n;
  }
  const auto f = reduce_form(build_L_k(2), 5);
  EXPECT_EQ(transfer(f), oracle::transfer_by_definition(f));
}

TEST(Transfer, CirculantBlocks) {
  const auto g = transfer_gram(build_L_k(2), 5);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t j2 = 0; j2 < 5; ++j2)
          EXPECT_EQ(g(i * 5 + j, k * 5 + j2), g(i * 5 + (j + 1) % 5, k * 5 + (j2 + 1) % 5));
}

TEST(Transfer, AugmentationFunctoriality) {
  for (const char* a : {"x + x^-1", "0", "2 - x^3 - x^-3", "x^5 + x^-5"}) {
    const auto form = build_L_a(P(a));
    EXPECT_EQ(aug_form(form), transfer(reduce_form(form, 1))) << a;
  }
}

TEST(RationalCongruence, Family) {
  for (const char* a : {"x + x^-1", "0", "x^3 + x^-3", "x^5 + x^-5", "x^21 + x^-21", "3 - x^2 - x^-2"})
    EXPECT_TRUE(rational_congruence_check(P(a))) << a;
}

TEST(HermitianForm, RejectsAsymmetric) {
  Matrix<LaurentPoly> m(2, 2, LaurentPoly());
  m(0, 1) = P("x");
  m(1, 0) = P("x");
  EXPECT_THROW(HermitianForm{m}, DomainError);
  m(1, 0) = P("x^-1");
  EXPECT_NO_THROW(HermitianForm{m});
  m(0, 0) = P("x");
  EXPECT_THROW(HermitianForm{m}, DomainError);
}
