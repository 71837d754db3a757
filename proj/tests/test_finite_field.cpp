#include <gtest/gtest.h>

#include "breuil/errors.hpp"
#include "breuil/finite_field.hpp"
#include "breuil/ring.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace breuil;

namespace {

struct FieldCase {
  std::uint32_t p;
  int f;
};

class FieldLaws : public ::testing::TestWithParam<FieldCase> {};

TEST_P(FieldLaws, MultiplicationMatchesSchoolbookPolynomials) {
  auto F = FiniteField::make(GetParam().p, GetParam().f);
  gen::Rng rng(11);
  for (int it = 0; it < 300; ++it) {
    Fq a = gen::random_scalar(rng, *F), b = gen::random_scalar(rng, *F);
    auto da = oracle::expand(*F, {a}), db = oracle::expand(*F, {b});
    auto dc = oracle::poly_mulmod(F->p(), da, db, F->modulus());
    EXPECT_EQ(oracle::expand(*F, {F->mul(a, b)}), dc);
  }
}

TEST_P(FieldLaws, FrobeniusIsFieldAutomorphismOfOrderF) {
  auto F = FiniteField::make(GetParam().p, GetParam().f);
  for (Fq a = 0; a < F->q(); ++a) {
    EXPECT_EQ(F->frob_pow(a, F->f()), a);
    for (Fq b = 0; b < F->q(); b += 3) {
      EXPECT_EQ(F->frob(F->add(a, b)), F->add(F->frob(a), F->frob(b)));
      EXPECT_EQ(F->frob(F->mul(a, b)), F->mul(F->frob(a), F->frob(b)));
    }
  }
  for (Fq c = 0; c < F->p(); ++c) EXPECT_EQ(F->frob(c), c);
}

TEST_P(FieldLaws, InversesAndGenerator) {
  auto F = FiniteField::make(GetParam().p, GetParam().f);
  for (Fq a = 1; a < F->q(); ++a) EXPECT_EQ(F->mul(a, F->inv(a)), 1u);
  EXPECT_EQ(F->degree_of(F->generator()), F->f());
  std::uint64_t order = 1;
  Fq x = F->generator();
  while (x != 1) {
    x = F->mul(x, F->generator());
    ++order;
  }
  EXPECT_EQ(order, F->q() - 1);
}

INSTANTIATE_TEST_SUITE_P(Grid, FieldLaws,
                         ::testing::Values(FieldCase{3, 1}, FieldCase{3, 2}, FieldCase{5, 1}, FieldCase{5, 2},
                                           FieldCase{3, 4}, FieldCase{2, 3}, FieldCase{7, 2}));

TEST(FiniteField, RejectsReducibleModulus) {
  EXPECT_THROW(FiniteField::make(3, 2, {2, 0, 1}), ParameterError);  // x^2 - 1
  EXPECT_NO_THROW(FiniteField::make(3, 2, {1, 0, 1}));             // x^2 + 1
  EXPECT_THROW(FiniteField::make(4, 1), ParameterError);
}

TEST(FiniteField, IrreducibilityAgreesWithRootAndFactorSearch) {
  // Degree <= 3 over F_3: irreducible iff no root.
  for (int f = 2; f <= 3; ++f) {
    int total = 0;
    for (int idx = 0; idx < (f == 2 ? 9 : 27); ++idx) {
      std::vector<std::uint32_t> m(f + 1);
      int v = idx;
      for (int i = 0; i < f; ++i) {
        m[i] = v % 3;
        v /= 3;
      }
      m[f] = 1;
      bool root = false;
      for (int x = 0; x < 3; ++x) {
        long long acc = 0, pw = 1;
        for (int i = 0; i <= f; ++i) {
          acc += m[i] * pw;
          pw *= x;
        }
        if (acc % 3 == 0) root = true;
      }
      EXPECT_EQ(FiniteField::is_irreducible(3, m), !root);
      total += !root;
    }
    // Number of monic irreducibles: 3 of degree 2, 8 of degree 3.
    EXPECT_EQ(total, f == 2 ? 3 : 8);
  }
}

TEST(FiniteField, SubfieldsAndEmbeddings) {
  auto F9 = FiniteField::make(3, 2);
  auto F81 = FiniteField::make(3, 4);
  auto emb = field_embedding(*F9, *F81);
  for (Fq a = 0; a < 9; ++a)
    for (Fq b = 0; b < 9; ++b) {
      EXPECT_EQ(emb[F9->mul(a, b)], F81->mul(emb[a], emb[b]));
      EXPECT_EQ(emb[F9->add(a, b)], F81->add(emb[a], emb[b]));
    }
  Fq g = F81->subfield_generator(2);
  EXPECT_EQ(F81->degree_of(g), 2);
  EXPECT_EQ(F81->minimal_polynomial(g).size(), 3u);
  EXPECT_EQ(F81->root_of_unity(5), F81->pow(F81->generator(), 16));
  EXPECT_EQ(F81->root_of_unity(7), 0u);
}

TEST(TruncatedRing, FrobeniusExamples) {
  TruncatedRing R(FiniteField::make(3, 1), 6);
  EXPECT_EQ(R.frobenius(R.u_pow(1)), R.u_pow(3));
  EXPECT_EQ(R.frobenius(R.add(R.u_pow(2), R.u_pow(5))), R.zero());

  auto F9 = FiniteField::make(3, 2);
  TruncatedRing R9(F9, 6);
  const Fq lam = 3;  // alpha
  EXPECT_EQ(R9.frobenius(R9.scale(lam, R9.u_pow(1))), R9.scale(F9->pow(lam, 3), R9.u_pow(3)));
}

TEST(TruncatedRing, FrobeniusIsRingHomomorphism) {
  auto F = FiniteField::make(5, 2);
  TruncatedRing R(F, 10);
  gen::Rng rng(3);
  for (int it = 0; it < 200; ++it) {
    RingElement a(10), b(10);
    for (auto& x : a) x = gen::random_scalar(rng, *F);
    for (auto& x : b) x = gen::random_scalar(rng, *F);
    EXPECT_EQ(R.frobenius(R.add(a, b)), R.add(R.frobenius(a), R.frobenius(b)));
    EXPECT_EQ(R.frobenius(R.mul(a, b)), R.mul(R.frobenius(a), R.frobenius(b)));
    if (R.is_unit(a)) EXPECT_EQ(R.mul(a, R.inverse(a)), R.one());
    // Leibniz rule for the monodromy derivation.
    EXPECT_EQ(R.monodromy(R.mul(a, b)), R.add(R.mul(a, R.monodromy(b)), R.mul(R.monodromy(a), b)));
  }
  EXPECT_EQ(R.frobenius(R.one()), R.one());
}

}  // namespace
