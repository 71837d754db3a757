#include <gtest/gtest.h>

#include <numeric>

#include "breuil/duality.hpp"
#include "breuil/errors.hpp"
#include "breuil/simples.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace breuil;

namespace {

std::vector<int> rotate(const std::vector<int>& w, int s) {
  std::vector<int> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + s) % w.size()];
  return out;
}

// n = e (p^d - 1) v_0 from the oracle's exact solve.
long long oracle_exponent(long long p, long long e, const std::vector<int>& digits) {
  std::vector<long long> a(digits.begin(), digits.end());
  auto [num, den] = oracle::cyclic_valuation(p, e, a);
  long long mod = 1;
  for (std::size_t i = 0; i < digits.size(); ++i) mod *= p;
  mod -= 1;
  long long scaled = num * e * mod;
  EXPECT_EQ(scaled % den, 0);
  return ((scaled / den) % mod + mod) % mod;
}

}  // namespace

TEST(Digits, Canonicalize) {
  EXPECT_EQ(canonicalize_digits(3, {2, 1}, 1).digits, (std::vector<int>{1, 2}));
  auto c = canonicalize_digits(3, {1, 1}, 1);
  EXPECT_EQ(c.digits, std::vector<int>{1});
  EXPECT_EQ(c.d(), 1);
  EXPECT_THROW(canonicalize_digits(3, {2, 2}, 1), ExcludedClass);
  EXPECT_THROW(canonicalize_digits(3, {}, 1), ParameterError);
  EXPECT_THROW(canonicalize_digits(3, {3}, 1), ParameterError);
  // For h = 2 only even rotations are allowed.
  EXPECT_EQ(canonicalize_digits(3, {1, 0}, 2).digits, (std::vector<int>{1, 0}));
  EXPECT_NE(canonicalize_digits(3, {1, 0}, 2), canonicalize_digits(3, {0, 1}, 2));
  EXPECT_EQ(canonicalize_digits(3, {1, 0}, 2).d_h(), 2);
  EXPECT_EQ(canonicalize_digits(3, {1}, 2).d_h(), 2);
}

TEST(Digits, CanonicalFormRespectsTheRelation) {
  for (int h : {1, 2, 3})
    for (int m = 1; m <= 4; ++m)
      for (const auto& c : classes_with_dh(3, h, m)) {
        EXPECT_EQ(canonicalize_digits(3, c.digits, h), c);
        // shifting the periodic word by h stays in the class
        auto shifted = rotate(c.digits, h % c.d());
        EXPECT_EQ(canonicalize_digits(3, shifted, h), c);
        EXPECT_EQ(c.d_h(), m);
      }
}

TEST(Digits, ClassCountsMatchNecklaceCount) {
  // For h = 1 the classes of minimal period d are primitive necklaces of
  // length d over p letters, minus the excluded constant word when d = 1.
  auto mobius = [](int n) {
    int mu = 1;
    for (int q = 2; q <= n; ++q)
      if (n % q == 0) {
        n /= q;
        if (n % q == 0) return 0;
        mu = -mu;
      }
    return mu;
  };
  for (std::uint32_t p : {3u, 5u})
    for (int d = 1; d <= 4; ++d) {
      long long lyndon = 0;
      for (int j = 1; j <= d; ++j)
        if (d % j == 0) {
          long long pw = 1;
          for (int i = 0; i < d / j; ++i) pw *= p;
          lyndon += mobius(j) * pw;
        }
      lyndon /= d;
      if (d == 1) lyndon -= 1;
      EXPECT_EQ(static_cast<long long>(classes_with_dh(p, 1, d).size()), lyndon) << "p=" << p << " d=" << d;
    }
}

TEST(Digits, RationalConversion) {
  EXPECT_EQ(digits_to_rational(3, {1}), (Rational{1, 2}));
  EXPECT_EQ(digits_to_rational(3, {1, 2}), (Rational{7, 8}));
  EXPECT_EQ(digits_to_rational(3, {0}), (Rational{0, 1}));
  EXPECT_EQ(rational_to_digits(3, {0, 1}), std::vector<int>{0});
  EXPECT_EQ(rational_to_digits(3, {7, 8}), (std::vector<int>{1, 2}));
  EXPECT_EQ(rational_to_digits(3, {-1, 8}), (std::vector<int>{1, 2}));
  EXPECT_THROW(rational_to_digits(3, {1, 3}), ParameterError);
  for (std::uint32_t p : {3u, 5u})
    for (int d = 1; d <= 3; ++d)
      for (const auto& c : classes_with_dh(p, 1, d))
        for (int s = 0; s < c.d(); ++s) {
          auto w = rotate(c.digits, s);
          auto x = digits_to_rational(p, w);
          EXPECT_EQ(rational_to_digits(p, x), w);
          // the shift a_i -> a_{i+1} undoes multiplication by p mod Z
          auto y = digits_to_rational(p, rotate(w, 1));
          EXPECT_EQ((y.num * static_cast<long long>(p) - x.num) % x.den, 0);
          EXPECT_EQ(x.den, y.den);
        }
}

TEST(Simples, BaseContextConstructions) {
  auto P = gen::base_params();
  auto m1 = build_simple(canonicalize_digits(3, {1}, 1), P);
  ASSERT_EQ(m1->M.rank(), 1);
  EXPECT_EQ(m1->iota[0], m1->M.mul_u(m1->M.gen(0), 1));
  EXPECT_EQ(m1->phi[0], m1->M.scale(2, m1->M.gen(0)));
  EXPECT_TRUE(validate_object(*m1).ok());
  EXPECT_TRUE(is_cris(*m1));
  auto m0 = build_simple(canonicalize_digits(3, {0}, 1), P);
  EXPECT_EQ(m0->iota[0], m0->M.mul_u(m0->M.gen(0), 2));
  EXPECT_EQ(m0->phi[0], m0->M.scale(2, m0->M.gen(0)));
}

TEST(Simples, CoefficientActionOverF9) {
  auto P = gen::params(3, 2, 2, 1);
  auto o = build_simple(canonicalize_digits(3, {1}, 2), P);
  ASSERT_EQ(o->M.rank(), 2);
  const Fq g = P.k->subfield_generator(2);
  EXPECT_EQ(o->coeff->on_module[0], o->M.scale(g, o->M.gen(0)));
  EXPECT_EQ(o->coeff->on_module[1], o->M.scale(P.k->pow(g, 3), o->M.gen(1)));
  auto rep = validate_coefficients(*o);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(validate_object(*o).ok());
}

TEST(Simples, Preconditions) {
  EXPECT_THROW(build_simple(canonicalize_digits(5, {1}, 1), gen::params(5, 1, 1, 2)), ParameterError);
  EXPECT_THROW(build_simple(canonicalize_digits(3, {1}, 2), gen::params(3, 1, 2, 1)), ParameterError);
}

TEST(Simples, ValidateAcrossTheGrid) {
  for (std::uint32_t p : {3u, 5u})
    for (int f : {1, 2})
      for (int e : {1, 2})
        for (int r = 1; r <= static_cast<int>(p) - 2; ++r) {
          if (e * r < static_cast<int>(p) - 1) continue;
          auto P = gen::params(p, f, e, r);
          for (int h = 1; h <= f; ++h) {
            if (f % h) continue;
            for (int m = 1; m <= 2; ++m)
              for (const auto& c : classes_with_dh(p, h, m)) {
                auto o = build_simple(c, P);
                EXPECT_TRUE(validate_object(*o).ok());
                EXPECT_TRUE(validate_coefficients(*o).ok());
              }
          }
        }
}

TEST(Simples, RepresentativeIndependence) {
  auto P = gen::params(3, 2, 2, 1);
  for (int h : {1, 2})
    for (int m : {2})
      for (const auto& c : classes_with_dh(3, h, m)) {
        auto a = build_simple(c, P);
        auto b = build_simple_word(rotate(c.digits, h % c.d()), h, P);
        EXPECT_TRUE(find_isomorphism(a, b).iso.has_value());
      }
}

TEST(Simples, EndomorphismsFormAField) {
  const std::uint32_t p = 3;
  for (int h : {1, 2})
    for (int m = 1; m <= 3; ++m) {
      if (m % h) continue;
      auto P = gen::params(p, m, 2, 1);
      for (const auto& c : classes_with_dh(p, h, m)) {
        auto o = build_simple(c, P);
        auto H = hom_basis(o, o);
        EXPECT_EQ(H.dim(), m);
        // every nonzero element is invertible
        const int D = H.dim();
        long long total = 1;
        for (int i = 0; i < D; ++i) total *= p;
        for (long long idx = 1; idx < total; ++idx) {
          Vec z(D);
          long long v = idx;
          for (auto& x : z) {
            x = static_cast<Fq>(v % p);
            v /= p;
          }
          EXPECT_TRUE(is_isomorphism(H.element(z)));
        }
      }
    }
}

TEST(Simples, DistinctClassesAreNotIsomorphic) {
  for (int h : {1, 2})
    for (int m = 1; m <= 2; ++m) {
      if (m % h) continue;
      auto P = gen::params(3, m, 2, 1);
      auto cls = classes_with_dh(3, h, m);
      std::vector<Object> objs;
      for (const auto& c : cls) objs.push_back(build_simple(c, P));
      for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = i + 1; j < objs.size(); ++j) {
          auto r = find_isomorphism(objs[i], objs[j]);
          EXPECT_FALSE(r.iso.has_value());
          EXPECT_TRUE(r.exact());
        }
    }
}

TEST(Characters, Examples) {
  auto P = gen::base_params();
  EXPECT_EQ(tame_character(canonicalize_digits(3, {0}, 1), P), make_character(3, 1, 0));
  EXPECT_EQ(tame_character(canonicalize_digits(3, {1}, 1), P), make_character(3, 1, 1));
  auto c12 = tame_character(canonicalize_digits(3, {1, 2}, 1), P);
  EXPECT_EQ(c12.level, 2);
  EXPECT_EQ(c12.orbit, (std::vector<std::uint64_t>{5, 7}));
  EXPECT_EQ(dual_character(make_character(3, 1, 1), P), make_character(3, 1, 1));
  EXPECT_EQ(dual_character(make_character(3, 1, 0), P), make_character(3, 1, 0));
  EXPECT_EQ(dual_character(c12, P).orbit, (std::vector<std::uint64_t>{1, 3}));
}

TEST(Characters, OracleAgreementAndInvariance) {
  for (std::uint32_t p : {3u, 5u})
    for (int e : {1, 2})
      for (int r = 1; r <= static_cast<int>(p) - 2; ++r) {
        auto P = gen::params(p, 1, e, r);
        if (P.er() < static_cast<int>(p) - 1) continue;
        for (int d = 1; d <= 3; ++d)
          for (const auto& c : classes_with_dh(p, 1, d)) {
            auto ch = tame_character(c, P);
            EXPECT_EQ(ch.level, d);
            long long expect = 0, mod = 1;
            for (int i = 0; i < d; ++i) mod *= p;
            mod -= 1;
            for (int i = 0; i < d; ++i) {
              long long w = c.digits[i];
              for (int j = 0; j < d - 1 - i; ++j) w *= p;
              expect += w;
            }
            EXPECT_EQ(ch, make_character(p, d, static_cast<std::uint64_t>(expect % mod)));
            EXPECT_EQ(ch, make_character(p, d, static_cast<std::uint64_t>(oracle_exponent(p, e, c.digits))));
            for (int s = 1; s < d; ++s) {
              std::vector<int> b;
              for (int a : rotate(c.digits, s)) b.push_back(P.er() - a);
              EXPECT_EQ(tame_character_of_shape(b, P), ch);
            }
            auto du = dual_character(ch, P);
            EXPECT_EQ(dual_character(du, P), ch);
            // the dual word er - a_i as a shape has b_i = a_i
            EXPECT_EQ(tame_character_of_shape(c.digits, P), du);
          }
      }
}

TEST(Identify, Examples) {
  auto P = gen::base_params();
  auto m1 = build_simple(canonicalize_digits(3, {1}, 1), P);
  auto id = identify_simple(m1);
  ASSERT_TRUE(id.match.has_value());
  EXPECT_EQ(id.match->digits, std::vector<int>{1});

  auto P9 = gen::params(3, 2, 2, 1);
  auto d = dualize(build_simple(canonicalize_digits(3, {1}, 1), P9));
  auto id9 = identify_simple(d);
  ASSERT_TRUE(id9.match.has_value());
  EXPECT_EQ(id9.match->digits, std::vector<int>{1});

  // S(0) with the prime field acting by scalars: its digit would be er = p-1.
  auto s0 = standard_object(P, 0);
  FreeSpec s;
  s.rank = 1;
  s.fil_gens = s0->iota;
  s.phi_values = s0->phi;
  s.N_values = s0->N;
  CoeffSpec cs;
  cs.h = 1;
  cs.on_module = {s0->M.scale(P.k->subfield_generator(1), s0->M.gen(0))};
  s.coeff = cs;
  EXPECT_FALSE(identify_simple(make_free(P, s)).match.has_value());
}
