#include <gtest/gtest.h>

#include "breuil/duality.hpp"
#include "breuil/errors.hpp"
#include "breuil/hom.hpp"
#include "breuil/mod_st.hpp"
#include "support/generators.hpp"

using namespace breuil;

namespace {

std::vector<RingParams> grid() {
  std::vector<RingParams> out;
  for (std::uint32_t p : {3u, 5u})
    for (int f : {1, 2})
      for (int e : {1, 2})
        for (int r = 1; r <= static_cast<int>(p) - 2; ++r) out.push_back(gen::params(p, f, e, r));
  return out;
}

}  // namespace

TEST(Duality, StandardObjectsSwapFiltrationDegree) {
  for (const auto& P : grid())
    for (int t = 0; t <= P.r; ++t) {
      auto d = dualize(standard_object(P, t));
      EXPECT_TRUE(validate_object(*d).ok());
      auto r = find_isomorphism(d, standard_object(P, P.r - t));
      EXPECT_TRUE(r.iso.has_value()) << "p=" << P.p() << " f=" << P.k->f() << " e=" << P.e << " r=" << P.r
                                     << " t=" << t;
    }
}

TEST(Duality, RankOneSimpleAtBaseContext) {
  auto P = gen::base_params();
  auto m1 = gen::rank_one(P, 1, 2);
  auto d = dualize(m1);
  ASSERT_EQ(d->Fil.rank(), 1);
  EXPECT_EQ(d->iota[0], d->M.mul_u(d->M.gen(0), 1));
  EXPECT_EQ(d->phi[0], d->M.gen(0));  // (-1)^r c^r = +1
}

TEST(Duality, BidualAndValidity) {
  gen::Rng rng(40);
  for (const auto& P : {gen::base_params(), gen::params(5, 1, 2, 3), gen::params(3, 2, 1, 1)}) {
    std::vector<Object> objs{standard_object(P, 1)};
    for (int i = 0; i < 6; ++i) objs.push_back(gen::random_free(rng, P, 1 + i % 3));
    for (const auto& o : objs) {
      auto d = dualize(o);
      auto rep = validate_object(*d);
      EXPECT_TRUE(rep.ok());
      EXPECT_TRUE(rep.predicates.at("is_mod"));
      auto ev = bidual_map(o, dualize(d));
      EXPECT_TRUE(validate_morphism(ev).ok());
      EXPECT_TRUE(is_isomorphism(ev));
    }
  }
}

TEST(Duality, ContravariantOnComposites) {
  gen::Rng rng(41);
  auto P = gen::base_params();
  int nonzero = 0;
  for (int it = 0; it < 20; ++it) {
    auto [a, b, c] = gen::composable_triple(rng, P);
    auto da = dualize(a), db = dualize(b), dc = dualize(c);
    auto f = gen::random_morphism(rng, a, b);
    auto g = gen::random_morphism(rng, b, c);
    auto lhs = dualize(compose(g, f), da, dc);
    auto rhs = compose(dualize(f, da, db), dualize(g, db, dc));
    EXPECT_EQ(lhs, rhs);
    EXPECT_TRUE(validate_morphism(rhs).ok());
    if (!(compose(g, f) == zero_morphism(a, c))) ++nonzero;
  }
  EXPECT_GT(nonzero, 5);
}

TEST(Duality, DistributesOverSums) {
  gen::Rng rng(42);
  auto P = gen::base_params();
  auto a = gen::random_free(rng, P, 1), b = gen::random_free(rng, P, 2);
  auto lhs = dualize(direct_sum(a, b));
  auto rhs = direct_sum(dualize(a), dualize(b));
  EXPECT_TRUE(find_isomorphism(lhs, rhs).iso.has_value());
}

TEST(Duality, RejectsNonFree) {
  auto P = gen::base_params();
  UniSpec u;
  u.M_orders = {1};
  u.Fil_orders = {1};
  ChainModule M(P.k, 6, {1});
  u.iota = {M.gen(0)};
  u.phi = {M.gen(0)};
  EXPECT_THROW(dualize(make_uni(P, u)), ParameterError);
  EXPECT_THROW(dualize(gen::phantom(P, 1, 3)), ParameterError);
}

TEST(ModSt, ProjectionIsIsomorphism) {
  gen::Rng rng(50);
  for (const auto& P : grid()) {
    std::vector<Object> objs;
    for (int t = 0; t <= P.r; ++t) objs.push_back(standard_object(P, t));
    objs.push_back(gen::random_free(rng, P, 2));
    for (const auto& o : objs) {
      auto ms = mod_st(o);
      EXPECT_TRUE(validate_object(*ms.object).ok());
      EXPECT_TRUE(validate_morphism(ms.pr).ok());
      EXPECT_TRUE(is_isomorphism(ms.pr));
    }
  }
}

TEST(ModSt, RankOneSimpleAndZero) {
  auto P = gen::base_params();
  auto m1 = gen::rank_one(P, 1, 2);
  auto ms = mod_st(m1);
  EXPECT_TRUE(is_isomorphism(ms.pr));
  EXPECT_TRUE(find_isomorphism(ms.object, m1).iso.has_value());
  EXPECT_TRUE(mod_st(zero_object(P)).object->is_zero());
}

TEST(ModSt, ShortFilIsNotReduced) {
  auto P = gen::base_params();
  ChainModule M(P.k, 6, {1});
  UniSpec u;
  u.M_orders = {1};
  u.Fil_orders = {1};
  u.iota = {M.gen(0)};
  u.phi = {M.gen(0)};
  EXPECT_THROW(mod_st(make_uni(P, u)), NotReduced);
}

TEST(Duality, ExchangesKernelsAndCokernels) {
  gen::Rng rng(43);
  auto P = gen::base_params();
  int free_cokernels = 0;
  for (int it = 0; it < 15; ++it) {
    auto [a, b, c] = gen::composable_triple(rng, P);
    (void)c;
    auto m = gen::random_morphism(rng, a, b);
    auto C = cokernel_mod(m);
    if (!C.object->is_free()) continue;  // the dual is only defined on free objects
    ++free_cokernels;
    auto K = kernel_mod(dualize(m));
    EXPECT_TRUE(find_isomorphism(dualize(C.object), K.object).iso.has_value());
  }
  EXPECT_GT(free_cokernels, 3);
}
