#include <gtest/gtest.h>

#include "arczeta/quadric_catalog.h"
#include "arczeta/strat_engine.h"

using namespace arczeta;

namespace {

UPoly P(const char* s) { return UPoly::parse(s); }
const Sign kSigns[] = {Sign::kPlus, Sign::kMinus};

// {sigma*x^m + Q_{p,q}(y) rel eps} as a one-level constraint system, so the
// engine's generic rules (not the catalog lookup for arcs) see the set.
MPoly power_plus_quadric(int m, Sign sigma, QuadSignature sig, long long level) {
  MPoly f = MPoly::term(to_int(sigma), {{0, m}});
  for (int j = 0; j < sig.p; ++j) f += MPoly::term(1, {{1 + j, 2}});
  for (int j = 0; j < sig.q; ++j) f += MPoly::term(-1, {{1 + sig.p + j, 2}});
  return f - MPoly(level);
}

std::optional<UPoly> engine_value(int dim, MPoly poly, Relation rel) {
  ArcSystem sys;
  sys.dim = dim;
  sys.order = 1;
  for (int v = 0; v < dim; ++v) sys.names.push_back("z" + std::to_string(v));
  sys.constraints.push_back({std::move(poly), rel});
  return decompose(sys).result;
}

TEST(QuadricCatalog, ReferenceValues) {
  EXPECT_EQ(beta_Y({1, 1}), P("2*u - 1"));
  EXPECT_EQ(beta_Y({2, 1}), P("u^2"));
  EXPECT_EQ(beta_Y_fiber({1, 1}, Sign::kPlus), P("u - 1"));
  EXPECT_EQ(beta_Y_fiber({2, 1}, Sign::kPlus), P("u^2 + u"));
  EXPECT_EQ(beta_Y_fiber({1, 0}, Sign::kPlus), UPoly(2));
  EXPECT_EQ(beta_Y_fiber({2, 0}, Sign::kPlus), P("u + 1"));
}

TEST(QuadricCatalog, RankZeroConventions) {
  EXPECT_EQ(beta_Y({0, 0}), UPoly(1));
  EXPECT_TRUE(beta_Y_fiber({0, 0}, Sign::kPlus).is_zero());
  EXPECT_TRUE(beta_Y_star({0, 0}).is_zero());
  EXPECT_TRUE(beta_Y_compl({0, 0}).is_zero());
}

TEST(QuadricCatalog, FiberSymmetry) {
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5; ++q) EXPECT_EQ(beta_Y_fiber({p, q}, Sign::kMinus), beta_Y_fiber({q, p}, Sign::kPlus));
}

TEST(QuadricCatalog, AdditivityIdentities) {
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5; ++q) {
      QuadSignature s{p, q};
      EXPECT_EQ(beta_Y(s) + beta_Y_compl(s), UPoly::u_pow(p + q));
      EXPECT_EQ(beta_Y_star(s), beta_Y(s) - 1);
      // {Q != 0} is swept by the fibres {Q = +-1} times a half-line each.
      EXPECT_EQ(beta_Y_compl(s).eval_at(-1),
                -(beta_Y_fiber(s, Sign::kPlus).eval_at(-1) + beta_Y_fiber(s, Sign::kMinus).eval_at(-1)));
    }
}

TEST(QuadricCatalog, DegreeBounds) {
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5; ++q) {
      if (p + q == 0) continue;
      // a definite cone is a point
      EXPECT_EQ(beta_Y({p, q}).degree(), p && q ? p + q - 1 : 0) << p << "," << q;
      for (Sign e : kSigns) {
        auto deg = beta_Y_fiber({p, q}, e).degree();
        if (deg) EXPECT_LE(*deg, p + q - 1);
      }
    }
}

TEST(QuadricCatalog, SquarePowerFiberIsHigherRankQuadric) {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q)
      for (Sign sigma : kSigns)
        for (Sign e : kSigns) {
          QuadSignature bigger = sigma == Sign::kPlus ? QuadSignature{p + 1, q} : QuadSignature{p, q + 1};
          EXPECT_EQ(beta_power_fiber(2, sigma, {p, q}, e), beta_Y_fiber(bigger, e));
          EXPECT_EQ(beta_power_zero(2, sigma, {p, q}), beta_Y(bigger));
        }
}

TEST(QuadricCatalog, PowerFiberAgainstEngine) {
  for (int m = 2; m <= 6; ++m)
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q)
        for (Sign sigma : kSigns) {
          QuadSignature s{p, q};
          for (Sign e : kSigns) {
            auto v = engine_value(p + q + 1, power_plus_quadric(m, sigma, s, to_int(e)), Relation::kZero);
            if (v) EXPECT_EQ(*v, beta_power_fiber(m, sigma, s, e)) << m << sign_char(sigma) << s << sign_char(e);
          }
          auto z = engine_value(p + q + 1, power_plus_quadric(m, sigma, s, 0), Relation::kZero);
          if (z) EXPECT_EQ(*z, beta_power_zero(m, sigma, s)) << m << sign_char(sigma) << s;
          EXPECT_EQ(beta_power_zero(m, sigma, s) + beta_power_nonzero(m, sigma, s), UPoly::u_pow(p + q + 1));
        }
}

// x^4 + y1^2 - y2^2 = 1 peels the hyperbolic pair down to {x^4 = 1} x R
// plus a graph: u^2 + u.
TEST(QuadricCatalog, EvenPowerFiberOverHyperbolicPlane) {
  EXPECT_EQ(beta_power_fiber(4, Sign::kPlus, {1, 1}, Sign::kPlus), P("u^2 + u"));
  EXPECT_EQ(beta_power_fiber(3, Sign::kMinus, {2, 1}, Sign::kPlus), P("u^3"));
}

TEST(QuadricCatalog, PlaneCurveValues) {
  EXPECT_EQ(beta_D_curve(5, Sign::kPlus, Sign::kPlus), P("2*u"));
  EXPECT_EQ(beta_D_curve(6, Sign::kPlus, Sign::kPlus), P("u"));
  EXPECT_EQ(beta_D_curve(6, Sign::kPlus, Sign::kMinus), P("u"));
  // three non-compact branches: Euler characteristic -3
  EXPECT_EQ(beta_D_curve(6, Sign::kMinus, Sign::kPlus), P("u - 2"));
  EXPECT_EQ(beta_D_curve(4, Sign::kMinus, Sign::kPlus), P("u - 2"));
  EXPECT_THROW(beta_D_curve(3, Sign::kPlus, Sign::kPlus), std::invalid_argument);
}

TEST(QuadricCatalog, PlaneCurveEulerCharacteristicIndependent) {
  for (int k = 4; k <= 11; ++k)
    for (Sign s : kSigns)
      for (Sign e : kSigns) EXPECT_EQ(beta_D_curve(k, s, e).eval_at(-1), euler_D_curve(k, s, e)) << k;
}

TEST(QuadricCatalog, GCurve) {
  for (Sign e : kSigns) EXPECT_EQ(beta_G_curve(e), P("u - 1"));
}

}  // namespace
