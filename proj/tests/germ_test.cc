#include <gtest/gtest.h>

#include <random>

#include "arczeta/germ.h"

using namespace arczeta;

namespace {

GermParseError::Kind kind_of(const std::string& text) {
  try {
    parse_germ(text);
  } catch (const GermParseError& e) {
    return e.kind;
  }
  ADD_FAILURE() << "accepted: " << text;
  return GermParseError::Kind::kSyntax;
}

TEST(GermSpec, Dimensions) {
  EXPECT_EQ(GermSpec::A(5, Sign::kPlus, {2, 1}).dim(), 4);
  EXPECT_EQ(GermSpec::D(6, Sign::kPlus, Sign::kMinus, {0, 1}).dim(), 3);
  EXPECT_EQ(GermSpec::J(2, 0, {1, 1}).dim(), 4);
  EXPECT_EQ(GermSpec::Q({2, 2}).dim(), 4);
}

TEST(GermSpec, Polynomials) {
  EXPECT_EQ(GermSpec::D(4, Sign::kPlus, Sign::kMinus, {0, 1}).polynomial().to_string(),
            GermSpec::D(4, Sign::kPlus, Sign::kMinus, {0, 1}).polynomial().to_string());
  GermPolynomial j = GermSpec::J(2, 1, {0, 0}).polynomial();
  // x1^3 + x1^2 x2^2 + x2^7
  ASSERT_EQ(j.terms.size(), 3u);
  EXPECT_EQ(j.terms[2].exponents, (std::vector<int>{0, 7}));
  GermPolynomial j30 = GermSpec::J(3, 0, {0, 0}).polynomial();
  // x1^3 + x1^2 x2^3 + x2^9 (a_0 = 0 drops the x1 x2^7 term)
  ASSERT_EQ(j30.terms.size(), 3u);
  EXPECT_EQ(j30.terms[2].exponents, (std::vector<int>{0, 9}));
}

TEST(GermSpec, Validation) {
  EXPECT_THROW(GermSpec::A(1, Sign::kPlus, {1, 0}).validate(), std::invalid_argument);
  EXPECT_THROW(GermSpec::D(3, Sign::kPlus, Sign::kPlus, {0, 0}).validate(), std::invalid_argument);
  GermSpec j = GermSpec::J(2, 1, {0, 0});
  j.a[0] = 0;
  EXPECT_THROW(j.validate(), std::invalid_argument);
  GermSpec j0 = GermSpec::J(2, 0, {0, 0});
  j0.b = -3;  // 4b^3 + 27 = -81, fine
  EXPECT_NO_THROW(j0.validate());
}

TEST(Canonicalize, Identities) {
  EXPECT_EQ(canonicalize(GermSpec::A(4, Sign::kMinus, {1, 1})), GermSpec::A(4, Sign::kPlus, {1, 1}));
  EXPECT_EQ(canonicalize(GermSpec::D(5, Sign::kMinus, Sign::kPlus, {0, 0})),
            GermSpec::D(5, Sign::kPlus, Sign::kPlus, {0, 0}));
  EXPECT_EQ(canonicalize(GermSpec::D(6, Sign::kMinus, Sign::kMinus, {1, 0})),
            GermSpec::D(6, Sign::kPlus, Sign::kPlus, {1, 0}));
  EXPECT_EQ(canonicalize(GermSpec::D(6, Sign::kMinus, Sign::kPlus, {1, 0})),
            GermSpec::D(6, Sign::kPlus, Sign::kMinus, {1, 0}));
}

TEST(Canonicalize, IdempotentAndEquivalence) {
  std::vector<GermSpec> all;
  for (Sign a : {Sign::kPlus, Sign::kMinus})
    for (Sign b : {Sign::kPlus, Sign::kMinus}) {
      for (int k = 2; k <= 5; ++k) all.push_back(GermSpec::A(k, a, {1, 0}));
      for (int k = 4; k <= 7; ++k) all.push_back(GermSpec::D(k, a, b, {0, 1}));
      all.push_back(GermSpec::E6(a, {0, 0}));
    }
  all.push_back(GermSpec::E7({0, 0}));
  for (const GermSpec& g : all) {
    EXPECT_EQ(canonicalize(canonicalize(g)), canonicalize(g));
    EXPECT_TRUE(analytic_equiv(g, g));
    for (const GermSpec& h : all) {
      EXPECT_EQ(analytic_equiv(g, h), analytic_equiv(h, g));
      for (const GermSpec& k : {all[0], all[5], all[11]})
        if (analytic_equiv(g, h) && analytic_equiv(h, k)) EXPECT_TRUE(analytic_equiv(g, k));
    }
  }
}

TEST(AnalyticEquiv, Examples) {
  EXPECT_TRUE(analytic_equiv(GermSpec::A(4, Sign::kPlus, {1, 1}), GermSpec::A(4, Sign::kMinus, {1, 1})));
  EXPECT_FALSE(analytic_equiv(GermSpec::A(3, Sign::kPlus, {1, 1}), GermSpec::A(3, Sign::kMinus, {1, 1})));
  EXPECT_TRUE(analytic_equiv(GermSpec::D(4, Sign::kPlus, Sign::kPlus, {0, 0}),
                             GermSpec::D(4, Sign::kMinus, Sign::kMinus, {0, 0})));
  EXPECT_THROW(analytic_equiv(GermSpec::J(2, 0, {0, 0}), GermSpec::E7({0, 0})), std::invalid_argument);
}

TEST(Parse, Examples) {
  GermSpec a = parse_germ("A(5,+) (+) Q(2,1)");
  EXPECT_EQ(a, GermSpec::A(5, Sign::kPlus, {2, 1}));
  EXPECT_EQ(a.dim(), 4);
  GermSpec d = parse_germ("D(6,+,-) (+) Q(0,1)");
  EXPECT_EQ(d, GermSpec::D(6, Sign::kPlus, Sign::kMinus, {0, 1}));
  EXPECT_EQ(d.dim(), 3);
  GermSpec j = parse_germ("J(2,0; b=1) (+) Q(1,1)");
  EXPECT_EQ(j, GermSpec::J(2, 0, {1, 1}));
  EXPECT_EQ(j.dim(), 4);
  EXPECT_EQ(parse_germ("A(2) (+) Q(1,1)"), GermSpec::A(2, Sign::kPlus, {1, 1}));
  EXPECT_EQ(parse_germ("  E6( - )(+)Q( 0 , 3 ) "), GermSpec::E6(Sign::kMinus, {0, 3}));
  EXPECT_EQ(parse_germ("CUBE (+) Q(1,1)"), GermSpec::Cube({1, 1}));
  EXPECT_EQ(parse_germ("Q(2,2)"), GermSpec::Q({2, 2}));
  GermSpec ji = parse_germ("J(3,2; a=[2,-1], s1=-) (+) Q(0,0)");
  EXPECT_EQ(ji.a, (std::vector<long long>{2, -1}));
  EXPECT_EQ(ji.s1, Sign::kMinus);
}

TEST(Parse, Errors) {
  EXPECT_EQ(kind_of("D(3,+,+) (+) Q(0,0)"), GermParseError::Kind::kSemantic);
  EXPECT_EQ(kind_of("J(2,0; b=-0.87) (+) Q(0,0)"), GermParseError::Kind::kSemantic);
  EXPECT_EQ(kind_of("J(2,1; a=[0]) (+) Q(0,0)"), GermParseError::Kind::kSemantic);
  EXPECT_EQ(kind_of("J(2,1; b=2) (+) Q(0,0)"), GermParseError::Kind::kSemantic);
  EXPECT_EQ(kind_of("A(3) (+) Q(1,0)"), GermParseError::Kind::kSemantic);
  EXPECT_EQ(kind_of("A(3,+) (+) Q(1,0"), GermParseError::Kind::kSyntax);
  EXPECT_EQ(kind_of("A(3,+) Q(1,0)"), GermParseError::Kind::kSyntax);
  EXPECT_EQ(kind_of("F(3) (+) Q(1,0)"), GermParseError::Kind::kSyntax);
  EXPECT_EQ(kind_of("A(99999999999999999999,+) (+) Q(1,0)"), GermParseError::Kind::kSyntax);
  EXPECT_EQ(kind_of(""), GermParseError::Kind::kSyntax);
  EXPECT_EQ(kind_of("E7 (+) Q(1,1) trailing"), GermParseError::Kind::kSyntax);
}

TEST(Parse, ErrorPositions) {
  try {
    parse_germ("A(3,+) (+) Q(1,x)");
    FAIL();
  } catch (const GermParseError& e) {
    EXPECT_EQ(e.position, 15u);
  }
}

GermSpec random_germ(std::mt19937& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto sign = [&] { return pick(0, 1) ? Sign::kPlus : Sign::kMinus; };
  QuadSignature sig{pick(0, 4), pick(0, 4)};
  switch (pick(0, 8)) {
    case 0:
      return GermSpec::A(pick(2, 12), sign(), sig);
    case 1:
      return GermSpec::D(pick(4, 12), sign(), sign(), sig);
    case 2:
      return GermSpec::E6(sign(), sig);
    case 3:
      return GermSpec::E7(sig);
    case 4:
      return GermSpec::E8(sig);
    case 5:
      return GermSpec::Cube(sig);
    case 6:
      return GermSpec::G(sig);
    case 7:
      return GermSpec::Q(sig);
    default: {
      GermSpec j = GermSpec::J(pick(2, 5), pick(0, 3), sig);
      j.s1 = sign();
      if (j.i == 0) {
        j.s2 = sign();
        do j.b = pick(-5, 5); while (4 * j.b * j.b * j.b + 27 == 0);
      }
      for (auto& a : j.a) a = pick(-3, 3);
      if (j.i > 0 && j.a[0] == 0) j.a[0] = 1;
      return j;
    }
  }
}

TEST(Parse, RenderRoundTrip) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    GermSpec g = random_germ(rng);
    if (g.family == Family::kA && g.k % 2 == 0) g = canonicalize(g);
    std::string text = g.render();
    GermSpec back = parse_germ(text);
    EXPECT_EQ(back, g) << text;
    EXPECT_EQ(back.render(), text);
  }
}

TEST(Parse, MutationsNeverCrash) {
  std::mt19937 rng(5);
  const std::string alphabet = "ADEJQGCUB0123456789(),;+-=[] abs";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text = random_germ(rng).render();
    for (int m = rng() % 4; m >= 0; --m) {
      std::size_t pos = rng() % (text.size() + 1);
      switch (rng() % 3) {
        case 0:
          if (pos < text.size()) text.erase(pos, 1);
          break;
        case 1:
          text.insert(pos, 1, alphabet[rng() % alphabet.size()]);
          break;
        default:
          if (pos < text.size()) text[pos] = alphabet[rng() % alphabet.size()];
      }
    }
    try {
      GermSpec g = parse_germ(text);
      EXPECT_EQ(parse_germ(g.render()), g) << text;
    } catch (const GermParseError&) {
    }
  }
}

}  // namespace
