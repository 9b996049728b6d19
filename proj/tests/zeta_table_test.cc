#include <gtest/gtest.h>

#include "arczeta/arc_formulas.h"
#include "arczeta/classifier.h"
#include "arczeta/zeta_table.h"

using namespace arczeta;

namespace {

UPoly P(const char* s) { return UPoly::parse(s); }

TEST(ZetaTable, A2Rows) {
  ZetaTable t = zeta_table(GermSpec::A(2, Sign::kPlus, {1, 1}), 3, Source::kHybrid);
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0].n, 2);
  EXPECT_EQ(t.rows[1].n, 3);
  for (const ZetaRow& row : t.rows)
    for (Target c : channels()) {
      ASSERT_TRUE(row.at(c).available());
      EXPECT_EQ(*row.at(c).value, *formula_value(t.germ, row.n, c));
      EXPECT_EQ(row.at(c).provenance, Provenance::kFormula);
    }
}

TEST(ZetaTable, E8OrderFive) {
  ZetaCell c = compute_cell(GermSpec::E8({0, 0}), 5, Target::plus(), Source::kHybrid, {});
  ASSERT_TRUE(c.available());
  EXPECT_EQ(*c.value, P("u^8"));
}

TEST(ZetaTable, NondegenerateQuadricVanishesAtOrderTwo) {
  ZetaTable t = zeta_table(GermSpec::Q({0, 0}), 4, Source::kOracle);
  for (const ZetaRow& row : t.rows)
    for (Target c : channels()) EXPECT_TRUE(row.at(c).value->is_zero());
}

TEST(ZetaTable, SourcesAgree) {
  for (GermSpec g : {GermSpec::A(4, Sign::kMinus, {1, 0}), GermSpec::D(5, Sign::kPlus, Sign::kMinus, {0, 1}),
                     GermSpec::E7({1, 1})}) {
    ZetaTable f = zeta_table(g, 5, Source::kFormulas);
    ZetaTable o = zeta_table(g, 5, Source::kOracle);
    for (std::size_t i = 0; i < f.rows.size(); ++i)
      for (Target c : channels()) {
        ASSERT_TRUE(o.rows[i].at(c).available());
        EXPECT_EQ(o.rows[i].at(c).provenance, Provenance::kOracle);
        if (f.rows[i].at(c).available()) EXPECT_EQ(f.rows[i].at(c).value, o.rows[i].at(c).value) << g.render();
      }
  }
}

TEST(ZetaTable, OracleOnlyFamilies) {
  ZetaCell c = compute_cell(GermSpec::J(2, 0, {0, 0}), 3, Target::plus(), Source::kFormulas, {});
  EXPECT_FALSE(c.available());
  EXPECT_EQ(c.provenance, Provenance::kUnavailable);
  ZetaCell h = compute_cell(GermSpec::J(2, 0, {0, 0}), 3, Target::plus(), Source::kHybrid, {});
  ASSERT_TRUE(h.available());
  EXPECT_EQ(h.provenance, Provenance::kOracle);
}

TEST(ZetaTable, BudgetExhaustionIsUnavailable) {
  EngineOptions tight;
  tight.stratum_budget = 1;
  ZetaCell c = compute_cell(GermSpec::J(2, 0, {1, 1}), 6, Target::plus(), Source::kOracle, tight);
  EXPECT_FALSE(c.available());
  EXPECT_FALSE(c.note.empty());
}

TEST(ZetaTable, JsonShape) {
  EngineOptions traced;
  traced.trace = true;
  nlohmann::json j = zeta_table(GermSpec::A(3, Sign::kPlus, {0, 1}), 4, Source::kHybrid, traced).to_json();
  EXPECT_EQ(j["germ"], "A(3,+) (+) Q(0,1)");
  EXPECT_EQ(j["d"], 2);
  EXPECT_EQ(j["N"], 4);
  EXPECT_EQ(j["source"], "hybrid");
  ASSERT_EQ(j["rows"].size(), 3u);
  for (const auto& r : j["rows"]) {
    for (const char* k : {"plus", "minus", "naive"}) {
      EXPECT_TRUE(r[k].is_string());
      EXPECT_EQ(r["provenance"][k], "formula");
      EXPECT_TRUE(r["traces"].contains(k));
    }
  }
  EXPECT_EQ(j["rows"][0]["n"], 2);
}

TEST(ZetaTable, TextAndCsv) {
  ZetaTable t = zeta_table(GermSpec::A(2, Sign::kPlus, {0, 0}), 3, Source::kHybrid);
  EXPECT_NE(t.to_text().find("Z^+(T)"), std::string::npos);
  std::string csv = t.to_csv();
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 2 * 3);
}

TEST(ZetaTable, RejectsShortTables) {
  EXPECT_THROW(zeta_table(GermSpec::E7({0, 0}), 1, Source::kHybrid), std::invalid_argument);
  EXPECT_THROW(parse_source("both"), std::invalid_argument);
}

TEST(CorankIndex, RecoversNormalForm) {
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; p + q <= 3; ++q) {
      QuadSignature sig{p, q};
      auto check = [&](const GermSpec& g, int corank) {
        CorankIndex ci = corank_index(g);
        EXPECT_EQ(ci.corank, corank) << g.render();
        EXPECT_EQ(ci.sig, sig) << g.render();
      };
      check(GermSpec::A(3, Sign::kPlus, sig), 1);
      check(GermSpec::A(4, Sign::kMinus, sig), 1);
      check(GermSpec::D(5, Sign::kPlus, Sign::kMinus, sig), 2);
      check(GermSpec::E6(Sign::kMinus, sig), 2);
      check(GermSpec::E7(sig), 2);
      check(GermSpec::E8(sig), 2);
      check(GermSpec::Cube(sig), 2);
    }
  CorankIndex a5 = corank_index(GermSpec::A(5, Sign::kPlus, {2, 1}));
  EXPECT_EQ(a5.corank, 1);
  EXPECT_EQ(a5.sig, (QuadSignature{2, 1}));
}

TEST(ZetaTable, EquivalentGermsAgreeCellByCell) {
  std::vector<std::pair<GermSpec, GermSpec>> pairs = {
      {GermSpec::A(4, Sign::kPlus, {1, 1}), GermSpec::A(4, Sign::kMinus, {1, 1})},
      {GermSpec::D(5, Sign::kPlus, Sign::kMinus, {1, 0}), GermSpec::D(5, Sign::kMinus, Sign::kMinus, {1, 0})},
      {GermSpec::D(6, Sign::kPlus, Sign::kMinus, {0, 1}), GermSpec::D(6, Sign::kMinus, Sign::kPlus, {0, 1})},
  };
  for (const auto& [a, b] : pairs) {
    ZetaTable ta = zeta_table(a, 6, Source::kOracle), tb = zeta_table(b, 6, Source::kOracle);
    for (std::size_t i = 0; i < ta.rows.size(); ++i)
      for (Target c : channels()) {
        const ZetaCell &x = ta.rows[i].at(c), &y = tb.rows[i].at(c);
        ASSERT_EQ(x.available(), y.available());
        if (x.available()) EXPECT_EQ(*x.value, *y.value) << a.render() << " n=" << ta.rows[i].n;
      }
  }
}

}  // namespace
