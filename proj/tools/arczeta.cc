// Command-line front end: zeta tables, distinguishers, classification
// tables, the nonsimple report, the verification suite and the quadric
// catalog.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "arczeta/arc_formulas.h"
#include "arczeta/classifier.h"
#include "arczeta/zeta_table.h"

using namespace arczeta;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  int N = 6;
  std::string format = "text";
  std::string source = "hybrid";
  std::string out;
  bool trace = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_source = true) {
  cmd->add_option("--N", c.N, "truncation order")->check(CLI::Range(2, 40));
  cmd->add_option("--format", c.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  if (with_source)
    cmd->add_option("--source", c.source, "formulas, oracle or hybrid")
        ->check(CLI::IsMember({"formulas", "oracle", "hybrid"}));
  cmd->add_option("--out", c.out, "write output to this file");
  cmd->add_flag("--trace", c.trace, "attach engine traces (json)");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot open " + c.out);
  f << text;
}

EngineOptions engine_options(const Common& c) {
  EngineOptions o = EngineOptions::from_environment();
  o.trace = c.trace;
  return o;
}

GermSpec parse_or_usage(const std::string& text) {
  try {
    return parse_germ(text);
  } catch (const GermParseError& e) {
    throw UsageError(std::string(e.kind == GermParseError::Kind::kSyntax ? "syntax" : "semantic") + " error at " +
                     std::to_string(e.position) + ": " + e.what());
  }
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int run_zeta(const std::string& germ, const Common& c) {
  ZetaTable t = zeta_table(parse_or_usage(germ), c.N, parse_source(c.source), engine_options(c));
  if (c.format == "json")
    emit(c, dump(t.to_json()));
  else if (c.format == "csv")
    emit(c, t.to_csv());
  else
    emit(c, t.to_text());
  return kOk;
}

int run_distinguish(const std::string& a, const std::string& b, const Common& c) {
  GermSpec g1 = parse_or_usage(a), g2 = parse_or_usage(b);
  if (g1.dim() != g2.dim())
    throw UsageError("germs live in different dimensions (" + std::to_string(g1.dim()) + " vs " +
                     std::to_string(g2.dim()) + "); zeta functions are not compared across d");
  Distinguisher d = distinguish(g1, g2, c.N, parse_source(c.source), engine_options(c));
  bool equivalent = g1.is_simple() && g2.is_simple() && analytic_equiv(g1, g2);
  if (c.format == "json") {
    nlohmann::json j = d.to_json();
    if (g1.is_simple() && g2.is_simple()) j["analytically_equivalent"] = equivalent;
    emit(c, dump(j));
  } else if (c.format == "csv") {
    std::ostringstream os;
    os << "germ1,germ2,N,found,n,channel,value1,value2\n"
       << '"' << d.germ1 << "\",\"" << d.germ2 << "\"," << d.N << ',' << d.found << ',';
    if (d.found) os << d.n << ',' << d.channel.name() << ',' << d.value1 << ',' << d.value2;
    else os << ",,,";
    os << "\n";
    emit(c, os.str());
  } else {
    std::ostringstream os;
    os << d.germ1 << "\n" << d.germ2 << "\n";
    if (d.found)
      os << "distinguished at n=" << d.n << " (" << d.channel.name() << "): " << d.value1 << "  vs  " << d.value2 << "\n";
    else
      os << "indistinguishable up to N=" << d.N << "\n";
    if (!d.unavailable.empty()) {
      os << "unavailable cells:";
      for (const auto& u : d.unavailable) os << " [" << u << "]";
      os << "\n";
    }
    if (g1.is_simple() && g2.is_simple()) os << "analytically equivalent: " << (equivalent ? "yes" : "no") << "\n";
    emit(c, os.str());
  }
  // A pair of equivalent germs that the tables separate is a contradiction.
  return equivalent && d.found ? kMathFailure : kOk;
}

int run_table(int d, int kmax, const Common& c) {
  ClassificationReport r = ade_table(d, kmax, c.N, parse_source(c.source), engine_options(c));
  if (c.format == "json") {
    emit(c, dump(r.to_json()));
  } else if (c.format == "csv") {
    std::ostringstream os;
    os << "germ1,germ2,equivalent,ok,certificate\n";
    for (const PairEntry& e : r.pairs)
      os << '"' << e.result.germ1 << "\",\"" << e.result.germ2 << "\"," << e.equivalent << ',' << e.ok << ','
         << e.result.summary() << "\n";
    emit(c, os.str());
  } else {
    emit(c, r.to_matrix());
  }
  return r.failures() == 0 ? kOk : kMathFailure;
}

int run_nonsimple(const std::vector<std::string>& germs, int kmax, const Common& c) {
  std::vector<GermSpec> instances;
  for (const auto& g : germs) instances.push_back(parse_or_usage(g));
  if (instances.empty()) instances = default_nonsimple_instances();
  NonsimpleReport r = nonsimple_report(instances, c.N, parse_source(c.source), kmax, engine_options(c));
  if (c.format == "json") {
    emit(c, dump(r.to_json()));
  } else if (c.format == "csv") {
    std::ostringstream os;
    os << "instance,simple_germ,certificate\n";
    for (const auto& e : r.entries)
      for (const auto& d : e.separations) os << '"' << d.germ1 << "\",\"" << d.germ2 << "\"," << d.summary() << "\n";
    emit(c, os.str());
  } else {
    emit(c, r.to_text());
  }
  return r.failures() == 0 ? kOk : kMathFailure;
}

int run_verify(const std::string& suite, const Common& c) {
  if (suite != "paper") throw UsageError("unknown suite '" + suite + "'");
  SuiteReport r = verify_paper_suite(engine_options(c));
  if (c.format == "json") {
    emit(c, dump(r.to_json()));
  } else if (c.format == "csv") {
    std::ostringstream os;
    os << "section,item,status,expected,observed\n";
    for (const auto& i : r.items)
      os << '"' << i.section << "\",\"" << i.item << "\"," << to_string(i.status) << ",\"" << i.expected << "\",\""
         << i.observed << "\"\n";
    emit(c, os.str());
  } else {
    emit(c, r.to_text());
  }
  return r.failures() == 0 ? kOk : kMathFailure;
}

int run_catalog(int max_rank, const Common& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r <= max_rank; ++r)
    for (int p = r; p >= 0; --p) {
      QuadSignature sig{p, r - p};
      rows.push_back({{"p", sig.p},
                      {"q", sig.q},
                      {"zero", beta_Y(sig).to_string()},
                      {"plus", beta_Y_fiber(sig, Sign::kPlus).to_string()},
                      {"minus", beta_Y_fiber(sig, Sign::kMinus).to_string()},
                      {"punctured", beta_Y_star(sig).to_string()},
                      {"complement", beta_Y_compl(sig).to_string()}});
    }
  const char* keys[] = {"zero", "plus", "minus", "punctured", "complement"};
  std::ostringstream os;
  if (c.format == "json") {
    os << dump({{"quadrics", rows}, {"formula_variants", formula_variant_ids()}});
  } else if (c.format == "csv") {
    os << "p,q,zero,plus,minus,punctured,complement\n";
    for (const auto& row : rows) {
      os << row["p"] << ',' << row["q"];
      for (const char* k : keys) os << ',' << row[k].get<std::string>();
      os << "\n";
    }
  } else {
    os << "beta of {Q=0}, {Q=+1}, {Q=-1}, {Q=0}\\{0}, {Q!=0} for Q = Q_{p,q}\n";
    for (const auto& row : rows) {
      os << "(" << row["p"] << "," << row["q"] << ")";
      for (const char* k : keys) os << "  " << k << ": " << row[k].get<std::string>();
      os << "\n";
    }
    os << "formula variants:";
    for (const auto& id : formula_variant_ids()) os << " " << id;
    os << "\n";
  }
  emit(c, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtual Poincare polynomials of arc spaces and zeta functions of real germs"};
  app.require_subcommand(1);

  Common zc, dc, tc, nc, vc, cc;
  std::string germ, germ2;
  int d = 3, kmax = 6, nkmax = 8, max_rank = 4;
  std::vector<std::string> instances;
  std::string suite = "paper";

  auto* zeta = app.add_subcommand("zeta", "zeta table of a germ");
  zeta->add_option("germ", germ, "germ expression, e.g. \"A(5,+) (+) Q(2,1)\"")->required();
  add_common(zeta, zc);

  auto* dist = app.add_subcommand("distinguish", "first differing zeta coefficient of two germs");
  dist->add_option("germ1", germ, "first germ")->required();
  dist->add_option("germ2", germ2, "second germ")->required();
  add_common(dist, dc);

  auto* table = app.add_subcommand("table", "pairwise classification of simple germs on R^d");
  table->add_option("--d", d, "ambient dimension")->check(CLI::Range(2, 12));
  table->add_option("--kmax", kmax, "largest family parameter")->check(CLI::Range(2, 30));
  add_common(table, tc);
  tc.N = 9;

  auto* nons = app.add_subcommand("nonsimple", "separate nonsimple instances from simple corank-2 germs");
  nons->add_option("germs", instances, "instances (default: the built-in J list)");
  nons->add_option("--kmax", nkmax, "largest D_k compared")->check(CLI::Range(4, 30));
  add_common(nons, nc);
  nc.N = 5;

  auto* verify = app.add_subcommand("verify", "formula/engine adjudication suite");
  verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember({"paper"}));
  add_common(verify, vc, false);

  auto* catalog = app.add_subcommand("catalog", "quadric terminal values");
  catalog->add_option("--max-rank", max_rank, "largest p+q")->check(CLI::Range(0, 12));
  add_common(catalog, cc, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (zeta->parsed()) return run_zeta(germ, zc);
    if (dist->parsed()) return run_distinguish(germ, germ2, dc);
    if (table->parsed()) return run_table(d, kmax, tc);
    if (nons->parsed()) return run_nonsimple(instances, nkmax, nc);
    if (verify->parsed()) return run_verify(suite, vc);
    if (catalog->parsed()) return run_catalog(max_rank, cc);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormulaOracleMismatch& e) {
    std::cerr << "formula/engine mismatch: " << e.what() << "\n";
    return kMathFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
