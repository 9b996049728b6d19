// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// iff a criterion fails that is not listed in kKnownFailures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "arczeta/arc_formulas.h"
#include "arczeta/classifier.h"

using namespace arczeta;

namespace {

// Criterion 4 includes a printed curve value the engine and an independent
// Euler-characteristic count both refute; see README.
const std::set<int> kKnownFailures = {4};

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

const Sign kSigns[] = {Sign::kPlus, Sign::kMinus};
const QuadSignature kGridSigs[] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}};

Outcome quadric_catalog() {
  struct Row {
    UPoly got;
    const char* want;
  } rows[] = {{beta_Y({1, 1}), "2*u - 1"},
              {beta_Y({2, 1}), "u^2"},
              {beta_Y_fiber({1, 1}, Sign::kPlus), "u - 1"},
              {beta_Y_fiber({2, 1}, Sign::kPlus), "u^2 + u"}};
  Outcome o{true, ""};
  for (const Row& r : rows) {
    if (r.got != UPoly::parse(r.want)) {
      o.pass = false;
      o.detail += " got " + r.got.to_string() + " want " + r.want;
    }
  }
  if (o.pass) o.detail = "4/4 values";
  return o;
}

Outcome closed_vs_recursion() {
  int cells = 0, bad = 0;
  for (int l = 2; l <= 12; ++l)
    for (int p = 0; p <= 4; ++p)
      for (int q = 0; q <= 4; ++q)
        for (Sign e : kSigns) {
          ++cells;
          if (arc_Q_signed(l, e, {p, q}) != arc_Q_recursive(l, e, {p, q})) ++bad;
        }
  return {bad == 0, std::to_string(cells - bad) + "/" + std::to_string(cells) + " cells"};
}

std::vector<GermSpec> grid_germs(QuadSignature sig) {
  std::vector<GermSpec> g = {GermSpec::Q(sig), GermSpec::G(sig), GermSpec::E7(sig), GermSpec::E8(sig),
                             GermSpec::Cube(sig)};
  for (Sign s : kSigns) {
    for (int k = 2; k <= 6; ++k) g.push_back(GermSpec::A(k, s, sig));
    for (Sign t : kSigns)
      for (int k = 4; k <= 6; ++k) g.push_back(GermSpec::D(k, s, t, sig));
    g.push_back(GermSpec::E6(s, sig));
  }
  return g;
}

Outcome oracle_vs_formulas() {
  int cells = 0, bad = 0;
  std::string first;
  EngineOptions options;
  for (QuadSignature sig : kGridSigs)
    for (const GermSpec& g : grid_germs(sig))
      for (int n = 2; n <= 7; ++n)
        for (Target t : channels()) {
          std::optional<UPoly> f = formula_value(g, n, t);
          if (!f) continue;
          ++cells;
          EngineOutcome e = beta_of(g.polynomial(), n, t, options);
          if (!e.ok() || *e.result != *f) {
            ++bad;
            if (first.empty()) first = "; first: " + g.render() + " n=" + std::to_string(n) + " " + t.name();
          }
        }
  return {bad == 0 && cells > 0, std::to_string(cells - bad) + "/" + std::to_string(cells) + " cells" + first};
}

Outcome printed_values() {
  int total = 0, bad = 0;
  std::string detail;
  auto check = [&](const std::string& what, const UPoly& printed, const UPoly& observed) {
    ++total;
    if (printed != observed) {
      ++bad;
      detail += "; " + what + ": printed " + printed.to_string() + ", computed " + observed.to_string();
    }
  };
  check("curve x1 x2^2 + x1^4 = 1", UPoly::parse("2*u"), beta_D_curve(5, Sign::kPlus, Sign::kPlus));
  check("curve x1 x2^2 + x1^5 = 1", UPoly::parse("u"), beta_D_curve(6, Sign::kPlus, Sign::kPlus));
  check("curve x1 x2^2 - x1^5 = 1", UPoly::parse("2*u"), beta_D_curve(6, Sign::kMinus, Sign::kPlus));
  const GermPolynomial g = GermSpec::G({0, 0}).polynomial();
  for (int n = 1; n <= 2; ++n)
    for (Sign e : kSigns) {
      EngineOutcome o = beta_of(g, 2 * n + 1, Target::signed_(e));
      check("x1 x2^2 order " + std::to_string(2 * n + 1), UPoly::u_pow(2 * n + 2) * (UPoly::u_pow(n) - 1),
            o.result.value_or(UPoly(-999)));
    }
  for (Sign e : kSigns) {
    check("E7 order 5", (UPoly::u_pow(1) - 1) * UPoly::u_pow(7),
          beta_of(GermSpec::E7({0, 0}).polynomial(), 5, Target::signed_(e)).result.value_or(UPoly(-999)));
    check("E8 order 5", UPoly::u_pow(8),
          beta_of(GermSpec::E8({0, 0}).polynomial(), 5, Target::signed_(e)).result.value_or(UPoly(-999)));
  }
  const int chi = euler_D_curve(6, Sign::kMinus, Sign::kPlus);
  if (bad) detail += " (Euler characteristic of x1 x2^2 - x1^5 = 1 by fibring: " + std::to_string(chi) + ")";
  return {bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " printed values reproduced" + detail};
}

Outcome adjudication() {
  SuiteReport a = verify_paper_suite();
  SuiteReport b = verify_paper_suite();
  const bool deterministic = a.to_json().dump() == b.to_json().dump();
  std::set<std::string> flagged;
  bool derived_ok = true;
  for (const VariantLedgerEntry& e : a.ledger) {
    if (e.stated_matches < e.cells) flagged.insert(e.id);
    if (e.proof_matches != e.cells || e.cells == 0) derived_ok = false;
  }
  const bool required = flagged.count("quadric-even-terminal") && flagged.count("e-order3-first-term");
  std::ostringstream os;
  os << "suite failures=" << a.failures() << " discrepancies=" << a.discrepancies() << " flagged=" << flagged.size()
     << "/" << a.ledger.size() << " variants, derived all confirmed=" << (derived_ok ? "yes" : "no")
     << ", deterministic=" << (deterministic ? "yes" : "no");
  return {a.failures() == 0 && required && derived_ok && deterministic, os.str()};
}

Outcome classification() {
  std::ostringstream os;
  int failures = 0;
  for (int d = 2; d <= 5; ++d) {
    ClassificationReport r = ade_table(d, 8, 9, Source::kHybrid);
    failures += r.failures();
    os << (d > 2 ? ", " : "") << "d=" << d << ": " << r.pairs.size() << " pairs/" << r.failures() << " failures";
  }
  return {failures == 0, os.str()};
}

Outcome nonsimple() {
  NonsimpleReport r = nonsimple_report(default_nonsimple_instances(), 5, Source::kHybrid, 8);
  std::size_t separations = 0;
  for (const NonsimpleEntry& e : r.entries) separations += e.separations.size();
  return {r.failures() == 0 && r.entries.size() == 6,
          std::to_string(r.entries.size()) + " instances, " + std::to_string(separations) + " separations, " +
              std::to_string(r.failures()) + " failures"};
}

Outcome linear_invariance() {
  std::mt19937 rng(20240611);
  const std::vector<GermSpec> pool = {
      GermSpec::A(3, Sign::kMinus, {1, 1}), GermSpec::A(4, Sign::kPlus, {2, 0}),
      GermSpec::A(5, Sign::kPlus, {0, 2}),  GermSpec::D(4, Sign::kPlus, Sign::kMinus, {1, 0}),
      GermSpec::D(5, Sign::kMinus, Sign::kPlus, {0, 1}), GermSpec::D(6, Sign::kPlus, Sign::kPlus, {1, 1}),
      GermSpec::E6(Sign::kMinus, {1, 0}),  GermSpec::E7({0, 1}),
      GermSpec::E8({1, 0}),                GermSpec::Cube({1, 1}),
      GermSpec::G({1, 0}),                 GermSpec::J(2, 0, {0, 1})};
  int cells = 0, bad = 0;
  std::string first;
  for (int sample = 0; sample < 20; ++sample) {
    const GermSpec& g = pool[rng() % pool.size()];
    GermPolynomial f = g.polynomial();
    std::vector<int> perm(f.dim), signs(f.dim);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int& s : signs) s = rng() % 2 ? 1 : -1;
    GermPolynomial h = f.transformed(perm, signs);
    for (int n = 2; n <= 5; ++n)
      for (Target t : channels()) {
        EngineOutcome a = beta_of(f, n, t), b = beta_of(h, n, t);
        ++cells;
        if (!a.ok() || !b.ok() || *a.result != *b.result) {
          ++bad;
          if (first.empty()) first = "; first: " + g.render() + " n=" + std::to_string(n) + " " + t.name();
        }
      }
  }
  return {bad == 0, "20 samples, " + std::to_string(cells - bad) + "/" + std::to_string(cells) + " cells" + first};
}

GermSpec random_germ(std::mt19937& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto sign = [&] { return pick(0, 1) ? Sign::kPlus : Sign::kMinus; };
  QuadSignature sig{pick(0, 6), pick(0, 6)};
  switch (pick(0, 8)) {
    case 0:
      return canonicalize(GermSpec::A(pick(2, 30), sign(), sig));
    case 1:
      return GermSpec::D(pick(4, 30), sign(), sign(), sig);
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
      GermSpec j = GermSpec::J(pick(2, 6), pick(0, 4), sig);
      j.s1 = sign();
      if (j.i == 0) {
        j.s2 = sign();
        j.b = pick(-9, 9);
      }
      for (auto& a : j.a) a = pick(-5, 5);
      if (j.i > 0 && j.a[0] == 0) j.a[0] = pick(1, 5);
      return j;
    }
  }
}

std::string mutate(std::string text, std::mt19937& rng) {
  static const std::string alphabet = "ADEJQGCUB0123456789(),;+-=[]{} \t\nabs*^.\x01\xff";
  for (int m = static_cast<int>(rng() % 5); m >= 0; --m) {
    const std::size_t pos = rng() % (text.size() + 1);
    switch (rng() % 4) {
      case 0:
        if (pos < text.size()) text.erase(pos, 1);
        break;
      case 1:
        text.insert(pos, 1, alphabet[rng() % alphabet.size()]);
        break;
      case 2:
        if (pos < text.size()) text[pos] = alphabet[rng() % alphabet.size()];
        break;
      default:
        text.insert(pos, std::string(rng() % 30, '9'));
    }
  }
  return text;
}

Outcome parser_fuzz() {
  std::mt19937 rng(7);
  int valid = 0, round_trip_bad = 0, accepted_mutants = 0, rejected = 0, crashes = 0;
  std::string first;
  for (int i = 0; i < 10000; ++i) {
    const GermSpec g = random_germ(rng);
    const std::string canonical = g.render();
    const bool mutated = i % 2 == 1;
    const std::string input = mutated ? mutate(canonical, rng) : canonical;
    try {
      GermSpec parsed = parse_germ(input);
      const std::string rendered = parsed.render();
      const bool ok = mutated ? parse_germ(rendered).render() == rendered : rendered == canonical;
      if (mutated) ++accepted_mutants;
      else ++valid;
      if (!ok) {
        ++round_trip_bad;
        if (first.empty()) first = "; first: " + input;
      }
    } catch (const GermParseError&) {
      if (!mutated) {
        ++round_trip_bad;
        if (first.empty()) first = "; rejected valid: " + input;
      }
      ++rejected;
    } catch (const std::exception& e) {
      ++crashes;
      if (first.empty()) first = "; unexpected exception on " + input + ": " + e.what();
    }
  }
  std::ostringstream os;
  os << "10000 cases: " << valid << " valid round-trips, " << accepted_mutants << " accepted mutants, " << rejected
     << " rejected, " << round_trip_bad << " round-trip failures, " << crashes << " unexpected exceptions" << first;
  return {round_trip_bad == 0 && crashes == 0, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  } criteria[] = {
      {1, "quadric catalog exactness", 1, quadric_catalog},
      {2, "closed form equals recursion for Q", 10, closed_vs_recursion},
      {3, "engine equals derived formulas on the grid", 600, oracle_vs_formulas},
      {4, "printed value spot checks", 1, printed_values},
      {5, "discrepancy adjudication", 600, adjudication},
      {6, "simple germ classification, d=2..5, kmax=8, N=9", 600, classification},
      {7, "nonsimple instances separated", 600, nonsimple},
      {8, "signed permutation invariance", 600, linear_invariance},
      {9, "parser fuzz", 60, parser_fuzz},
  };
  int unexpected = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      o.pass = false;
      o.detail += "; over time limit";
    }
    const bool known = !o.pass && kKnownFailures.count(c.id);
    if (!o.pass && !known) ++unexpected;
    std::printf("criterion %d %s: %s%s [%.2fs] %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL",
                known ? " (known)" : "", seconds, o.detail.c_str());
  }
  std::printf("unexpected failures: %d\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
