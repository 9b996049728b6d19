#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "arczeta/germ.h"
#include "arczeta/zeta_table.h"

namespace arczeta {

/// Memoised zeta cells keyed by rendered germ, order and channel.
class CellCache {
 public:
  CellCache(Source source, EngineOptions options) : source_(source), options_(options) {}

  const ZetaCell& get(const GermSpec& g, int n, Target t);
  Source source() const { return source_; }

 private:
  Source source_;
  EngineOptions options_;
  std::map<std::tuple<std::string, int, std::string>, ZetaCell> cells_;
};

/// First differing zeta coefficient of two germs, scanning n ascending and
/// channels plus, minus, naive; or "indistinguishable up to N".
struct Distinguisher {
  std::string germ1, germ2;
  int N = 0;
  bool found = false;
  int n = 0;
  Target channel;
  UPoly value1, value2;
  Provenance provenance1 = Provenance::kUnavailable, provenance2 = Provenance::kUnavailable;
  std::vector<std::string> unavailable;  // cells skipped before the verdict

  /// "n/channel" or "indistinguishable<=N".
  std::string summary() const;
  nlohmann::json to_json() const;
};

/// Throws std::invalid_argument when the ambient dimensions differ.
Distinguisher distinguish(const GermSpec& g1, const GermSpec& g2, int N, CellCache& cache);
Distinguisher distinguish(const GermSpec& g1, const GermSpec& g2, int N, Source source,
                          const EngineOptions& options = EngineOptions::from_environment());

/// All simple normal forms on R^d with family parameter <= kmax, every sign
/// pattern and every index (p, q).
std::vector<GermSpec> simple_germs(int d, int kmax);

struct PairEntry {
  GermSpec g1, g2;
  bool equivalent = false;
  Distinguisher result;
  bool ok = false;
};

struct ClassificationReport {
  int d = 0, kmax = 0, N = 0;
  Source source = Source::kHybrid;
  std::vector<GermSpec> germs;
  std::vector<PairEntry> pairs;

  int failures() const;
  nlohmann::json to_json() const;
  /// Rows and columns are canonical germs; cells "=" or n followed by the
  /// channel (+, -, n for naive).
  std::string to_matrix() const;
};

ClassificationReport ade_table(int d, int kmax, int N, Source source,
                               const EngineOptions& options = EngineOptions::from_environment());

/// J_{2,0} (b=1), J_{2,1} (a_0=1), J_{3,0} (b=1) suspended by Q(0,0), Q(1,1).
std::vector<GermSpec> default_nonsimple_instances();

struct NonsimpleEntry {
  GermSpec instance;
  std::vector<Distinguisher> separations;  // one per simple corank-2 germ
  std::vector<std::string> cube_mismatches;  // orders 4, 5 signed cells
  std::vector<std::string> problems;
  bool ok = false;
};

struct NonsimpleReport {
  int N = 0;
  std::vector<NonsimpleEntry> entries;

  int failures() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// For corank-2 instances with nonzero 3-jet: checks that the signed order
/// 4 and 5 cells equal those of x1^3 + Q and that every simple corank-2
/// germ of the same dimension (D_k with k <= kmax, E6, E7, E8) is separated
/// at some n <= N.
NonsimpleReport nonsimple_report(const std::vector<GermSpec>& instances, int N, Source source, int kmax = 8,
                                 const EngineOptions& options = EngineOptions::from_environment());

struct SuiteItem {
  enum class Status { kPass, kFail, kDiscrepancy };
  std::string section;
  std::string item;
  std::string expected;
  std::string observed;
  Status status = Status::kPass;
};

std::string to_string(SuiteItem::Status s);

struct VariantLedgerEntry {
  std::string id, description, stated_text, proof_text;
  int cells = 0;
  int stated_matches = 0;
  int proof_matches = 0;
  std::string first_stated_mismatch;
};

struct SuiteReport {
  std::vector<SuiteItem> items;
  std::vector<VariantLedgerEntry> ledger;

  int failures() const;
  int discrepancies() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Runs every formula/engine adjudication and the classification
/// conclusions at small scale. Printed values refuted by the engine are
/// reported as discrepancies, not failures.
SuiteReport verify_paper_suite(const EngineOptions& options = EngineOptions::from_environment());

}  // namespace arczeta
