#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arczeta/germ.h"
#include "arczeta/strat_engine.h"
#include "arczeta/target.h"
#include "arczeta/upoly.h"

namespace arczeta {

enum class Source { kFormulas, kOracle, kHybrid };
enum class Provenance { kFormula, kOracle, kUnavailable };

std::string to_string(Source s);
std::string to_string(Provenance p);
/// "formulas", "oracle" or "hybrid"; throws std::invalid_argument.
Source parse_source(const std::string& text);

/// The three channels in scan order.
const std::vector<Target>& channels();

struct ZetaCell {
  std::optional<UPoly> value;
  Provenance provenance = Provenance::kUnavailable;
  std::string note;  // failure reason when unavailable
  std::optional<nlohmann::json> trace;

  bool available() const { return value.has_value(); }
};

/// Thrown by the hybrid path when a formula disagrees with the engine.
struct FormulaOracleMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

/// One coefficient beta(A_n^t(g)) through the requested path.
ZetaCell compute_cell(const GermSpec& g, int n, Target t, Source source, const EngineOptions& options);

struct ZetaRow {
  int n = 0;
  ZetaCell naive, plus, minus;

  const ZetaCell& at(Target t) const;
  ZetaCell& at(Target t);
};

struct ZetaTable {
  GermSpec germ;
  int N = 0;
  Source source = Source::kHybrid;
  std::vector<ZetaRow> rows;  // n = 2..N

  /// Truncated series "Z(T) = c_2 T^2 + ...", "?" for unavailable cells.
  std::string series(Target t) const;
  nlohmann::json to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
};

/// Requires N >= 2.
ZetaTable zeta_table(const GermSpec& g, int N, Source source, const EngineOptions& options = EngineOptions::from_environment());

struct CorankIndex {
  int corank = 0;
  QuadSignature sig;
};

/// Recovers corank and index from the engine's n = 2 coefficients by
/// inverting the order-2 closed form over all (p, q) with p + q <= d.
CorankIndex corank_index(const GermSpec& g);

}  // namespace arczeta
