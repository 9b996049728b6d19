#include "arczeta/zeta_table.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "arczeta/arc_formulas.h"

namespace arczeta {

std::string to_string(Source s) {
  switch (s) {
    case Source::kFormulas:
      return "formulas";
    case Source::kOracle:
      return "oracle";
    case Source::kHybrid:
      return "hybrid";
  }
  return "?";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kFormula:
      return "formula";
    case Provenance::kOracle:
      return "oracle";
    case Provenance::kUnavailable:
      return "unavailable";
  }
  return "?";
}

Source parse_source(const std::string& text) {
  if (text == "formulas") return Source::kFormulas;
  if (text == "oracle") return Source::kOracle;
  if (text == "hybrid") return Source::kHybrid;
  throw std::invalid_argument("unknown source '" + text + "' (expected formulas, oracle or hybrid)");
}

const std::vector<Target>& channels() {
  static const std::vector<Target> c = {Target::plus(), Target::minus(), Target::naive()};
  return c;
}

namespace {

ZetaCell oracle_cell(const GermSpec& g, int n, Target t, const EngineOptions& options) {
  ZetaCell cell;
  EngineOutcome out = beta_of(g.polynomial(), n, t, options);
  if (out.trace) cell.trace = trace_to_json(*out.trace);
  if (out.ok()) {
    cell.value = out.result;
    cell.provenance = Provenance::kOracle;
  } else {
    cell.note = out.reason;
  }
  return cell;
}

}  // namespace

ZetaCell compute_cell(const GermSpec& g, int n, Target t, Source source, const EngineOptions& options) {
  if (source == Source::kOracle) return oracle_cell(g, n, t, options);
  std::optional<UPoly> f = formula_value(g, n, t);
  if (source == Source::kFormulas) {
    ZetaCell cell;
    if (f) {
      cell.value = f;
      cell.provenance = Provenance::kFormula;
    } else {
      cell.note = "no closed form covers this cell";
    }
    return cell;
  }
  ZetaCell cell = oracle_cell(g, n, t, options);
  if (!f) return cell;
  if (cell.available() && *cell.value != *f) {
    throw FormulaOracleMismatch(g.render() + " n=" + std::to_string(n) + " " + t.name() + ": formula " +
                                f->to_string() + " but engine " + cell.value->to_string());
  }
  cell.value = f;
  cell.provenance = Provenance::kFormula;
  cell.note.clear();
  return cell;
}

const ZetaCell& ZetaRow::at(Target t) const {
  if (t.is_naive()) return naive;
  return t.eps == Sign::kPlus ? plus : minus;
}

ZetaCell& ZetaRow::at(Target t) {
  return const_cast<ZetaCell&>(static_cast<const ZetaRow&>(*this).at(t));
}

ZetaTable zeta_table(const GermSpec& g, int N, Source source, const EngineOptions& options) {
  if (N < 2) throw std::invalid_argument("zeta_table: N must be >= 2");
  g.validate();
  ZetaTable table{g, N, source, {}};
  for (int n = 2; n <= N; ++n) {
    ZetaRow row;
    row.n = n;
    for (Target t : channels()) row.at(t) = compute_cell(g, n, t, source, options);
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string ZetaTable::series(Target t) const {
  std::ostringstream os;
  os << "Z" << (t.is_naive() ? "" : (t.eps == Sign::kPlus ? "^+" : "^-")) << "(T) = ";
  bool first = true;
  for (const ZetaRow& row : rows) {
    const ZetaCell& c = row.at(t);
    if (c.available() && c.value->is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << (c.available() ? c.value->to_string() : "?") << ")*T^" << row.n;
  }
  if (first) os << "0";
  os << " + O(T^" << N + 1 << ")";
  return os.str();
}

nlohmann::json ZetaTable::to_json() const {
  nlohmann::json j;
  j["germ"] = germ.render();
  j["d"] = germ.dim();
  j["N"] = N;
  j["source"] = to_string(source);
  j["rows"] = nlohmann::json::array();
  for (const ZetaRow& row : rows) {
    nlohmann::json r;
    r["n"] = row.n;
    nlohmann::json prov;
    for (Target t : channels()) {
      const ZetaCell& c = row.at(t);
      r[t.name()] = c.available() ? nlohmann::json(c.value->to_string()) : nlohmann::json(nullptr);
      prov[t.name()] = to_string(c.provenance);
      if (!c.note.empty()) r["notes"][t.name()] = c.note;
      if (c.trace) r["traces"][t.name()] = *c.trace;
    }
    r["provenance"] = prov;
    j["rows"].push_back(r);
  }
  return j;
}

std::string ZetaTable::to_csv() const {
  std::ostringstream os;
  os << "germ,n,channel,value,provenance\n";
  for (const ZetaRow& row : rows)
    for (Target t : channels()) {
      const ZetaCell& c = row.at(t);
      os << '"' << germ.render() << "\"," << row.n << ',' << t.name() << ','
         << (c.available() ? c.value->to_string() : "") << ',' << to_string(c.provenance) << '\n';
    }
  return os.str();
}

std::string ZetaTable::to_text() const {
  std::ostringstream os;
  os << "germ " << germ.render() << "  d=" << germ.dim() << "  N=" << N << "  source=" << to_string(source) << "\n";
  std::vector<std::vector<std::string>> grid = {{"n", "plus", "minus", "naive", "provenance"}};
  for (const ZetaRow& row : rows) {
    std::vector<std::string> line = {std::to_string(row.n)};
    std::string prov;
    for (Target t : channels()) {
      const ZetaCell& c = row.at(t);
      line.push_back(c.available() ? c.value->to_string() : "?");
      prov += to_string(c.provenance).substr(0, 1);
    }
    line.push_back(prov);
    grid.push_back(line);
  }
  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const auto& line : grid)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << std::left << std::setw(static_cast<int>(width[i])) << line[i];
      if (i + 1 < line.size()) os << "  ";
    }
    os << "\n";
  }
  for (Target t : channels()) os << series(t) << "\n";
  return os.str();
}

CorankIndex corank_index(const GermSpec& g) {
  const int d = g.dim();
  EngineOptions options;
  UPoly plus = *oracle_cell(g, 2, Target::plus(), options).value;
  UPoly minus = *oracle_cell(g, 2, Target::minus(), options).value;
  std::optional<CorankIndex> found;
  for (int r = 0; r <= d; ++r)
    for (int p = 0; p <= r; ++p) {
      QuadSignature sig{p, r - p};
      if (arc_order2(d, sig, Target::plus()) != plus || arc_order2(d, sig, Target::minus()) != minus) continue;
      if (found) throw std::logic_error("corank_index: order-2 coefficients do not determine the index");
      found = CorankIndex{d - r, sig};
    }
  if (!found) throw std::logic_error("corank_index: no quadratic index matches the order-2 coefficients");
  return *found;
}

}  // namespace arczeta
