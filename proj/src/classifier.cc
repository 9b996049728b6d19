#include "arczeta/classifier.h"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "arczeta/arc_formulas.h"

namespace arczeta {

const ZetaCell& CellCache::get(const GermSpec& g, int n, Target t) {
  auto key = std::make_tuple(g.render(), n, t.name());
  auto it = cells_.find(key);
  if (it == cells_.end()) it = cells_.emplace(key, compute_cell(g, n, t, source_, options_)).first;
  return it->second;
}

namespace {

char channel_char(Target t) { return t.is_naive() ? 'n' : sign_char(t.eps); }

}  // namespace

std::string Distinguisher::summary() const {
  if (!found) return "indistinguishable<=" + std::to_string(N);
  return std::to_string(n) + "/" + channel.name();
}

nlohmann::json Distinguisher::to_json() const {
  nlohmann::json j;
  j["germ1"] = germ1;
  j["germ2"] = germ2;
  j["N"] = N;
  j["found"] = found;
  if (found) {
    j["n"] = n;
    j["channel"] = channel.name();
    j["value1"] = value1.to_string();
    j["value2"] = value2.to_string();
    j["provenance1"] = to_string(provenance1);
    j["provenance2"] = to_string(provenance2);
  }
  j["unavailable"] = unavailable;
  return j;
}

Distinguisher distinguish(const GermSpec& g1, const GermSpec& g2, int N, CellCache& cache) {
  if (g1.dim() != g2.dim())
    throw std::invalid_argument("distinguish: ambient dimensions differ (" + std::to_string(g1.dim()) + " vs " +
                                std::to_string(g2.dim()) + ")");
  if (N < 2) throw std::invalid_argument("distinguish: N must be >= 2");
  Distinguisher d;
  d.germ1 = g1.render();
  d.germ2 = g2.render();
  d.N = N;
  for (int n = 2; n <= N; ++n)
    for (Target t : channels()) {
      const ZetaCell& a = cache.get(g1, n, t);
      const ZetaCell& b = cache.get(g2, n, t);
      if (!a.available() || !b.available()) {
        d.unavailable.push_back("n=" + std::to_string(n) + " " + t.name());
        continue;
      }
      if (*a.value != *b.value) {
        d.found = true;
        d.n = n;
        d.channel = t;
        d.value1 = *a.value;
        d.value2 = *b.value;
        d.provenance1 = a.provenance;
        d.provenance2 = b.provenance;
        return d;
      }
    }
  return d;
}

Distinguisher distinguish(const GermSpec& g1, const GermSpec& g2, int N, Source source, const EngineOptions& options) {
  CellCache cache(source, options);
  return distinguish(g1, g2, N, cache);
}

std::vector<GermSpec> simple_germs(int d, int kmax) {
  if (d < 2) throw std::invalid_argument("simple_germs: d must be >= 2");
  const Sign signs[] = {Sign::kPlus, Sign::kMinus};
  std::vector<GermSpec> out;
  for (int p = d - 1; p >= 0; --p)
    for (int k = 2; k <= kmax; ++k)
      for (Sign s : signs) out.push_back(GermSpec::A(k, s, {p, d - 1 - p}));
  for (int p = d - 2; p >= 0; --p) {
    QuadSignature sig{p, d - 2 - p};
    for (int k = 4; k <= kmax; ++k)
      for (Sign e1 : signs)
        for (Sign e2 : signs) out.push_back(GermSpec::D(k, e1, e2, sig));
    if (kmax >= 6)
      for (Sign s : signs) out.push_back(GermSpec::E6(s, sig));
    if (kmax >= 7) out.push_back(GermSpec::E7(sig));
    if (kmax >= 8) out.push_back(GermSpec::E8(sig));
  }
  return out;
}

int ClassificationReport::failures() const {
  return static_cast<int>(std::count_if(pairs.begin(), pairs.end(), [](const PairEntry& e) { return !e.ok; }));
}

nlohmann::json ClassificationReport::to_json() const {
  nlohmann::json j;
  j["d"] = d;
  j["kmax"] = kmax;
  j["N"] = N;
  j["source"] = to_string(source);
  j["failures"] = failures();
  j["germs"] = nlohmann::json::array();
  for (const GermSpec& g : germs) j["germs"].push_back(g.render());
  j["pairs"] = nlohmann::json::array();
  for (const PairEntry& e : pairs) {
    nlohmann::json p = e.result.to_json();
    p["equivalent"] = e.equivalent;
    p["ok"] = e.ok;
    j["pairs"].push_back(p);
  }
  return j;
}

std::string ClassificationReport::to_matrix() const {
  std::vector<std::string> canon;
  for (const GermSpec& g : germs) {
    std::string r = canonicalize(g).render();
    if (std::find(canon.begin(), canon.end(), r) == canon.end()) canon.push_back(r);
  }
  std::map<std::pair<std::string, std::string>, const PairEntry*> by_name;
  std::set<std::string> failed;
  for (const PairEntry& e : pairs) {
    by_name[{e.g1.render(), e.g2.render()}] = &e;
    by_name[{e.g2.render(), e.g1.render()}] = &e;
    if (!e.ok) {
      failed.insert(canonicalize(e.g1).render());
      failed.insert(canonicalize(e.g2).render());
    }
  }
  std::ostringstream os;
  os << "d=" << d << " kmax=" << kmax << " N=" << N << " source=" << to_string(source) << " germs=" << germs.size()
     << " classes=" << canon.size() << " pairs=" << pairs.size() << " failures=" << failures() << "\n";
  for (std::size_t i = 0; i < canon.size(); ++i)
    os << std::setw(4) << i << "  " << canon[i] << (failed.count(canon[i]) ? "  [failure]" : "") << "\n";
  os << "\n    ";
  for (std::size_t j = 0; j < canon.size(); ++j) os << std::setw(4) << j;
  os << "\n";
  for (std::size_t i = 0; i < canon.size(); ++i) {
    os << std::setw(4) << i;
    for (std::size_t j = 0; j < canon.size(); ++j) {
      std::string cell;
      if (i == j) {
        cell = "=";
      } else {
        auto it = by_name.find({canon[i], canon[j]});
        if (it == by_name.end()) {
          cell = "?";
        } else if (!it->second->ok) {
          cell = "!!";
        } else if (it->second->result.found) {
          cell = std::to_string(it->second->result.n) + channel_char(it->second->result.channel);
        } else {
          cell = "=";
        }
      }
      os << std::setw(4) << cell;
    }
    os << "\n";
  }
  return os.str();
}

ClassificationReport ade_table(int d, int kmax, int N, Source source, const EngineOptions& options) {
  ClassificationReport report{d, kmax, N, source, simple_germs(d, kmax), {}};
  CellCache cache(source, options);
  const auto& g = report.germs;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      PairEntry e{g[i], g[j], analytic_equiv(g[i], g[j]), distinguish(g[i], g[j], N, cache), false};
      e.ok = e.equivalent ? !e.result.found : e.result.found;
      report.pairs.push_back(std::move(e));
    }
  return report;
}

std::vector<GermSpec> default_nonsimple_instances() {
  std::vector<GermSpec> out;
  for (QuadSignature sig : {QuadSignature{0, 0}, QuadSignature{1, 1}}) {
    out.push_back(GermSpec::J(2, 0, sig));
    out.push_back(GermSpec::J(2, 1, sig));
    out.push_back(GermSpec::J(3, 0, sig));
  }
  return out;
}

int NonsimpleReport::failures() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const NonsimpleEntry& e) { return !e.ok; }));
}

nlohmann::json NonsimpleReport::to_json() const {
  nlohmann::json j;
  j["N"] = N;
  j["failures"] = failures();
  j["entries"] = nlohmann::json::array();
  for (const NonsimpleEntry& e : entries) {
    nlohmann::json x;
    x["instance"] = e.instance.render();
    x["ok"] = e.ok;
    x["cube_mismatches"] = e.cube_mismatches;
    x["problems"] = e.problems;
    x["separations"] = nlohmann::json::array();
    for (const Distinguisher& d : e.separations) x["separations"].push_back(d.to_json());
    j["entries"].push_back(x);
  }
  return j;
}

std::string NonsimpleReport::to_text() const {
  std::ostringstream os;
  os << "N=" << N << " instances=" << entries.size() << " failures=" << failures() << "\n";
  for (const NonsimpleEntry& e : entries) {
    os << "\n" << e.instance.render() << "  " << (e.ok ? "ok" : "FAILED") << "\n";
    os << "  orders 4,5 signed cells vs x1^3 + Q: "
       << (e.cube_mismatches.empty() ? "equal" : std::to_string(e.cube_mismatches.size()) + " mismatches") << "\n";
    for (const std::string& m : e.cube_mismatches) os << "    " << m << "\n";
    for (const std::string& p : e.problems) os << "  problem: " << p << "\n";
    for (const Distinguisher& d : e.separations) {
      os << "  vs " << std::left << std::setw(26) << d.germ2 << " " << d.summary();
      if (d.found) os << "  " << d.value1.to_string() << " | " << d.value2.to_string();
      os << "\n";
    }
  }
  return os.str();
}

NonsimpleReport nonsimple_report(const std::vector<GermSpec>& instances, int N, Source source, int kmax,
                                 const EngineOptions& options) {
  NonsimpleReport report{N, {}};
  CellCache cache(source, options);
  for (const GermSpec& g : instances) {
    NonsimpleEntry e{g, {}, {}, {}, false};
    if (g.family != Family::kJ) {
      e.problems.push_back("not a corank-2 germ with nonzero 3-jet in the nonsimple list");
      report.entries.push_back(std::move(e));
      continue;
    }
    const GermSpec cube = GermSpec::Cube(g.sig);
    bool skipped = false;
    for (int n : {4, 5})
      for (Target t : {Target::plus(), Target::minus()}) {
        const ZetaCell& a = cache.get(g, n, t);
        const ZetaCell& b = cache.get(cube, n, t);
        if (!a.available() || !b.available()) {
          e.problems.push_back("n=" + std::to_string(n) + " " + t.name() + " unavailable: " + a.note + b.note);
          skipped = true;
        } else if (*a.value != *b.value) {
          e.cube_mismatches.push_back("n=" + std::to_string(n) + " " + t.name() + ": " + a.value->to_string() +
                                      " vs " + b.value->to_string());
        }
      }
    if (!skipped) {
      for (const GermSpec& s : simple_germs(g.dim(), kmax)) {
        if (s.x_count() != 2) continue;
        e.separations.push_back(distinguish(g, s, N, cache));
      }
    }
    e.ok = !skipped && e.cube_mismatches.empty() &&
           std::all_of(e.separations.begin(), e.separations.end(), [](const Distinguisher& d) { return d.found; });
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace arczeta
