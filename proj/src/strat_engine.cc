#include "arczeta/strat_engine.h"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "arczeta/quadric_catalog.h"

namespace arczeta {

// ---------------------------------------------------------------------------
// Germ polynomials and system construction
// ---------------------------------------------------------------------------

std::string GermPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    auto mag = t.coeff < 0 ? -t.coeff : t.coeff;
    os << (first ? (t.coeff < 0 ? "-" : "") : (t.coeff < 0 ? " - " : " + "));
    first = false;
    bool any = false;
    if (mag != 1) {
      os << mag;
      any = true;
    }
    for (int j = 0; j < dim; ++j) {
      if (t.exponents[j] == 0) continue;
      if (any) os << "*";
      os << "x" << (j + 1);
      if (t.exponents[j] != 1) os << "^" << t.exponents[j];
      any = true;
    }
    if (!any) os << mag;
  }
  return first ? "0" : os.str();
}

GermPolynomial GermPolynomial::transformed(const std::vector<int>& perm, const std::vector<int>& signs) const {
  if (static_cast<int>(perm.size()) != dim || static_cast<int>(signs.size()) != dim)
    throw std::invalid_argument("GermPolynomial::transformed: size mismatch");
  GermPolynomial out{dim, x_count, {}};
  for (const auto& t : terms) {
    Term nt{t.coeff, std::vector<int>(dim, 0)};
    for (int i = 0; i < dim; ++i) {
      nt.exponents[perm[i]] += t.exponents[i];
      if (signs[i] < 0 && t.exponents[i] % 2 == 1) nt.coeff = -nt.coeff;
    }
    out.terms.push_back(std::move(nt));
  }
  return out;
}

std::string ArcSystem::describe() const {
  std::ostringstream os;
  os << "arc system: dim=" << dim << " order=" << order << " target=" << target.name() << " variables="
     << variable_count() << " free=" << free_count << "\n";
  for (const auto& c : constraints) {
    os << "  " << c.poly.to_string() << (c.rel == Relation::kZero ? " = 0" : " != 0") << "\n";
  }
  return os.str();
}

namespace {

using Series = std::vector<MPoly>;  // index = power of t, truncated

Series series_mul(const Series& a, const Series& b, int n) {
  Series r(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

std::string symbol_name(int dim, int x_count, int var) {
  int s = var / dim + 1;
  int j = var % dim;
  std::ostringstream os;
  if (j < x_count) {
    if (x_count <= 3)
      os << static_cast<char>('a' + j) << s;
    else
      os << "x" << (j + 1) << "_" << s;
  } else {
    os << "c" << s << "^" << (j - x_count + 1);
  }
  return os.str();
}

}  // namespace

ArcSystem build_system(const GermPolynomial& germ, int n, Target target) {
  if (n < 1) throw std::invalid_argument("build_system: order must be >= 1");
  ArcSystem sys;
  sys.dim = germ.dim;
  sys.x_count = germ.x_count;
  sys.order = n;
  sys.target = target;
  const int d = germ.dim;
  for (int v = 0; v < d * n; ++v) sys.names.push_back(symbol_name(d, germ.x_count, v));

  // powers[j][e] = (sum_s v_{s,j} t^s)^e truncated at t^n
  std::vector<std::vector<Series>> powers(d);
  for (int j = 0; j < d; ++j) {
    Series base(n + 1);
    for (int s = 1; s <= n; ++s) base[s] = MPoly::variable((s - 1) * d + j);
    Series one(n + 1);
    one[0] = MPoly(1);
    powers[j].push_back(one);
    powers[j].push_back(base);
  }
  auto power = [&](int j, int e) -> const Series& {
    while (static_cast<int>(powers[j].size()) <= e) powers[j].push_back(series_mul(powers[j].back(), powers[j][1], n));
    return powers[j][e];
  };

  Series total(n + 1);
  for (const auto& term : germ.terms) {
    int tdeg = std::accumulate(term.exponents.begin(), term.exponents.end(), 0);
    if (tdeg > n) continue;  // every arc coordinate has order >= 1
    Series acc(n + 1);
    acc[0] = MPoly(term.coeff);
    for (int j = 0; j < d; ++j)
      if (term.exponents[j] > 0) acc = series_mul(acc, power(j, term.exponents[j]), n);
    for (int i = 0; i <= n; ++i) total[i] += acc[i];
  }

  for (int o = 1; o < n; ++o)
    if (!total[o].is_zero()) sys.constraints.push_back({total[o], Relation::kZero});
  if (target.is_naive())
    sys.constraints.push_back({total[n], Relation::kNonzero});
  else
    sys.constraints.push_back({total[n] - MPoly(to_int(target.eps)), Relation::kZero});

  std::set<int> used;
  for (const auto& c : sys.constraints)
    for (int v : c.poly.variables()) used.insert(v);
  sys.free_count = d * n - static_cast<int>(used.size());
  return sys;
}

// ---------------------------------------------------------------------------
// Real root counting
// ---------------------------------------------------------------------------

namespace {

using Rational = boost::multiprecision::cpp_rational;
using RPoly = std::vector<Rational>;  // index = degree, trimmed

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly remainder(RPoly a, const RPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const std::vector<MPoly::Coeff>& coeffs) {
  RPoly p(coeffs.begin(), coeffs.end());
  trim(p);
  if (p.empty()) throw std::invalid_argument("count_real_roots: zero polynomial");
  if (p.size() == 1) return 0;
  RPoly dp;
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * static_cast<int>(i));
  std::vector<RPoly> chain{p, dp};
  while (true) {
    RPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  std::vector<int> at_neg, at_pos;
  for (const auto& q : chain) {
    int lead = q.back() > 0 ? 1 : -1;
    int deg = static_cast<int>(q.size()) - 1;
    at_pos.push_back(lead);
    at_neg.push_back(deg % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

// ---------------------------------------------------------------------------
// Decomposition
// ---------------------------------------------------------------------------

namespace {

const UPoly kU = UPoly::u_pow(1);

struct EngineError {
  EngineOutcome::Failure kind;
  std::string reason;
};

struct State {
  std::vector<Constraint> cons;
  std::set<int> vars;     // variables still present (not substituted or eliminated)
  std::set<int> nonzero;  // variables assumed != 0
};

// beta({sum of p positive and q negative squares = eps}) by peeling one
// hyperbolic pair at a time.
UPoly fiber_by_peeling(int p, int q, int eps) {
  int n = p + q;
  if (p > 0 && q > 0) return (kU - 1) * UPoly::u_pow(n - 2) + kU * fiber_by_peeling(p - 1, q - 1, eps);
  int same = eps > 0 ? p : q;  // squares with the sign of eps
  if (same == 0) return UPoly();
  return UPoly::u_pow(same - 1) + 1;  // sphere S^{same-1}
}

UPoly zero_by_peeling(int p, int q) {
  int n = p + q;
  if (p > 0 && q > 0) return (kU - 1) * UPoly::u_pow(n - 2) + kU * zero_by_peeling(p - 1, q - 1);
  return UPoly(1);
}

class Decomposer {
 public:
  Decomposer(const ArcSystem& sys, const EngineOptions& opt) : sys_(sys), opt_(opt) {}

  UPoly run(TraceNode* trace) {
    State s;
    s.cons = sys_.constraints;
    for (int v = 0; v < sys_.variable_count(); ++v) s.vars.insert(v);
    return solve(std::move(s), trace);
  }

  std::size_t strata() const { return strata_; }

 private:
  std::string name(int v) const { return sys_.names[v]; }

  // Split priority: lower arc degree first, y-block before x-block.
  std::tuple<int, int, int> key(int v) const {
    return {sys_.degree_of(v), sys_.in_x_block(v) ? 1 : 0, sys_.coord_of(v)};
  }

  static bool monomial_assumed(const Monomial& m, const std::set<int>& nonzero) {
    return std::all_of(m.begin(), m.end(), [&](const auto& ve) { return nonzero.count(ve.first) > 0; });
  }

  // Returns false when the stratum is empty.
  bool substitute_zero(State& s, int v, std::string& log) {
    if (s.nonzero.count(v)) return false;
    s.vars.erase(v);
    for (auto& c : s.cons) c.poly = c.poly.substitute_zero(v);
    log += name(v) + "=0 ";
    return true;
  }

  bool simplify(State& s, std::string& log) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < s.cons.size() && !changed; ++i) {
        Constraint& c = s.cons[i];
        if (auto g = c.poly.content(); g > 1) c.poly = c.poly.divided(g);
        for (const auto& [v, e] : c.poly.common_monomial()) {
          if (s.nonzero.count(v)) {
            c.poly = c.poly.divided_by_power(v, e);
          } else if (c.rel == Relation::kNonzero) {
            s.nonzero.insert(v);
            log += name(v) + "!=0 ";
            c.poly = c.poly.divided_by_power(v, e);
          }
        }
        if (c.poly.is_constant()) {
          bool holds = c.rel == Relation::kZero ? c.poly.is_zero() : !c.poly.is_zero();
          if (!holds) return false;
          s.cons.erase(s.cons.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        if (c.rel != Relation::kZero) continue;
        if (c.poly.size() == 1) {
          const Monomial& m = c.poly.terms().begin()->first;
          if (m.size() == 1) {
            if (!substitute_zero(s, m.front().first, log)) return false;
            changed = true;
          }
          continue;
        }
        // Same-signed sums of even monomials vanish only termwise.
        bool even = true;
        int sign = 0;
        for (const auto& [m, k] : c.poly.terms()) {
          int ks = k > 0 ? 1 : -1;
          if (sign == 0) sign = ks;
          if (ks != sign) even = false;
          for (const auto& [v, e] : m)
            if (e % 2) even = false;
        }
        if (!even) continue;
        for (const auto& [m, k] : c.poly.terms())
          if (monomial_assumed(m, s.nonzero)) return false;
        for (const auto& [m, k] : c.poly.terms()) {
          if (m.size() == 1) {
            if (!substitute_zero(s, m.front().first, log)) return false;
            changed = true;
            break;
          }
        }
      }
    }
    return true;
  }

  // Variable solvable from its single constraint: appears only there, as
  // coeff * v^m with m odd and coeff a nonvanishing monomial.
  std::optional<std::pair<int, std::size_t>> find_elimination(const State& s) const {
    std::map<int, std::vector<std::size_t>> where;
    for (std::size_t i = 0; i < s.cons.size(); ++i)
      for (int v : s.cons[i].poly.variables()) where[v].push_back(i);
    for (auto it = where.rbegin(); it != where.rend(); ++it) {
      int v = it->first;
      if (it->second.size() != 1) continue;
      const Constraint& c = s.cons[it->second.front()];

      auto parts = c.poly.collect(v);
      int powers = 0, m = 0;
      const MPoly* coeff = nullptr;
      for (const auto& [e, p] : parts) {
        if (e == 0) continue;
        ++powers;
        m = e;
        coeff = &p;
      }
      if (powers != 1 || m % 2 == 0 || coeff->size() != 1) continue;
      if (!monomial_assumed(coeff->terms().begin()->first, s.nonzero)) continue;
      return std::make_pair(v, it->second.front());
    }
    return std::nullopt;
  }

  // --- terminal catalog -----------------------------------------------------

  struct Diagonal {
    std::vector<std::pair<MPoly::Coeff, int>> powers;  // (coeff, exponent) per variable
    MPoly::Coeff constant = 0;
  };

  static std::optional<Diagonal> as_diagonal(const MPoly& p) {
    Diagonal d;
    std::set<int> seen;
    for (const auto& [m, k] : p.terms()) {
      if (m.empty()) {
        d.constant = k;
        continue;
      }
      if (m.size() != 1 || !seen.insert(m.front().first).second) return std::nullopt;
      d.powers.emplace_back(k, m.front().second);
    }
    return d;
  }

  std::optional<std::pair<UPoly, std::string>> terminal(const Constraint& c) const {
    const auto vars = c.poly.variables();
    const int n = static_cast<int>(vars.size());
    const bool zero = c.rel == Relation::kZero;
    if (auto diag = as_diagonal(c.poly)) {
      bool odd = std::any_of(diag->powers.begin(), diag->powers.end(), [](auto& ce) { return ce.second % 2; });
      if (odd) {
        // graph of a function of the remaining variables
        UPoly graph = UPoly::u_pow(n - 1);
        return std::make_pair(zero ? graph : UPoly::u_pow(n) - graph, std::string("odd-power graph"));
      }
      int pos = 0, neg = 0;
      for (auto& [k, e] : diag->powers) (k > 0 ? pos : neg)++;
      UPoly value;
      std::string what;
      if (diag->constant == 0) {
        value = zero_by_peeling(pos, neg);
        what = "quadric zero set (" + std::to_string(pos) + "," + std::to_string(neg) + ")";
      } else {
        int eps = diag->constant > 0 ? -1 : 1;
        value = fiber_by_peeling(pos, neg, eps);
        what = "quadric fiber (" + std::to_string(pos) + "," + std::to_string(neg) + ")=" + (eps > 0 ? "+1" : "-1");
      }
      if (!zero) {
        value = UPoly::u_pow(n) - value;
        what += " complement";
      }
      return std::make_pair(value, what);
    }
    if (n == 1) {
      int v = *vars.begin();
      auto parts = c.poly.collect(v);
      std::vector<MPoly::Coeff> coeffs(parts.rbegin()->first + 1, 0);
      for (const auto& [e, p] : parts) coeffs[e] = p.constant_term();
      int roots = count_real_roots(coeffs);
      UPoly value = zero ? UPoly(roots) : kU - roots;
      return std::make_pair(value, "univariate, " + std::to_string(roots) + " real roots");
    }
    if (n == 2 && zero) {
      if (auto curve = as_d_curve(c.poly)) return curve;
    }
    return std::nullopt;
  }

  // alpha*v*w^2 + beta*v^j + gamma with gamma != 0, j >= 3.
  static std::optional<std::pair<UPoly, std::string>> as_d_curve(const MPoly& p) {
    if (p.size() != 3 || p.constant_term() == 0) return std::nullopt;
    MPoly::Coeff alpha = 0, beta = 0, gamma = p.constant_term();
    int v_mixed = -1, w = -1, v_pure = -1, j = 0;
    for (const auto& [m, k] : p.terms()) {
      if (m.empty()) continue;
      if (m.size() == 2) {
        if (m[0].second == 1 && m[1].second == 2) {
          v_mixed = m[0].first;
          w = m[1].first;
        } else if (m[1].second == 1 && m[0].second == 2) {
          v_mixed = m[1].first;
          w = m[0].first;
        } else {
          return std::nullopt;
        }
        alpha = k;
      } else {
        v_pure = m[0].first;
        j = m[0].second;
        beta = k;
      }
    }
    if (v_mixed < 0 || v_pure != v_mixed || j < 3 || w == v_mixed) return std::nullopt;
    // alpha v w^2 + beta v^j = -gamma; rescale to signs, then v -> -v if alpha < 0.
    Sign eps = sign_of(-gamma);
    Sign sb = sign_of(beta);
    if (alpha < 0 && j % 2 == 1) sb = -sb;
    UPoly value = beta_D_curve(j + 1, sb, eps);
    return std::make_pair(value, std::string("D-curve k=") + std::to_string(j + 1));
  }

  // --- recursion ------------------------------------------------------------

  void charge() {
    if (++strata_ > opt_.stratum_budget)
      throw EngineError{EngineOutcome::Failure::kDepthExceeded,
                        "stratum budget of " + std::to_string(opt_.stratum_budget) + " exceeded"};
  }

  UPoly solve(State s, TraceNode* node) {
    charge();
    std::string log;
    if (!simplify(s, log)) {
      if (node) *node = {"empty", log, UPoly(), {}};
      return UPoly();
    }
    UPoly factor(1);
    while (auto e = find_elimination(s)) {
      auto [v, idx] = *e;
      bool ne = s.cons[idx].rel == Relation::kNonzero;
      if (ne && s.nonzero.count(v)) {
        // v avoids 0 and the root of the constraint; they coincide where rest = 0.
        MPoly rest = s.cons[idx].poly.substitute_zero(v);
        State generic = s, coincide = s;
        generic.cons.erase(generic.cons.begin() + static_cast<std::ptrdiff_t>(idx));
        coincide.cons[idx] = {rest, Relation::kZero};
        for (State* st : {&generic, &coincide}) {
          st->vars.erase(v);
          st->nonzero.erase(v);
        }
        log += "solve " + name(v) + " (avoid 2 values) ";
        TraceNode* avoid = nullptr;
        if (node) {
          *node = {"stratum", log + "factor " + factor.to_string(), UPoly(), {}};
          avoid = &node->children.emplace_back();
          *avoid = {"avoid", name(v), UPoly(), {}};
          avoid->children.resize(2);
        }
        UPoly a = solve(std::move(generic), avoid ? &avoid->children[0] : nullptr);
        UPoly b = solve(std::move(coincide), avoid ? &avoid->children[1] : nullptr);
        UPoly inner = (kU - 2) * a + b;
        if (avoid) avoid->value = inner;
        UPoly value = factor * inner;
        if (node) node->value = value;
        return value;
      }
      log += "solve " + name(v) + (ne ? " (avoid 1 value) " : " ");
      if (ne) factor *= (kU - 1);
      if (s.nonzero.count(v)) {
        // v = root of (-rest / coeff) is nonzero exactly when rest is.
        s.cons[idx] = {s.cons[idx].poly.substitute_zero(v), Relation::kNonzero};
        s.nonzero.erase(v);
        log += "(keep " + name(v) + "!=0) ";
      } else {
        s.cons.erase(s.cons.begin() + static_cast<std::ptrdiff_t>(idx));
      }
      s.vars.erase(v);
      if (!simplify(s, log)) {
        if (node) *node = {"empty", log, UPoly(), {}};
        return UPoly();
      }
    }

    // components
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
      auto it = parent.find(x);
      if (it == parent.end() || it->second == x) return x;
      return it->second = find(it->second);
    };
    for (const auto& c : s.cons) {
      auto vs = c.poly.variables();
      for (int v : vs) parent.try_emplace(v, v);
      int root = find(*vs.begin());
      for (int v : vs) parent[find(v)] = root;
    }
    int free_plain = 0, free_nonzero = 0;
    for (int v : s.vars) {
      if (parent.count(v)) continue;
      (s.nonzero.count(v) ? free_nonzero : free_plain)++;
    }
    factor *= UPoly::u_pow(free_plain) * (kU - 1).pow(free_nonzero);
    if (free_plain || free_nonzero)
      log += "free " + std::to_string(free_plain) + (free_nonzero ? "+" + std::to_string(free_nonzero) + "*" : "") + " ";

    std::map<int, State> comps;
    for (auto& c : s.cons) {
      int root = find(*c.poly.variables().begin());
      comps[root].cons.push_back(std::move(c));
    }
    for (auto& [root, comp] : comps) {
      for (const auto& c : comp.cons)
        for (int v : c.poly.variables()) {
          comp.vars.insert(v);
          if (s.nonzero.count(v)) comp.nonzero.insert(v);
        }
    }

    if (node) {
      node->rule = comps.size() > 1 ? "product" : "stratum";
      node->detail = log;
      node->children.clear();
    }
    UPoly result = factor;
    for (auto& [root, comp] : comps) {
      TraceNode* child = nullptr;
      if (node) child = &node->children.emplace_back();
      UPoly part = solve_component(std::move(comp), child);
      result *= part;
      if (result.is_zero()) break;
    }
    if (node) node->value = result;
    if (node) node->detail += "factor " + factor.to_string();
    return result;
  }

  UPoly solve_component(State s, TraceNode* node) {
    charge();
    if (s.cons.size() == 1) {
      if (s.nonzero.empty()) {
        if (auto t = terminal(s.cons.front())) {
          if (node) *node = {"terminal", t->second + ": " + s.cons.front().poly.to_string(), t->first, {}};
          return t->first;
        }
      } else {
        // Assumptions on a terminal shape: beta(S, v!=0) = beta(S) - beta(S, v=0).
        State bare = s;
        bare.nonzero.clear();
        if (terminal(bare.cons.front())) {
          int v = *s.nonzero.begin();
          State without = s;
          without.nonzero.erase(v);
          State at_zero = s;
          at_zero.nonzero.erase(v);
          std::string ignored;
          bool nonempty = substitute_zero(at_zero, v, ignored);
          TraceNode *a = nullptr, *b = nullptr;
          if (node) {
            *node = {"difference", name(v) + "!=0", UPoly(), {}};
            node->children.resize(2);
            a = &node->children[0];
            b = &node->children[1];
          }
          UPoly whole = solve(std::move(without), a);
          UPoly zero_part = nonempty ? solve(std::move(at_zero), b) : UPoly();
          if (b && !nonempty) *b = {"empty", "", UPoly(), {}};
          UPoly value = whole - zero_part;
          if (node) node->value = value;
          return value;
        }
      }
    }

    // Split variable: a vanishing monomial forces one of its factors to vanish;
    // otherwise take the lowest-priority unassumed variable.
    std::optional<int> split;
    for (const auto& c : s.cons) {
      if (c.rel != Relation::kZero || c.poly.size() != 1) continue;
      for (const auto& [v, e] : c.poly.terms().begin()->first)
        if (!s.nonzero.count(v) && (!split || key(v) < key(*split))) split = v;
      if (split) break;
    }
    if (!split) {
      for (int v : s.vars)
        if (!s.nonzero.count(v) && (!split || key(v) < key(*split))) split = v;
    }
    if (!split) {
      std::ostringstream os;
      os << "no rule applies to component:";
      for (const auto& c : s.cons) os << " [" << c.poly.to_string() << (c.rel == Relation::kZero ? " = 0]" : " != 0]");
      throw EngineError{EngineOutcome::Failure::kUnmatchedTerminal, os.str()};
    }
    int v = *split;
    State nonzero_branch = s;
    nonzero_branch.nonzero.insert(v);
    State zero_branch = std::move(s);
    std::string ignored;
    substitute_zero(zero_branch, v, ignored);
    TraceNode *a = nullptr, *b = nullptr;
    if (node) {
      *node = {"split", name(v), UPoly(), {}};
      node->children.resize(2);
      a = &node->children[0];
      b = &node->children[1];
    }
    UPoly value = solve(std::move(nonzero_branch), a) + solve(std::move(zero_branch), b);
    if (node) node->value = value;
    return value;
  }

  const ArcSystem& sys_;
  const EngineOptions& opt_;
  std::size_t strata_ = 0;
};

}  // namespace

EngineOptions EngineOptions::from_environment() {
  EngineOptions opt;
  if (const char* env = std::getenv("ARCZETA_STRATUM_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) opt.stratum_budget = static_cast<std::size_t>(v);
  }
  return opt;
}

EngineOutcome decompose(const ArcSystem& sys, const EngineOptions& options) {
  EngineOutcome out;
  Decomposer dec(sys, options);
  TraceNode root;
  try {
    out.result = dec.run(options.trace ? &root : nullptr);
    if (options.trace) out.trace = std::move(root);
  } catch (const EngineError& e) {
    out.failure = e.kind;
    out.reason = e.reason;
  }
  out.strata = dec.strata();
  return out;
}

EngineOutcome beta_of(const GermPolynomial& germ, int n, Target target, const EngineOptions& options) {
  return decompose(build_system(germ, n, target), options);
}

nlohmann::json trace_to_json(const TraceNode& node) {
  nlohmann::json j;
  j["rule"] = node.rule;
  j["detail"] = node.detail;
  j["value"] = node.value.to_string();
  if (!node.children.empty()) {
    j["children"] = nlohmann::json::array();
    for (const auto& c : node.children) j["children"].push_back(trace_to_json(c));
  }
  return j;
}

bool audit_trace(const TraceNode& node, std::string* error) {
  for (const auto& c : node.children)
    if (!audit_trace(c, error)) return false;
  UPoly expect;
  if (node.rule == "split") {
    expect = node.children.at(0).value + node.children.at(1).value;
  } else if (node.rule == "avoid") {
    expect = (UPoly::u_pow(1) - 2) * node.children.at(0).value + node.children.at(1).value;
  } else if (node.rule == "difference") {
    expect = node.children.at(0).value - node.children.at(1).value;
  } else if (node.rule == "stratum" || node.rule == "product") {
    // detail ends with "factor <poly>"
    auto pos = node.detail.rfind("factor ");
    if (pos == std::string::npos) {
      if (error) *error = "stratum without factor";
      return false;
    }
    expect = UPoly::parse(node.detail.substr(pos + 7));
    for (const auto& c : node.children) expect *= c.value;
    // An empty product short-circuits once a factor vanishes.
    if (node.value.is_zero()) return true;
  } else {
    return true;  // terminal / empty leaves
  }
  if (expect != node.value) {
    if (error) *error = node.rule + " node does not recompose: " + expect.to_string() + " vs " + node.value.to_string();
    return false;
  }
  return true;
}

}  // namespace arczeta
