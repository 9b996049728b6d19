#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arczeta/mpoly.h"
#include "arczeta/target.h"
#include "arczeta/upoly.h"

namespace arczeta {

/// A polynomial germ f : (R^dim, 0) -> (R, 0). The first x_count coordinates
/// form the x-block (a_s, b_s, ... in arc coefficients); the rest are the
/// quadratic y-block (c_s^i).
struct GermPolynomial {
  struct Term {
    MPoly::Coeff coeff = 0;
    std::vector<int> exponents;  // length dim
  };

  int dim = 0;
  int x_count = 0;
  std::vector<Term> terms;

  std::string to_string() const;
  /// Applies x_i -> sign_i * x_{perm[i]}: the result g satisfies
  /// g(x) = f(L x) with (L x)_i = signs[i] * x_{perm[i]}.
  GermPolynomial transformed(const std::vector<int>& perm, const std::vector<int>& signs) const;
};

enum class Relation { kZero, kNonzero };

/// poly == 0 or poly != 0.
struct Constraint {
  MPoly poly;
  Relation rel = Relation::kZero;
};

/// Constraint system on the coefficients of arcs gamma in P_n[t]; variable
/// (s - 1) * dim + j is the coefficient of t^s in coordinate j.
struct ArcSystem {
  int dim = 0;
  int x_count = 0;
  int order = 0;
  Target target;
  std::vector<std::string> names;
  std::vector<Constraint> constraints;
  int free_count = 0;

  int variable_count() const { return dim * order; }
  int degree_of(int var) const { return var / dim + 1; }
  int coord_of(int var) const { return var % dim; }
  bool in_x_block(int var) const { return coord_of(var) < x_count; }
  std::string describe() const;
};

/// Builds the system "f o gamma has order exactly n" (naive) or
/// "f o gamma = eps t^n + ..." (signed): coefficients of t^1..t^{n-1} vanish
/// and the t^n coefficient is != 0 or == eps.
ArcSystem build_system(const GermPolynomial& germ, int n, Target target);

struct TraceNode {
  std::string rule;
  std::string detail;
  UPoly value;
  std::vector<TraceNode> children;
};

nlohmann::json trace_to_json(const TraceNode& node);
/// Checks that every node's value is recomposed from its children by its
/// rule (sum for splits, difference, product for factorisations).
bool audit_trace(const TraceNode& node, std::string* error = nullptr);

struct EngineOptions {
  std::size_t stratum_budget = 10000;
  bool trace = false;

  /// Defaults overridden by ARCZETA_STRATUM_BUDGET when set.
  static EngineOptions from_environment();
};

struct EngineOutcome {
  enum class Failure { kNone, kUnmatchedTerminal, kDepthExceeded };

  std::optional<UPoly> result;
  Failure failure = Failure::kNone;
  std::string reason;
  std::size_t strata = 0;
  std::optional<TraceNode> trace;

  bool ok() const { return result.has_value(); }
};

/// Computes beta of the solution set of the system by additive
/// decomposition: linear elimination, free variable collection, case splits
/// on vanishing, and a terminal catalog.
EngineOutcome decompose(const ArcSystem& sys, const EngineOptions& options = {});

/// build_system followed by decompose.
EngineOutcome beta_of(const GermPolynomial& germ, int n, Target target, const EngineOptions& options = {});

/// Number of distinct real roots of an integer polynomial in one variable
/// (coefficients indexed by degree).
int count_real_roots(const std::vector<MPoly::Coeff>& coeffs);

}  // namespace arczeta
