#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arczeta/germ.h"
#include "arczeta/quadric_catalog.h"
#include "arczeta/target.h"
#include "arczeta/upoly.h"

namespace arczeta {

/// Raised when a (germ, order, target) cell has no closed form; callers fall
/// back to the stratification engine.
struct UseOracle : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Nondegenerate quadric Q_{p,q} on R^{p+q}.

/// beta(A_l^eps(Q)) in closed form, l >= 2.
UPoly arc_Q_signed(int l, Sign eps, QuadSignature sig);
/// Same value through the two-step recursion l -> l - 2.
UPoly arc_Q_recursive(int l, Sign eps, QuadSignature sig);
/// beta(A_l(Q)), l >= 2.
UPoly arc_Q_naive(int l, QuadSignature sig);
UPoly arc_Q(int l, Target t, QuadSignature sig);

/// Order-2 coefficient of a germ on R^d with quadratic part Q_{p,q}.
UPoly arc_order2(int d, QuadSignature sig, Target t);

/// sign*x^{k+1} + Q; covered for 2 <= l <= k + 1.
UPoly arc_Ak(int k, Sign s, int l, Target t, QuadSignature sig);

/// G = x1*x2^2 + Q; any l >= 1.
UPoly arc_G(int l, Target t, QuadSignature sig);

/// eps1*x1*x2^2 + eps2*x1^{k-1} + Q; covered for 2 <= l <= k - 1, and
/// l = 4 when k = 4.
UPoly arc_Dk(int k, Sign e1, Sign e2, int l, Target t, QuadSignature sig);

/// Order 4 of D_4; cls is the product eps1*eps2.
UPoly arc_D4_order4(Sign cls, Target t, QuadSignature sig);

enum class EKind { kE6Plus, kE6Minus, kE7, kE8 };
/// Covered: l = 3 signed (all), l = 4 naive (all), l = 4, 5 signed (E7, E8).
UPoly arc_E(EKind which, int l, Target t, QuadSignature sig);

/// x1^3 + Q on R^{p+q+2}; l in {3, 4, 5}.
UPoly arc_cube(int l, Target t, QuadSignature sig);

/// Formula value of the order-n coefficient, or nullopt where no formula
/// covers the cell. n = 1 is always 0 (no linear part).
std::optional<UPoly> formula_value(const GermSpec& g, int n, Target t);

/// A point where two readings of a formula can be compared with the oracle.
struct FormulaCell {
  GermSpec germ;
  int n = 0;
  Target target;
};

/// A formula whose printed statement and whose derivation disagree. Both
/// callables are total on grid.
struct FormulaVariant {
  std::string id;
  std::string description;
  std::string stated_text;
  std::string proof_text;
  std::function<UPoly(const FormulaCell&)> stated;
  std::function<UPoly(const FormulaCell&)> proof_derived;
  std::vector<FormulaCell> grid;
};

const std::vector<std::string>& formula_variant_ids();
/// Throws std::invalid_argument for an unknown id.
FormulaVariant formula_variants(const std::string& id);

}  // namespace arczeta
