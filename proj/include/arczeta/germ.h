#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "arczeta/quadric_catalog.h"
#include "arczeta/strat_engine.h"

namespace arczeta {

enum class Family {
  kQ,     // Q_{p,q} alone, d = p+q
  kA,     // sign*x^{k+1} + Q
  kD,     // eps1*x1*x2^2 + eps2*x1^{k-1} + Q
  kE6,    // x1^3 + sign*x2^4 + Q
  kE7,    // x1^3 + x1*x2^3 + Q
  kE8,    // x1^3 + x2^5 + Q
  kCube,  // x1^3 + Q on R^{p+q+2}
  kG,     // x1*x2^2 + Q
  kJ,     // nonsimple J_{k,i} representative
};

/// A normal form: family, integer and sign parameters, and the quadratic
/// suspension Q_{p,q} in fresh variables.
struct GermSpec {
  Family family = Family::kQ;
  int k = 0;  // A_k, D_k, J_{k,i}
  int i = 0;  // J_{k,i}
  Sign sign = Sign::kPlus;   // A sign, E6 sign
  Sign eps1 = Sign::kPlus;   // D_k
  Sign eps2 = Sign::kPlus;   // D_k
  // J_{k,0}: x1^3 + s1*b*x1^2*x2^k + s2*x2^{3k} + A_{k-1}(x2)*x1*x2^{2k+1}
  // J_{k,i}: x1^3 + s1*x1^2*x2^k + A_k(x2)*x2^{3k+i}
  long long b = 1;
  Sign s1 = Sign::kPlus;
  Sign s2 = Sign::kPlus;
  std::vector<long long> a;  // A_j coefficients a_0, a_1, ...
  QuadSignature sig;

  static GermSpec Q(QuadSignature sig) { return {Family::kQ, 0, 0, Sign::kPlus, Sign::kPlus, Sign::kPlus, 1, Sign::kPlus, Sign::kPlus, {}, sig}; }
  static GermSpec A(int k, Sign s, QuadSignature sig);
  static GermSpec D(int k, Sign e1, Sign e2, QuadSignature sig);
  static GermSpec E6(Sign s, QuadSignature sig);
  static GermSpec E7(QuadSignature sig);
  static GermSpec E8(QuadSignature sig);
  static GermSpec Cube(QuadSignature sig);
  static GermSpec G(QuadSignature sig);
  /// J_{k,i} with the documented defaults (b = 1, a_0 = 1 when required).
  static GermSpec J(int k, int i, QuadSignature sig);

  /// Number of x-block coordinates.
  int x_count() const;
  /// Ambient dimension.
  int dim() const { return x_count() + sig.rank(); }
  bool is_simple() const;

  /// Throws std::invalid_argument when family constraints fail.
  void validate() const;
  GermPolynomial polynomial() const;
  /// Text in the germ expression grammar, e.g. "D(6,+,-) (+) Q(0,1)".
  std::string render() const;

  friend bool operator==(const GermSpec&, const GermSpec&) = default;
};

/// Canonical representative of the linear-equivalence identities:
/// even-k A_k -> sign +; odd-k D_k -> eps1 = +; even-k D_k -> the
/// lexicographically least of (eps1, eps2), (-eps1, -eps2) with + < -.
/// Other families are returned unchanged.
GermSpec canonicalize(const GermSpec& g);

/// true iff both germs canonicalize to the same representative. Throws
/// std::invalid_argument for nonsimple input.
bool analytic_equiv(const GermSpec& g1, const GermSpec& g2);

/// Parses the germ expression grammar; throws GermParseError.
GermSpec parse_germ(const std::string& text);

struct GermParseError : std::invalid_argument {
  enum class Kind { kSyntax, kSemantic };
  GermParseError(Kind kind, std::size_t position, const std::string& what);
  Kind kind;
  std::size_t position;
};

}  // namespace arczeta
