#pragma once

#include <ostream>

#include "arczeta/upoly.h"

namespace arczeta {

/// A sign in {+1, -1}.
enum class Sign : int { kPlus = 1, kMinus = -1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign operator-(Sign s) { return s == Sign::kPlus ? Sign::kMinus : Sign::kPlus; }
inline Sign operator*(Sign a, Sign b) { return a == b ? Sign::kPlus : Sign::kMinus; }
inline char sign_char(Sign s) { return s == Sign::kPlus ? '+' : '-'; }
Sign sign_of(long long v);

/// Index (p, q) of Q_{p,q}(y) = y_1^2 + ... + y_p^2 - y_{p+1}^2 - ... - y_{p+q}^2.
struct QuadSignature {
  int p = 0;
  int q = 0;

  int rank() const { return p + q; }
  QuadSignature swapped() const { return {q, p}; }
  friend bool operator==(const QuadSignature&, const QuadSignature&) = default;
  friend auto operator<=>(const QuadSignature&, const QuadSignature&) = default;
};

std::ostream& operator<<(std::ostream& os, const QuadSignature& s);

// Virtual Poincare polynomials of the terminal sets. For the rank-zero form
// the zero set in R^0 is a point and every other set below is empty.

/// beta({Q_{p,q} = 0}).
UPoly beta_Y(QuadSignature sig);
/// beta({Q_{p,q} = eps}).
UPoly beta_Y_fiber(QuadSignature sig, Sign eps);
/// beta({Q_{p,q} = 0} minus the origin).
UPoly beta_Y_star(QuadSignature sig);
/// beta({Q_{p,q} != 0}).
UPoly beta_Y_compl(QuadSignature sig);

/// beta({sigma*x^m + Q_{p,q}(y) = eps}), m >= 2.
///
/// Odd m gives the graph u^{p+q}. Even m peels min(p,q) hyperbolic pairs
/// and ends on a one-signed terminal. The terminals coincide with the
/// quadric values of the rank p+q+1 form with the same signs.
UPoly beta_power_fiber(int m, Sign sigma, QuadSignature sig, Sign eps);

/// beta({sigma*x^m + Q_{p,q}(y) = 0}), m >= 2.
UPoly beta_power_zero(int m, Sign sigma, QuadSignature sig);

/// beta({sigma*x^m + Q_{p,q}(y) != 0}) in R^{p+q+1}.
UPoly beta_power_nonzero(int m, Sign sigma, QuadSignature sig);

/// beta of the plane curve {x1*x2^2 + sigma2*x1^{k-1} = eps}, k >= 4.
///
/// Values follow from compactifying and normalising the curve; every sign
/// pattern reduces to (sigma2, +1) by x1 -> -x1. For even k and sigma2 = -1
/// the affine curve has three non-compact components (Euler characteristic
/// -3), giving u - 2.
UPoly beta_D_curve(int k, Sign sigma2, Sign eps);

/// Compactly supported Euler characteristic of the same curve, computed
/// independently by fibring over x1: each open x1-interval where x2^2 has a
/// positive solution contributes two arcs, each double root a point.
int euler_D_curve(int k, Sign sigma2, Sign eps);

/// beta({x1*x2^2 = eps}) = u - 1 (x2 != 0, x1 determined).
UPoly beta_G_curve(Sign eps);

}  // namespace arczeta
