#include "arczeta/quadric_catalog.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arczeta {

Sign sign_of(long long v) {
  if (v == 0) throw std::invalid_argument("sign_of: zero has no sign");
  return v > 0 ? Sign::kPlus : Sign::kMinus;
}

std::ostream& operator<<(std::ostream& os, const QuadSignature& s) {
  return os << "(" << s.p << "," << s.q << ")";
}

namespace {
void check(QuadSignature sig) {
  if (sig.p < 0 || sig.q < 0) throw std::invalid_argument("QuadSignature: negative index");
}
const UPoly kU = UPoly::u_pow(1);
}  // namespace

UPoly beta_Y(QuadSignature sig) {
  check(sig);
  if (sig.rank() == 0) return UPoly(1);
  int hi = std::max(sig.p, sig.q);
  int lo = std::min(sig.p, sig.q);
  return UPoly::u_pow(sig.rank() - 1) - UPoly::u_pow(hi - 1) + UPoly::u_pow(lo);
}

UPoly beta_Y_fiber(QuadSignature sig, Sign eps) {
  check(sig);
  if (eps == Sign::kMinus) return beta_Y_fiber(sig.swapped(), Sign::kPlus);
  if (sig.rank() == 0) return UPoly();
  if (sig.p <= sig.q) return UPoly::u_pow(sig.q - 1) * (UPoly::u_pow(sig.p) - 1);
  return UPoly::u_pow(sig.q) * (UPoly::u_pow(sig.p - 1) + 1);
}

UPoly beta_Y_star(QuadSignature sig) { return beta_Y(sig) - 1; }

UPoly beta_Y_compl(QuadSignature sig) { return UPoly::u_pow(sig.rank()) - beta_Y(sig); }

namespace {

// beta({a*x^m + b*|y|_s^2 = 1}) for even m, a, b in {+1,-1}.
UPoly one_signed_terminal(Sign a, Sign b, int s) {
  if (s == 0) return a == Sign::kPlus ? UPoly(2) : UPoly();
  if (a == Sign::kPlus && b == Sign::kPlus) return UPoly::u_pow(s) + 1;       // sphere
  if (a == Sign::kMinus && b == Sign::kMinus) return UPoly();                 // empty
  if (a == Sign::kPlus) return UPoly::u_pow(s - 1) * (kU - 1);               // x^m - |y|^2 = 1
  return s == 1 ? kU - 1 : UPoly::u_pow(s) + kU;                              // |y|^2 - x^m = 1
}

}  // namespace

UPoly beta_power_fiber(int m, Sign sigma, QuadSignature sig, Sign eps) {
  check(sig);
  if (m < 2) throw std::invalid_argument("beta_power_fiber: m < 2");
  int n = sig.rank();
  if (m % 2 == 1) return UPoly::u_pow(n);
  // Each hyperbolic pair y_i^2 - y_{p+i}^2 = w_i*v_i contributes the stratum
  // w_i != 0 (v_i solved) and passes w_i = 0 (v_i free) to the next step.
  int r = std::min(sig.p, sig.q);
  UPoly peeled;
  for (int i = 1; i <= r; ++i) peeled += UPoly::u_pow(n - i);
  peeled *= (kU - 1);
  int s = std::abs(sig.p - sig.q);
  Sign y_sign = sig.p >= sig.q ? Sign::kPlus : Sign::kMinus;
  // Normalise the right-hand side to +1 by multiplying through by eps.
  return peeled + UPoly::u_pow(r) * one_signed_terminal(sigma * eps, y_sign * eps, s);
}

UPoly beta_power_zero(int m, Sign sigma, QuadSignature sig) {
  check(sig);
  if (m < 2) throw std::invalid_argument("beta_power_zero: m < 2");
  if (m % 2 == 1) return UPoly::u_pow(sig.rank());
  return sigma == Sign::kPlus ? beta_Y({sig.p + 1, sig.q}) : beta_Y({sig.p, sig.q + 1});
}

UPoly beta_power_nonzero(int m, Sign sigma, QuadSignature sig) {
  return UPoly::u_pow(sig.rank() + 1) - beta_power_zero(m, sigma, sig);
}

UPoly beta_D_curve(int k, Sign sigma2, Sign eps) {
  if (k < 4) throw std::invalid_argument("beta_D_curve: k < 4");
  int j = k - 1;
  if (eps == Sign::kMinus) {
    // x1 -> -x1 then negate: (sigma2, -1) ~ (-sigma2 * (-1)^j, +1).
    Sign flipped = (j % 2 == 0) ? -sigma2 : sigma2;
    return beta_D_curve(k, flipped, Sign::kPlus);
  }
  if (j % 2 == 0) {
    // k odd: two U-shaped components for sigma2 = +, two graphs over x1 < 0
    // (never meeting x2 = 0) for sigma2 = -.
    return sigma2 == Sign::kPlus ? 2 * kU : kU - 1;
  }
  // k even: one U-shaped component for sigma2 = +; three components closing
  // into one circle through three points at infinity for sigma2 = -.
  return sigma2 == Sign::kPlus ? kU : kU - 2;
}

int euler_D_curve(int k, Sign sigma2, Sign eps) {
  if (k < 4) throw std::invalid_argument("euler_D_curve: k < 4");
  // x1 != 0 on the curve and x2^2 = h(x1) = (eps - sigma2*x1^{k-1}) / x1.
  // The numerator vanishes only where |x1| = 1, so h keeps its sign on the
  // intervals cut out by -1, 0, 1.
  const int j = k - 1;
  auto h = [&](double x) { return (to_int(eps) - to_int(sigma2) * std::pow(x, j)) / x; };
  int chi = 0;
  for (double probe : {-2.0, -0.5, 0.5, 2.0})
    if (h(probe) > 0) chi -= 2;  // open interval: two arcs, chi_c = -1 each
  for (double cut : {-1.0, 1.0}) {
    if (h(cut) == 0) chi += 1;  // single point with x2 = 0
    if (h(cut) > 0) chi += 2;   // two points x2 = +-sqrt(h)
  }
  return chi;
}

UPoly beta_G_curve(Sign) { return kU - 1; }

}  // namespace arczeta
