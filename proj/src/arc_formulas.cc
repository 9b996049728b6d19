#include "arczeta/arc_formulas.h"

#include <stdexcept>

namespace arczeta {
namespace {

const UPoly kU = UPoly::u_pow(1);

UPoly up(int e) { return UPoly::u_pow(e); }

// Terms of the peeling sum for the quadric: sum_{s=1}^{m} u^{(l-s)(r-1)+s}.
// Multiplied by beta(Y*) which vanishes for r <= 1, so exponents stay >= 0
// whenever the product is nonzero.
UPoly peel(int l, QuadSignature sig) {
  const UPoly star = beta_Y_star(sig);
  if (star.is_zero()) return {};
  const int r = sig.rank();
  const int m = l % 2 == 1 ? (l - 1) / 2 : l / 2 - 1;
  UPoly sum;
  for (int s = 1; s <= m; ++s) sum += up((l - s) * (r - 1) + s);
  return star * sum;
}

UPoly fiber(QuadSignature sig, Target t) {
  return t.is_naive() ? beta_Y_compl(sig) : beta_Y_fiber(sig, t.eps);
}

// The naive space gains a factor (u - 1) on every stratum where the leading
// coefficient ranges over a fibre of a weighted-homogeneous map.
UPoly scale(Target t) { return t.is_naive() ? kU - 1 : UPoly(1); }

void require_order(int l, int lo, const char* what) {
  if (l < lo) throw std::invalid_argument(std::string(what) + ": order too small");
}

}  // namespace

UPoly arc_Q_signed(int l, Sign eps, QuadSignature sig) {
  require_order(l, 2, "arc_Q_signed");
  UPoly v = peel(l, sig);
  if (l % 2 == 0) v += up((l / 2) * sig.rank()) * beta_Y_fiber(sig, eps);
  return v;
}

UPoly arc_Q_recursive(int l, Sign eps, QuadSignature sig) {
  require_order(l, 2, "arc_Q_recursive");
  const int r = sig.rank();
  const UPoly star = beta_Y_star(sig);
  UPoly v = l % 2 == 0 ? up(r) * beta_Y_fiber(sig, eps) : UPoly();
  for (int j = l % 2 == 0 ? 4 : 3; j <= l; j += 2) {
    UPoly head = star.is_zero() ? UPoly() : up((j - 1) * (r - 1) + 1) * star;
    v = head + up(r) * v;
  }
  return v;
}

UPoly arc_Q_naive(int l, QuadSignature sig) {
  require_order(l, 2, "arc_Q_naive");
  UPoly v = (kU - 1) * peel(l, sig);
  if (l % 2 == 0) v += up((l / 2) * sig.rank()) * beta_Y_compl(sig);
  return v;
}

UPoly arc_Q(int l, Target t, QuadSignature sig) {
  return t.is_naive() ? arc_Q_naive(l, sig) : arc_Q_signed(l, t.eps, sig);
}

UPoly arc_order2(int d, QuadSignature sig, Target t) {
  if (d < sig.rank()) throw std::invalid_argument("arc_order2: d < p + q");
  return up(2 * d - sig.rank()) * fiber(sig, t);
}

UPoly arc_Ak(int k, Sign s, int l, Target t, QuadSignature sig) {
  if (k < 2) throw std::invalid_argument("arc_Ak: k < 2");
  if (l < 2 || l > k + 1) throw UseOracle("arc_Ak: order outside 2..k+1");
  const int r = sig.rank();
  if (l == 2) return arc_order2(r + 1, sig, t);
  if (l <= k) return up(l) * arc_Q(l, t, sig);
  if (k % 2 == 0) {
    // x^{k+1} takes every value once: a single extra stratum.
    const int n = k / 2;
    return up(2 * n + 1) * arc_Q(2 * n + 1, t, sig) + scale(t) * up((n + 1) * r + 2 * n);
  }
  // k = 2n - 1: the terminal quadric stratum is replaced by the fibre of
  // s*x^{2n} + Q.
  const int n = (k + 1) / 2;
  UPoly power = t.is_naive() ? beta_power_nonzero(2 * n, s, sig) : beta_power_fiber(2 * n, s, sig, t.eps);
  return up(2 * n) * arc_Q(2 * n, t, sig) + up(n * r + 2 * n - 1) * (power - kU * fiber(sig, t));
}

UPoly arc_G(int l, Target t, QuadSignature sig) {
  require_order(l, 1, "arc_G");
  const int r = sig.rank();
  const UPoly star = scale(t) * beta_Y_star(sig);
  const UPoly curve = scale(t) * beta_G_curve(Sign::kPlus);
  UPoly v = l % 2 == 0 ? up(r + 4) * fiber(sig, t) : UPoly();
  for (int j = l % 2 == 0 ? 4 : 3; j <= l; j += 2) {
    // j = 2n + 1 or 2n: first coefficient vanishing pattern a_1 = .. = 0.
    const int base = (j - 1) * r + j + 1;
    v = up(base + 1) * star + up(base) * curve + up(r + 3) * v;
  }
  return v;
}

UPoly arc_Dk(int k, Sign e1, Sign e2, int l, Target t, QuadSignature sig) {
  if (k < 4) throw std::invalid_argument("arc_Dk: k < 4");
  const int r = sig.rank();
  if (l == 2) return arc_order2(r + 2, sig, t);
  if (l >= 3 && l < k - 1) return arc_G(l, t, sig);
  if (l == k - 1) {
    if (k % 2 == 0) {
      const int n = (k - 2) / 2;
      const Sign s2 = e1 * e2;
      UPoly curve;
      if (t.is_naive()) {
        UPoly zero = s2 == Sign::kPlus ? kU : 3 * kU - 2;
        curve = kU * kU - zero - (kU - 1) * (kU - 1);
      } else {
        curve = beta_D_curve(k, s2, t.eps) - (kU - 1);
      }
      return arc_G(l, t, sig) + up((n + 1) * r + 3 * n + 1) * curve;
    }
    const int n = (k - 1) / 2;
    UPoly power = t.is_naive() ? beta_power_nonzero(2 * n, e2, sig) : beta_power_fiber(2 * n, e2, sig, t.eps);
    return arc_G(l, t, sig) + up(n * r + 3 * n) * (power - kU * fiber(sig, t));
  }
  if (k == 4 && l == 4) return arc_D4_order4(e1 * e2, t, sig);
  throw UseOracle("arc_Dk: order outside the covered range");
}

UPoly arc_D4_order4(Sign cls, Target t, QuadSignature sig) {
  const int r = sig.rank();
  const int alpha = cls == Sign::kPlus ? 1 : 3;
  const UPoly s = scale(t);
  return s * up(3 * r + 6) * beta_Y_star(sig) + alpha * s * (kU - 1) * up(3 * r + 5) + up(2 * r + 6) * fiber(sig, t);
}

UPoly arc_E(EKind which, int l, Target t, QuadSignature sig) {
  const int r = sig.rank();
  const UPoly star = beta_Y_star(sig);
  const bool e78 = which == EKind::kE7 || which == EKind::kE8;
  if (l == 3 && !t.is_naive()) return up(2 * r + 5) * star + up(2 * r + 5);
  if (l == 4 && t.is_naive()) {
    UPoly head = (kU - 1) * up(3 * r + 6) * star;
    if (which == EKind::kE6Plus) return head + up(2 * r + 6) * beta_Y_compl({sig.p + 1, sig.q});
    if (which == EKind::kE6Minus) return head + up(2 * r + 6) * beta_Y_compl({sig.p, sig.q + 1});
    return head + up(2 * r + 7) * beta_Y_compl(sig);
  }
  if (l == 4 && e78) return up(3 * r + 6) * star + up(2 * r + 7) * beta_Y_fiber(sig, t.eps);
  if (l == 5 && e78 && !t.is_naive()) {
    UPoly head = star * (up(4 * r + 7) + up(3 * r + 8));
    return head + (which == EKind::kE7 ? (kU - 1) * up(3 * r + 7) : up(3 * r + 8));
  }
  throw UseOracle("arc_E: cell outside the covered table");
}

UPoly arc_cube(int l, Target t, QuadSignature sig) {
  const int r = sig.rank();
  const UPoly star = beta_Y_star(sig);
  const UPoly s = scale(t);
  switch (l) {
    case 3:
      return s * (up(2 * r + 5) * star + up(2 * r + 5));
    case 4:
      return s * up(3 * r + 6) * star + up(2 * r + 7) * fiber(sig, t);
    case 5:
      return s * star * (up(4 * r + 7) + up(3 * r + 8));
    default:
      throw UseOracle("arc_cube: order outside 3..5");
  }
}

std::optional<UPoly> formula_value(const GermSpec& g, int n, Target t) {
  g.validate();
  if (n < 1) throw std::invalid_argument("formula_value: n < 1");
  if (n == 1) return UPoly();
  if (n == 2) return arc_order2(g.dim(), g.sig, t);
  try {
    switch (g.family) {
      case Family::kQ:
        return arc_Q(n, t, g.sig);
      case Family::kA:
        return arc_Ak(g.k, g.sign, n, t, g.sig);
      case Family::kG:
        return arc_G(n, t, g.sig);
      case Family::kD:
        return arc_Dk(g.k, g.eps1, g.eps2, n, t, g.sig);
      case Family::kE6:
        return arc_E(g.sign == Sign::kPlus ? EKind::kE6Plus : EKind::kE6Minus, n, t, g.sig);
      case Family::kE7:
        return arc_E(EKind::kE7, n, t, g.sig);
      case Family::kE8:
        return arc_E(EKind::kE8, n, t, g.sig);
      case Family::kCube:
        return arc_cube(n, t, g.sig);
      case Family::kJ:
        return std::nullopt;
    }
  } catch (const UseOracle&) {
  }
  return std::nullopt;
}

}  // namespace arczeta
