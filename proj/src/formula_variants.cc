// Printed-versus-derived readings of formulas whose statement and
// derivation disagree. The verify suite evaluates both on each grid and
// compares with the stratification engine.

#include <map>
#include <stdexcept>

#include "arczeta/arc_formulas.h"

namespace arczeta {
namespace {

const UPoly kU = UPoly::u_pow(1);
UPoly up(int e) { return UPoly::u_pow(e); }

const std::vector<QuadSignature> kSigs = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}};
const std::vector<Sign> kSigns = {Sign::kPlus, Sign::kMinus};

Sign eps_of(const FormulaCell& c) { return c.target.eps; }

FormulaVariant quadric_even_terminal() {
  FormulaVariant v;
  v.id = "quadric-even-terminal";
  v.description = "Even-order signed arcs on a nondegenerate quadric (pq != 0, (p,q) != (1,1)): terminal stratum";
  v.stated_text = "u^{(n+1)(p+q)-2} beta(Y*) [n-1]_{u^{p+q-2}} + u^{n(p+q)+2n} beta(Y^eps)";
  v.proof_text = "u^{(n+1)(p+q)-2} beta(Y*) [n-1]_{u^{p+q-2}} + u^{n(p+q)} beta(Y^eps)";
  v.stated = [](const FormulaCell& c) {
    const int n = c.n / 2, r = c.germ.sig.rank();
    return up((n + 1) * r - 2) * beta_Y_star(c.germ.sig) * geom_sum(r - 2, n - 1) +
           up(n * r + 2 * n) * beta_Y_fiber(c.germ.sig, eps_of(c));
  };
  v.proof_derived = [](const FormulaCell& c) { return arc_Q_signed(c.n, eps_of(c), c.germ.sig); };
  for (QuadSignature sig : std::vector<QuadSignature>{{2, 1}, {1, 2}, {2, 2}, {3, 1}})
    for (int l : {4, 6})
      for (Sign e : kSigns) v.grid.push_back({GermSpec::Q(sig), l, Target::signed_(e)});
  return v;
}

FormulaVariant e_order3_first_term() {
  FormulaVariant v;
  v.id = "e-order3-first-term";
  v.description = "Order-3 signed arcs of x1^3 + x2^4, x1^3 + x1 x2^3, x1^3 + x2^5 (plus Q): first stratum exponent";
  v.stated_text = "u^{2(p+q)+7} beta(Y*) + u^{2(p+q)+5}";
  v.proof_text = "u^{2(p+q)+5} beta(Y*) + u^{2(p+q)+5}";
  v.stated = [](const FormulaCell& c) {
    const int r = c.germ.sig.rank();
    return up(2 * r + 7) * beta_Y_star(c.germ.sig) + up(2 * r + 5);
  };
  v.proof_derived = [](const FormulaCell& c) { return *formula_value(c.germ, c.n, c.target); };
  for (QuadSignature sig : kSigs)
    for (const GermSpec& g : {GermSpec::E6(Sign::kPlus, sig), GermSpec::E6(Sign::kMinus, sig), GermSpec::E7(sig),
                              GermSpec::E8(sig)})
      for (Sign e : kSigns) v.grid.push_back({g, 3, Target::signed_(e)});
  return v;
}

FormulaVariant a_odd_terminal_sign() {
  FormulaVariant v;
  v.id = "a-odd-terminal-sign";
  v.description = "Order k+1 signed arcs of s*x^{k+1} + Q for odd k: sign of the quadric term";
  v.stated_text = "u^{2n} beta(A_{2n}^{+1}(Q)) + u^{n(p+q)+2n-1}(beta({s x^{2n} + Q = eps}) - u beta(Y^eps))";
  v.proof_text = "u^{2n} beta(A_{2n}^{eps}(Q)) + u^{n(p+q)+2n-1}(beta({s x^{2n} + Q = eps}) - u beta(Y^eps))";
  v.stated = [](const FormulaCell& c) {
    const int n = c.n / 2, r = c.germ.sig.rank();
    const Sign e = eps_of(c);
    return up(2 * n) * arc_Q_signed(2 * n, Sign::kPlus, c.germ.sig) +
           up(n * r + 2 * n - 1) *
               (beta_power_fiber(2 * n, c.germ.sign, c.germ.sig, e) - kU * beta_Y_fiber(c.germ.sig, e));
  };
  v.proof_derived = [](const FormulaCell& c) { return *formula_value(c.germ, c.n, c.target); };
  for (QuadSignature sig : std::vector<QuadSignature>{{1, 0}, {0, 2}, {2, 0}, {2, 1}})
    for (int k : {3, 5})
      for (Sign s : kSigns)
        for (Sign e : kSigns) v.grid.push_back({GermSpec::A(k, s, sig), k + 1, Target::signed_(e)});
  return v;
}

// Closed forms for x1 x2^2 + Q as printed.
UPoly g_stated(int l, Sign eps, QuadSignature sig) {
  const int r = sig.rank();
  const UPoly star = beta_Y_star(sig);
  if (r == 0) {
    if (l % 2 == 1) {
      const int n = (l - 1) / 2;
      return up(2 * n + 2) * (up(n) - 1);
    }
    const int n = l / 2;
    return up(2 * n + 1) * (up(n - 1) - 1);
  }
  if (r == 1) {
    if (l % 2 == 1) {
      const int n = (l - 1) / 2;
      return n * (kU - 1) * up(4 * n + 2);
    }
    const int n = l / 2;
    const bool extra = (eps == Sign::kPlus && sig.p == 1) || (eps == Sign::kMinus && sig.p == 0);
    return (n - 1) * (kU - 1) * up(4 * n) + (extra ? 2 * up(4 * n + 1) : UPoly());
  }
  if (l % 2 == 1) {
    const int n = (l - 1) / 2;
    return up((n + 1) * r) * (geom_sum(r - 1, n) * up(5) * star + geom_sum(r - 1, n - 1) * (kU - 1) * up(r + 3) +
                              up(3 * n + 1) * (kU - 1));
  }
  const int n = l / 2;
  return geom_sum(r - 1, n - 1) * up((n + 2) * r + 3 * n) * (star + (kU - 1)) +
         up(n * r + 3 * n + 1) * beta_Y_fiber(sig, eps);
}

FormulaVariant g_closed_forms() {
  FormulaVariant v;
  v.id = "g-closed-forms";
  v.description = "Signed arcs of x1 x2^2 + Q: printed closed forms against the stratum recursion";
  v.stated_text = "printed closed forms for (p,q) = (0,0), p+q = 1 and the general odd/even displays";
  v.proof_text = "A_l = u^{(l-1)(p+q)+l+2} beta(Y*) + (u-1) u^{(l-1)(p+q)+l+1} + u^{p+q+3} A_{l-2}, A_1 = 0, "
                 "A_2 = u^{p+q+4} beta(Y^eps)";
  v.stated = [](const FormulaCell& c) { return g_stated(c.n, eps_of(c), c.germ.sig); };
  v.proof_derived = [](const FormulaCell& c) { return arc_G(c.n, c.target, c.germ.sig); };
  for (QuadSignature sig : kSigs)
    for (int l = 3; l <= 7; ++l)
      for (Sign e : kSigns) v.grid.push_back({GermSpec::G(sig), l, Target::signed_(e)});
  return v;
}

FormulaVariant g_recursion_first_term() {
  FormulaVariant v;
  v.id = "g-recursion-first-term";
  v.description = "Stratum recursion for x1 x2^2 + Q: exponent of the beta(Y*) stratum";
  v.stated_text = "u^{(l-1)(p+q-1)+2l} beta(Y*) + ...";
  v.proof_text = "u^{(l-1)(p+q-1)+2l+1} beta(Y*) + ...";
  v.stated = [](const FormulaCell& c) {
    const QuadSignature sig = c.germ.sig;
    const int r = sig.rank();
    UPoly a = c.n % 2 == 0 ? up(r + 4) * beta_Y_fiber(sig, eps_of(c)) : UPoly();
    for (int j = c.n % 2 == 0 ? 4 : 3; j <= c.n; j += 2) {
      const int base = (j - 1) * r + j + 1;
      a = up(base) * beta_Y_star(sig) + up(base) * (kU - 1) + up(r + 3) * a;
    }
    return a;
  };
  v.proof_derived = [](const FormulaCell& c) { return arc_G(c.n, c.target, c.germ.sig); };
  for (QuadSignature sig : std::vector<QuadSignature>{{1, 1}, {2, 1}, {2, 2}})
    for (int l = 3; l <= 6; ++l) v.grid.push_back({GermSpec::G(sig), l, Target::plus()});
  return v;
}

FormulaVariant d_even_unsuspended() {
  FormulaVariant v;
  v.id = "d-even-unsuspended";
  v.description = "Order k-1 signed arcs of eps1 x1 x2^2 + eps2 x1^{k-1}, k = 2n even, no quadratic part";
  v.stated_text = "beta(A_{k-1}(G)) + u^{3n-1}";
  v.proof_text = "beta(A_{k-1}(G)) + u^{3n-2}(beta({g(x1,x2) = eps}) - (u-1))";
  v.stated = [](const FormulaCell& c) {
    const int n = c.germ.k / 2;
    return arc_G(c.n, c.target, c.germ.sig) + up(3 * n - 1);
  };
  v.proof_derived = [](const FormulaCell& c) { return *formula_value(c.germ, c.n, c.target); };
  for (int k : {4, 6})
    for (Sign e1 : kSigns)
      for (Sign e2 : kSigns)
        for (Sign e : kSigns) v.grid.push_back({GermSpec::D(k, e1, e2, {0, 0}), k - 1, Target::signed_(e)});
  return v;
}

FormulaVariant d_curve_even_minus() {
  FormulaVariant v;
  v.id = "d-curve-even-minus";
  v.description = "Plane curve x1 x2^2 - x1^{k-1} = 1 for even k, entering order k-1 of D_k";
  v.stated_text = "beta({x1 x2^2 - x1^{k-1} = 1}) = 2u";
  v.proof_text = "beta({x1 x2^2 - x1^{k-1} = 1}) = u - 2 (Euler characteristic -3)";
  v.stated = [](const FormulaCell& c) {
    const int n = (c.germ.k - 2) / 2, r = c.germ.sig.rank();
    const Sign s2 = c.germ.eps1 * c.germ.eps2;
    // Even k: x1 -> -x1 reduces eps = -1 to (s2, +1).
    UPoly curve = s2 == Sign::kPlus ? kU : 2 * kU;
    return arc_G(c.n, c.target, c.germ.sig) + up((n + 1) * r + 3 * n + 1) * (curve - (kU - 1));
  };
  v.proof_derived = [](const FormulaCell& c) { return *formula_value(c.germ, c.n, c.target); };
  for (QuadSignature sig : std::vector<QuadSignature>{{0, 0}, {1, 1}, {2, 1}})
    for (int k : {4, 6})
      for (Sign e : kSigns) v.grid.push_back({GermSpec::D(k, Sign::kPlus, Sign::kMinus, sig), k - 1, Target::signed_(e)});
  return v;
}

FormulaVariant d4_order3_minus_cube() {
  FormulaVariant v;
  v.id = "d4-order3-minus-cube";
  v.description = "Order-3 signed arcs of x1 x2^2 - eps x1^3 + Q at level eps";
  v.stated_text = "u^{2(p+q)+5} beta(Y*) + 2u^{2(p+q)+5}";
  v.proof_text = "beta(A_3^eps(G)) + u^{2(p+q)+4}(beta({x1 x2^2 - eps x1^3 = eps}) - (u-1))";
  v.stated = [](const FormulaCell& c) {
    const int r = c.germ.sig.rank();
    return up(2 * r + 5) * beta_Y_star(c.germ.sig) + 2 * up(2 * r + 5);
  };
  v.proof_derived = [](const FormulaCell& c) { return *formula_value(c.germ, c.n, c.target); };
  for (QuadSignature sig : kSigs)
    for (Sign e : kSigns) v.grid.push_back({GermSpec::D(4, Sign::kPlus, -e, sig), 3, Target::signed_(e)});
  return v;
}

using Factory = FormulaVariant (*)();

const std::map<std::string, Factory>& registry() {
  static const std::map<std::string, Factory> r = {
      {"quadric-even-terminal", quadric_even_terminal}, {"e-order3-first-term", e_order3_first_term},
      {"a-odd-terminal-sign", a_odd_terminal_sign},     {"g-closed-forms", g_closed_forms},
      {"g-recursion-first-term", g_recursion_first_term}, {"d-even-unsuspended", d_even_unsuspended},
      {"d-curve-even-minus", d_curve_even_minus},       {"d4-order3-minus-cube", d4_order3_minus_cube},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& formula_variant_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, _] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

FormulaVariant formula_variants(const std::string& id) {
  auto it = registry().find(id);
  if (it == registry().end()) throw std::invalid_argument("unknown formula id: " + id);
  return it->second();
}

}  // namespace arczeta
