#include "arczeta/germ.h"

#include <sstream>
#include <stdexcept>

namespace arczeta {

GermSpec GermSpec::A(int k, Sign s, QuadSignature sig) {
  GermSpec g = Q(sig);
  g.family = Family::kA;
  g.k = k;
  g.sign = s;
  return g;
}

GermSpec GermSpec::D(int k, Sign e1, Sign e2, QuadSignature sig) {
  GermSpec g = Q(sig);
  g.family = Family::kD;
  g.k = k;
  g.eps1 = e1;
  g.eps2 = e2;
  return g;
}

GermSpec GermSpec::E6(Sign s, QuadSignature sig) {
  GermSpec g = Q(sig);
  g.family = Family::kE6;
  g.sign = s;
  return g;
}

GermSpec GermSpec::E7(QuadSignature sig) {
  GermSpec g = Q(sig);
  g.family = Family::kE7;
  return g;
}

GermSpec GermSpec::E8(QuadSignature sig) {
  GermSpec g = Q(sig);
  g.family = Family::kE8;
  return g;
}

GermSpec GermSpec::Cube(QuadSignature sig) {
  GermSpec g = Q(sig);
  g.family = Family::kCube;
  return g;
}

GermSpec GermSpec::G(QuadSignature sig) {
  GermSpec g = Q(sig);
  g.family = Family::kG;
  return g;
}

GermSpec GermSpec::J(int k, int i, QuadSignature sig) {
  GermSpec g = Q(sig);
  g.family = Family::kJ;
  g.k = k;
  g.i = i;
  // A_{k-1} has k-2 coefficients for J_{k,0}; A_k has k-1 for J_{k,i}.
  int count = i == 0 ? k - 2 : k - 1;
  g.a.assign(std::max(count, 0), 0);
  if (i > 0) g.a[0] = 1;
  return g;
}

int GermSpec::x_count() const {
  switch (family) {
    case Family::kQ:
      return 0;
    case Family::kA:
      return 1;
    default:
      return 2;
  }
}

bool GermSpec::is_simple() const {
  switch (family) {
    case Family::kA:
    case Family::kD:
    case Family::kE6:
    case Family::kE7:
    case Family::kE8:
      return true;
    default:
      return false;
  }
}

void GermSpec::validate() const {
  if (sig.p < 0 || sig.q < 0) throw std::invalid_argument("negative quadratic index");
  switch (family) {
    case Family::kA:
      if (k < 2) throw std::invalid_argument("A_k requires k >= 2");
      break;
    case Family::kD:
      if (k < 4) throw std::invalid_argument("D_k requires k >= 4");
      break;
    case Family::kJ: {
      if (k < 2) throw std::invalid_argument("J_{k,i} requires k > 1");
      if (i < 0) throw std::invalid_argument("J_{k,i} requires i >= 0");
      std::size_t expected = i == 0 ? static_cast<std::size_t>(k - 2) : static_cast<std::size_t>(k - 1);
      if (a.size() != expected)
        throw std::invalid_argument("J_{k,i}: expected " + std::to_string(expected) + " coefficients a_j");
      if (i == 0 && 4 * b * b * b + 27 == 0) throw std::invalid_argument("J_{k,0} requires 4b^3+27 != 0");
      if (i > 0 && a.front() == 0) throw std::invalid_argument("J_{k,i} requires a_0 != 0");
      break;
    }
    default:
      break;
  }
}

GermPolynomial GermSpec::polynomial() const {
  validate();
  GermPolynomial f;
  f.dim = dim();
  f.x_count = x_count();
  auto add = [&](long long c, std::vector<std::pair<int, int>> powers) {
    if (c == 0) return;
    GermPolynomial::Term t{c, std::vector<int>(f.dim, 0)};
    for (auto [j, e] : powers) t.exponents[j] += e;
    f.terms.push_back(std::move(t));
  };
  const int X1 = 0, X2 = 1;
  switch (family) {
    case Family::kQ:
      break;
    case Family::kA:
      add(to_int(sign), {{X1, k + 1}});
      break;
    case Family::kD:
      add(to_int(eps1), {{X1, 1}, {X2, 2}});
      add(to_int(eps2), {{X1, k - 1}});
      break;
    case Family::kE6:
      add(1, {{X1, 3}});
      add(to_int(sign), {{X2, 4}});
      break;
    case Family::kE7:
      add(1, {{X1, 3}});
      add(1, {{X1, 1}, {X2, 3}});
      break;
    case Family::kE8:
      add(1, {{X1, 3}});
      add(1, {{X2, 5}});
      break;
    case Family::kCube:
      add(1, {{X1, 3}});
      break;
    case Family::kG:
      add(1, {{X1, 1}, {X2, 2}});
      break;
    case Family::kJ:
      add(1, {{X1, 3}});
      if (i == 0) {
        add(to_int(s1) * b, {{X1, 2}, {X2, k}});
        add(to_int(s2), {{X2, 3 * k}});
        for (std::size_t j = 0; j < a.size(); ++j) add(a[j], {{X1, 1}, {X2, 2 * k + 1 + static_cast<int>(j)}});
      } else {
        add(to_int(s1), {{X1, 2}, {X2, k}});
        for (std::size_t j = 0; j < a.size(); ++j) add(a[j], {{X2, 3 * k + i + static_cast<int>(j)}});
      }
      break;
  }
  const int off = f.x_count;
  for (int j = 0; j < sig.p; ++j) add(1, {{off + j, 2}});
  for (int j = 0; j < sig.q; ++j) add(-1, {{off + sig.p + j, 2}});
  return f;
}

std::string GermSpec::render() const {
  std::ostringstream os;
  switch (family) {
    case Family::kQ:
      return "Q(" + std::to_string(sig.p) + "," + std::to_string(sig.q) + ")";
    case Family::kA:
      // The sign of an even A_k is optional in the grammar; + is implied.
      if (k % 2 == 0 && sign == Sign::kPlus)
        os << "A(" << k << ")";
      else
        os << "A(" << k << "," << sign_char(sign) << ")";
      break;
    case Family::kD:
      os << "D(" << k << "," << sign_char(eps1) << "," << sign_char(eps2) << ")";
      break;
    case Family::kE6:
      os << "E6(" << sign_char(sign) << ")";
      break;
    case Family::kE7:
      os << "E7";
      break;
    case Family::kE8:
      os << "E8";
      break;
    case Family::kCube:
      os << "CUBE";
      break;
    case Family::kG:
      os << "G";
      break;
    case Family::kJ: {
      os << "J(" << k << "," << i << "; ";
      if (i == 0) os << "b=" << b << ", ";
      os << "s1=" << sign_char(s1) << ", ";
      if (i == 0) os << "s2=" << sign_char(s2) << ", ";
      os << "a=[";
      for (std::size_t j = 0; j < a.size(); ++j) os << (j ? "," : "") << a[j];
      os << "])";
      break;
    }
  }
  os << " (+) Q(" << sig.p << "," << sig.q << ")";
  return os.str();
}

GermSpec canonicalize(const GermSpec& g) {
  GermSpec c = g;
  switch (g.family) {
    case Family::kA:
      if (g.k % 2 == 0) c.sign = Sign::kPlus;
      break;
    case Family::kD:
      if (g.k % 2 == 1) {
        c.eps1 = Sign::kPlus;
      } else if (g.eps1 == Sign::kMinus) {
        c.eps1 = -g.eps1;
        c.eps2 = -g.eps2;
      }
      break;
    default:
      break;
  }
  return c;
}

bool analytic_equiv(const GermSpec& g1, const GermSpec& g2) {
  if (!g1.is_simple() || !g2.is_simple())
    throw std::invalid_argument("analytic_equiv: classification is only available for simple germs");
  return canonicalize(g1) == canonicalize(g2);
}

}  // namespace arczeta
