#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace arczeta {

/// Integer polynomial in the formal variable u.
///
/// Stored sparsely as exponent -> coefficient with no zero coefficients, so
/// the zero polynomial has an empty map and equality is structural. All
/// arithmetic is checked: an int64 overflow throws std::overflow_error.
class UPoly {
 public:
  using Coeff = std::int64_t;

  UPoly() = default;
  /* implicit */ UPoly(Coeff constant);

  static UPoly monomial(Coeff coeff, int exponent);
  /// u^k.
  static UPoly u_pow(int exponent) { return monomial(1, exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Largest stored exponent; std::nullopt for the zero polynomial.
  std::optional<int> degree() const;
  Coeff coeff(int exponent) const;
  const std::map<int, Coeff>& coeffs() const { return coeffs_; }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& other);
  UPoly& operator-=(const UPoly& other);
  UPoly& operator*=(const UPoly& other);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  /// Multiplies by u^k.
  UPoly shifted(int k) const;
  UPoly pow(int n) const;

  /// Integer evaluation; eval_at(-1) is the compactly supported Euler
  /// characteristic of the underlying set.
  Coeff eval_at(Coeff x) const;

  /// Canonical text: descending exponents, explicit signs, "2*u^4 - 2*u^3".
  std::string to_string() const;
  /// Inverse of to_string. Also accepts unreduced input such as "u + u".
  static UPoly parse(std::string_view text);

 private:
  void add_term(int exponent, Coeff coeff);

  std::map<int, Coeff> coeffs_;
};

/// Sum_{s=0}^{terms-1} u^{s*step}. Division-free realisation of the
/// quotients (u^{m k} - 1) / (u^k - 1); geom_sum(0, m) is the constant m.
UPoly geom_sum(int step, int terms);

std::ostream& operator<<(std::ostream& os, const UPoly& p);

namespace checked {
UPoly::Coeff add(UPoly::Coeff a, UPoly::Coeff b);
UPoly::Coeff mul(UPoly::Coeff a, UPoly::Coeff b);
}  // namespace checked

}  // namespace arczeta
