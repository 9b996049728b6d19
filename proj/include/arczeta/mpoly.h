#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace arczeta {

/// A monomial: (variable, exponent) pairs sorted by variable, exponents > 0.
using Monomial = std::vector<std::pair<int, int>>;

/// Sparse multivariate polynomial over the integers, used for the arc
/// coefficient constraints. No simplification beyond collecting like terms.
class MPoly {
 public:
  using Coeff = std::int64_t;

  MPoly() = default;
  /* implicit */ MPoly(Coeff constant);
  static MPoly variable(int var);
  static MPoly term(Coeff coeff, Monomial mono);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of the empty monomial).
  Coeff constant_term() const;
  const std::map<Monomial, Coeff>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(Coeff c) const;
  friend bool operator==(const MPoly&, const MPoly&) = default;

  std::set<int> variables() const;
  bool contains(int var) const;
  int degree_in(int var) const;

  /// Substitutes var := 0.
  MPoly substitute_zero(int var) const;

  /// Splits into sum_k coeff_k * var^k; coeff_k are free of var.
  std::map<int, MPoly> collect(int var) const;

  /// gcd of all coefficients (positive; 0 for the zero polynomial).
  Coeff content() const;
  /// Exact division of every coefficient by c.
  MPoly divided(Coeff c) const;
  /// Largest monomial dividing every term.
  Monomial common_monomial() const;
  /// Divides every term by var^e (requires divisibility).
  MPoly divided_by_power(int var, int e) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, Coeff c);
  std::map<Monomial, Coeff> terms_;
};

Monomial monomial_product(const Monomial& a, const Monomial& b);

}  // namespace arczeta
