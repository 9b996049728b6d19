#include "arczeta/upoly.h"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace arczeta {

namespace checked {
UPoly::Coeff add(UPoly::Coeff a, UPoly::Coeff b) {
  UPoly::Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("UPoly: coefficient overflow in addition");
  return r;
}
UPoly::Coeff mul(UPoly::Coeff a, UPoly::Coeff b) {
  UPoly::Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("UPoly: coefficient overflow in multiplication");
  return r;
}
}  // namespace checked

UPoly::UPoly(Coeff constant) {
  if (constant != 0) coeffs_[0] = constant;
}

UPoly UPoly::monomial(Coeff coeff, int exponent) {
  if (exponent < 0) throw std::invalid_argument("UPoly: negative exponent");
  UPoly p;
  p.add_term(exponent, coeff);
  return p;
}

std::optional<int> UPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

UPoly::Coeff UPoly::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

void UPoly::add_term(int exponent, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second = checked::add(it->second, coeff);
    if (it->second == 0) coeffs_.erase(it);
  }
}

UPoly UPoly::operator-() const {
  UPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = checked::mul(c, -1);
  return r;
}

UPoly& UPoly::operator+=(const UPoly& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, c);
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, checked::mul(c, -1));
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, checked::mul(ca, cb));
  return r;
}

UPoly& UPoly::operator*=(const UPoly& other) { return *this = *this * other; }

UPoly UPoly::shifted(int k) const {
  UPoly r;
  for (const auto& [e, c] : coeffs_) {
    if (e + k < 0) throw std::invalid_argument("UPoly: shift below u^0");
    r.coeffs_[e + k] = c;
  }
  return r;
}

UPoly UPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("UPoly: negative power");
  UPoly r(1);
  for (int i = 0; i < n; ++i) r *= *this;
  return r;
}

UPoly::Coeff UPoly::eval_at(Coeff x) const {
  // Horner over the dense range of exponents.
  if (coeffs_.empty()) return 0;
  Coeff acc = 0;
  for (int e = *degree(); e >= 0; --e) acc = checked::add(checked::mul(acc, x), coeff(e));
  return acc;
}

std::string UPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    auto [e, c] = *it;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    // |c| cannot overflow here: checked arithmetic never produces INT64_MIN
    // from negation, but guard anyway.
    Coeff mag = c < 0 ? checked::mul(c, -1) : c;
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "u";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

namespace {

class TextReader {
 public:
  explicit TextReader(std::string_view s) : s_(s) {}
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool accept(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::optional<UPoly::Coeff> integer() {
    skip_ws();
    std::size_t start = pos_;
    UPoly::Coeff v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = checked::add(checked::mul(v, 10), s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) return std::nullopt;
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("UPoly::parse: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                                std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

UPoly UPoly::parse(std::string_view text) {
  TextReader in(text);
  UPoly result;
  if (in.at_end()) in.fail("empty polynomial");
  bool first = true;
  while (!in.at_end()) {
    Coeff sign = 1;
    if (in.accept('-')) {
      sign = -1;
    } else if (in.accept('+')) {
    } else if (!first) {
      in.fail("expected '+' or '-'");
    }
    first = false;
    auto number = in.integer();
    Coeff c = number.value_or(1);
    int exponent = 0;
    bool has_u = false;
    if (number) {
      if (in.accept('*')) {
        if (!in.accept('u')) in.fail("expected 'u' after '*'");
        has_u = true;
      }
    } else {
      if (!in.accept('u')) in.fail("expected a term");
      has_u = true;
    }
    if (has_u) {
      exponent = 1;
      if (in.accept('^')) {
        auto e = in.integer();
        if (!e || *e > 100000) in.fail("bad exponent");
        exponent = static_cast<int>(*e);
      }
    }
    result.add_term(exponent, checked::mul(sign, c));
  }
  return result;
}

UPoly geom_sum(int step, int terms) {
  if (step < 0 || terms < 0) throw std::invalid_argument("geom_sum: negative argument");
  UPoly r;
  for (int s = 0; s < terms; ++s) r += UPoly::u_pow(s * step);
  return r;
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.to_string(); }

}  // namespace arczeta
