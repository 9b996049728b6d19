#include "arczeta/mpoly.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "arczeta/upoly.h"

namespace arczeta {

MPoly::MPoly(Coeff constant) {
  if (constant != 0) terms_[{}] = constant;
}

MPoly MPoly::variable(int var) { return term(1, {{var, 1}}); }

MPoly MPoly::term(Coeff coeff, Monomial mono) {
  MPoly p;
  std::sort(mono.begin(), mono.end());
  p.add_term(mono, coeff);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

MPoly::Coeff MPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? 0 : it->second;
}

void MPoly::add_term(const Monomial& m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = checked::add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, checked::mul(c, -1));
  return *this;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), checked::mul(ca, cb));
  return r;
}

MPoly MPoly::scaled(Coeff c) const {
  MPoly r;
  for (const auto& [m, k] : terms_) r.add_term(m, checked::mul(k, c));
  return r;
}

std::set<int> MPoly::variables() const {
  std::set<int> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) vars.insert(v);
  return vars;
}

bool MPoly::contains(int var) const { return degree_in(var) > 0; }

int MPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m)
      if (v == var) d = std::max(d, e);
  return d;
}

MPoly MPoly::substitute_zero(int var) const {
  MPoly r;
  for (const auto& [m, c] : terms_) {
    bool hit = std::any_of(m.begin(), m.end(), [var](const auto& ve) { return ve.first == var; });
    if (!hit) r.terms_.emplace(m, c);
  }
  return r;
}

std::map<int, MPoly> MPoly::collect(int var) const {
  std::map<int, MPoly> out;
  for (const auto& [m, c] : terms_) {
    int e = 0;
    Monomial rest;
    rest.reserve(m.size());
    for (const auto& ve : m) {
      if (ve.first == var)
        e = ve.second;
      else
        rest.push_back(ve);
    }
    out[e].add_term(rest, c);
  }
  return out;
}

MPoly::Coeff MPoly::content() const {
  Coeff g = 0;
  for (const auto& [m, c] : terms_) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

MPoly MPoly::divided(Coeff c) const {
  if (c == 0) throw std::invalid_argument("MPoly::divided: division by zero");
  MPoly r;
  for (const auto& [m, k] : terms_) {
    if (k % c != 0) throw std::logic_error("MPoly::divided: inexact division");
    r.terms_.emplace(m, k / c);
  }
  return r;
}

Monomial MPoly::common_monomial() const {
  if (terms_.empty()) return {};
  Monomial common = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    Monomial next;
    std::size_t i = 0, j = 0;
    while (i < common.size() && j < m.size()) {
      if (common[i].first < m[j].first) {
        ++i;
      } else if (m[j].first < common[i].first) {
        ++j;
      } else {
        next.emplace_back(common[i].first, std::min(common[i].second, m[j].second));
        ++i;
        ++j;
      }
    }
    common = std::move(next);
    if (common.empty()) break;
  }
  return common;
}

MPoly MPoly::divided_by_power(int var, int e) const {
  MPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial next;
    bool found = false;
    for (const auto& ve : m) {
      if (ve.first == var) {
        if (ve.second < e) throw std::logic_error("MPoly::divided_by_power: not divisible");
        found = true;
        if (ve.second > e) next.emplace_back(var, ve.second - e);
      } else {
        next.push_back(ve);
      }
    }
    if (!found && e > 0) throw std::logic_error("MPoly::divided_by_power: not divisible");
    r.terms_.emplace(std::move(next), c);
  }
  return r;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Coeff mag = c < 0 ? -c : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (m.empty() || mag != 1) {
      os << mag;
      if (!m.empty()) os << "*";
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) os << "*";
      os << "v" << m[i].first;
      if (m[i].second != 1) os << "^" << m[i].second;
    }
  }
  return os.str();
}

}  // namespace arczeta
