#pragma once

#include <string>

#include "arczeta/quadric_catalog.h"

namespace arczeta {

/// Which arc space is measured at order n: the naive A_n(f) (order exactly
/// n) or the signed A_n^{eps}(f) (leading coefficient exactly eps).
struct Target {
  enum class Kind { kSigned, kNaive };

  Kind kind = Kind::kNaive;
  Sign eps = Sign::kPlus;  // meaningful only for kSigned

  static Target naive() { return {Kind::kNaive, Sign::kPlus}; }
  static Target plus() { return {Kind::kSigned, Sign::kPlus}; }
  static Target minus() { return {Kind::kSigned, Sign::kMinus}; }
  static Target signed_(Sign eps) { return {Kind::kSigned, eps}; }

  bool is_naive() const { return kind == Kind::kNaive; }
  friend bool operator==(const Target& a, const Target& b) {
    return a.kind == b.kind && (a.kind == Kind::kNaive || a.eps == b.eps);
  }
  /// "naive", "plus" or "minus".
  std::string name() const { return is_naive() ? "naive" : (eps == Sign::kPlus ? "plus" : "minus"); }
};

}  // namespace arczeta
