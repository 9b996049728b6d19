#include <cctype>
#include <limits>
#include <optional>
#include <string>

#include "arczeta/germ.h"

namespace arczeta {

GermParseError::GermParseError(Kind k, std::size_t pos, const std::string& what)
    : std::invalid_argument((k == Kind::kSyntax ? "syntax error at " : "invalid germ at ") + std::to_string(pos) +
                            ": " + what),
      kind(k),
      position(pos) {}

namespace {

constexpr long long kMaxIndex = 64;  // k, i, p, q
constexpr long long kMaxCoeff = 1000000;

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  GermSpec germ() {
    skip();
    GermSpec g;
    if (peek_word("Q")) {
      g = GermSpec::Q(quad());
    } else {
      g = family();
      skip();
      expect("(+)");
      skip();
      g.sig = quad();
    }
    skip();
    if (pos_ != s_.size()) syntax("trailing input");
    try {
      g.validate();
    } catch (const std::invalid_argument& e) {
      throw GermParseError(GermParseError::Kind::kSemantic, start_, e.what());
    }
    return g;
  }

 private:
  [[noreturn]] void syntax(const std::string& what) const {
    throw GermParseError(GermParseError::Kind::kSyntax, pos_, what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek_word(const char* w) const { return s_.compare(pos_, std::char_traits<char>::length(w), w) == 0; }

  bool accept(const char* w) {
    skip();
    if (!peek_word(w)) return false;
    pos_ += std::char_traits<char>::length(w);
    return true;
  }

  void expect(const char* w) {
    if (!accept(w)) syntax(std::string("expected '") + w + "'");
  }

  long long integer(long long lo, long long hi) {
    skip();
    std::size_t begin = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) syntax("expected integer");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > hi && v > -lo) syntax("integer out of range");
    }
    if (pos_ < s_.size() && s_[pos_] == '.')
      throw GermParseError(GermParseError::Kind::kSemantic, begin, "only integer parameters are supported");
    if (neg) v = -v;
    if (v < lo || v > hi) throw GermParseError(GermParseError::Kind::kSemantic, begin, "value out of range");
    return v;
  }

  Sign sign() {
    skip();
    if (accept("+")) return Sign::kPlus;
    if (accept("-")) return Sign::kMinus;
    syntax("expected sign");
  }

  QuadSignature quad() {
    expect("Q");
    expect("(");
    int p = static_cast<int>(integer(0, kMaxIndex));
    expect(",");
    int q = static_cast<int>(integer(0, kMaxIndex));
    expect(")");
    return {p, q};
  }

  GermSpec family() {
    start_ = pos_;
    QuadSignature none{0, 0};
    if (accept("CUBE")) return GermSpec::Cube(none);
    if (accept("E6")) {
      expect("(");
      Sign s = sign();
      expect(")");
      return GermSpec::E6(s, none);
    }
    if (accept("E7")) return GermSpec::E7(none);
    if (accept("E8")) return GermSpec::E8(none);
    if (accept("G")) return GermSpec::G(none);
    if (accept("A")) {
      expect("(");
      int k = static_cast<int>(integer(-kMaxIndex, kMaxIndex));
      Sign s = Sign::kPlus;
      bool has_sign = accept(",");
      if (has_sign) s = sign();
      expect(")");
      if (!has_sign && k % 2 != 0)
        throw GermParseError(GermParseError::Kind::kSemantic, start_, "A_k with odd k needs an explicit sign");
      return GermSpec::A(k, s, none);
    }
    if (accept("D")) {
      expect("(");
      int k = static_cast<int>(integer(-kMaxIndex, kMaxIndex));
      expect(",");
      Sign e1 = sign();
      expect(",");
      Sign e2 = sign();
      expect(")");
      return GermSpec::D(k, e1, e2, none);
    }
    if (accept("J")) return j_family();
    syntax("unknown family");
  }

  GermSpec j_family() {
    expect("(");
    int k = static_cast<int>(integer(-kMaxIndex, kMaxIndex));
    expect(",");
    int i = static_cast<int>(integer(-kMaxIndex, kMaxIndex));
    if (k < 2 || i < 0)
      throw GermParseError(GermParseError::Kind::kSemantic, start_, "J_{k,i} requires k > 1 and i >= 0");
    GermSpec g = GermSpec::J(k, i, {0, 0});
    std::optional<long long> b;
    std::optional<Sign> s1, s2;
    std::optional<std::vector<long long>> a;
    if (accept(";")) {
      do {
        skip();
        std::size_t at = pos_;
        auto once = [&](bool seen) {
          if (seen) throw GermParseError(GermParseError::Kind::kSyntax, at, "duplicate parameter");
        };
        if (accept("b")) {
          once(b.has_value());
          expect("=");
          b = integer(-kMaxCoeff, kMaxCoeff);
        } else if (accept("s1")) {
          once(s1.has_value());
          expect("=");
          s1 = sign();
        } else if (accept("s2")) {
          once(s2.has_value());
          expect("=");
          s2 = sign();
        } else if (accept("a")) {
          once(a.has_value());
          expect("=");
          expect("[");
          a.emplace();
          if (!accept("]")) {
            do {
              if (a->size() >= static_cast<std::size_t>(kMaxIndex)) syntax("too many coefficients");
              a->push_back(integer(-kMaxCoeff, kMaxCoeff));
            } while (accept(","));
            expect("]");
          }
        } else {
          syntax("unknown parameter");
        }
      } while (accept(","));
    }
    expect(")");
    if (i > 0 && (b || s2))
      throw GermParseError(GermParseError::Kind::kSemantic, start_, "b and s2 apply to J_{k,0} only");
    if (b) g.b = *b;
    if (s1) g.s1 = *s1;
    if (s2) g.s2 = *s2;
    if (a) g.a = *a;
    return g;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::size_t start_ = 0;
};

}  // namespace

GermSpec parse_germ(const std::string& text) { return Parser(text).germ(); }

}  // namespace arczeta
