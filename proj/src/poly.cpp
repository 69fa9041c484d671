#include "brt/poly.hpp"

#include <cctype>
#include <sstream>

#include "brt/error.hpp"

namespace brt {

MPoly::MPoly(long long constant) : MPoly(BigInt(constant)) {}

MPoly::MPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

MPoly MPoly::monomial(Monomial m, const BigInt& coefficient) {
  MPoly p;
  p.add_term(m, coefficient);
  return p;
}

BigInt MPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt MPoly::coefficient_sum() const {
  BigInt sum = 0;
  for (const auto& [m, c] : terms_) sum += c;
  return sum;
}

void MPoly::add_term(const Monomial& m, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& other) { return *this = *this * other; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MPoly operator-(const MPoly& a) {
  MPoly out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
  return out;
}

MPoly MPoly::pow(std::uint32_t exponent) const {
  MPoly result(1);
  MPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

namespace {

void write_factor(std::ostringstream& os, bool& first, char var, std::uint32_t exp) {
  if (exp == 0) return;
  if (!first) os << '*';
  first = false;
  os << var;
  if (exp > 1) os << '^' << exp;
}

std::string monomial_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  write_factor(os, first, 'X', m.x);
  write_factor(os, first, 'Y', m.y);
  write_factor(os, first, 'Z', m.z);
  write_factor(os, first, 't', m.t);
  return os.str();
}

std::string term_body(const Monomial& m, const BigInt& magnitude) {
  const std::string vars = monomial_string(m);
  if (vars.empty()) return magnitude.str();
  if (magnitude == 1) return vars;
  return magnitude.str() + "*" + vars;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MPoly parse() {
    MPoly out;
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [m, c] = term();
      out.add_term(m, sign * c);
      first = false;
      skip();
    }
    return out;
  }

 private:
  std::pair<Monomial, BigInt> term() {
    BigInt coefficient = 1;
    Monomial m;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = BigInt(digits());
      skip();
      need_factor = false;
      if (peek() == '*') {
        ++pos_;
        skip();
        need_factor = true;
      }
    }
    while (need_factor) {
      const char var = peek();
      ++pos_;
      skip();
      std::uint32_t exp = 1;
      if (peek() == '^') {
        ++pos_;
        skip();
        exp = static_cast<std::uint32_t>(std::stoul(digits()));
        skip();
      }
      switch (var) {
        case 'X': m.x += exp; break;
        case 'Y': m.y += exp; break;
        case 'Z': m.z += exp; break;
        case 't': m.t += exp; break;
        default: fail(std::string("unknown variable '") + var + "'");
      }
      need_factor = false;
      if (peek() == '*') {
        ++pos_;
        skip();
        need_factor = true;
      }
    }
    return {m, coefficient};
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Rational rational_pow(const Rational& base, std::uint32_t exp) {
  Rational out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty()) {
      out = (negative ? "-" : "") + term_body(m, magnitude);
    } else {
      out += negative ? " - " : " + ";
      out += term_body(m, magnitude);
    }
  }
  return out;
}

MPoly MPoly::parse(std::string_view text) { return Parser(text).parse(); }

Rational evaluate(const MPoly& p, const RationalPoint& point) {
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    sum += Rational(c) * rational_pow(point.x, m.x) * rational_pow(point.y, m.y) * rational_pow(point.z, m.z) *
           rational_pow(point.t, m.t);
  }
  return sum;
}

MPoly substitute(const MPoly& p, const MPoly& x, const MPoly& y, const MPoly& z, const MPoly& t) {
  MPoly out;
  for (const auto& [m, c] : p.terms()) {
    out += MPoly(c) * x.pow(m.x) * y.pow(m.y) * z.pow(m.z) * t.pow(m.t);
  }
  return out;
}

MPoly counting_substitution(const MPoly& p) {
  MPoly at_x_one;
  for (const auto& [m, c] : p.terms()) {
    if (m.t != 0) throw Error(ErrorCode::InvalidArgument, "counting substitution expects a polynomial in X, Y, Z");
    at_x_one.add_term(Monomial{0, m.y, m.z, 0}, c);
  }
  MPoly out;
  for (const auto& [m, c] : at_x_one.terms()) {
    if (m.y < 2 * m.z) {
      throw Error(ErrorCode::NegativeExponent, "term " + monomial_string(m) + " has Y exponent below 2 * Z exponent");
    }
    out.add_term(Monomial{0, m.y - 2 * m.z, 0, m.z}, c);
  }
  return out;
}

MPoly at_y_zero(const MPoly& p) {
  MPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.y == 0) out.add_term(m, c);
  }
  return out;
}

std::string ascending_t_string(const MPoly& p) {
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (m.x != 0 || m.y != 0 || m.z != 0) {
      throw Error(ErrorCode::InvalidArgument, "expected a polynomial in t only");
    }
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty()) {
      out = (negative ? "-" : "") + term_body(m, magnitude);
    } else {
      out += (negative ? " - " : " + ") + term_body(m, magnitude);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace brt
