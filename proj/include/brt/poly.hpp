#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace brt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponents of X, Y, Z and t. Ordered lexicographically in that order.
struct Monomial {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::uint32_t z = 0;
  std::uint32_t t = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z, a.t + b.t};
  }
};

struct RationalPoint {
  Rational x = 0;
  Rational y = 0;
  Rational z = 0;
  Rational t = 0;
};

// Sparse polynomial in Z[X, Y, Z, t] with exact integer coefficients.
// Terms are kept in descending monomial order and never store a zero
// coefficient, so to_string() is canonical.
class MPoly {
 public:
  using TermMap = std::map<Monomial, BigInt, std::greater<>>;

  MPoly() = default;
  MPoly(long long constant);  // NOLINT(google-explicit-constructor)
  explicit MPoly(const BigInt& constant);

  static MPoly X() { return monomial({1, 0, 0, 0}); }
  static MPoly Y() { return monomial({0, 1, 0, 0}); }
  static MPoly Z() { return monomial({0, 0, 1, 0}); }
  static MPoly T() { return monomial({0, 0, 0, 1}); }
  static MPoly monomial(Monomial m, const BigInt& coefficient = 1);

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Monomial& m) const;
  /// Sum of all coefficients.
  BigInt coefficient_sum() const;

  void add_term(const Monomial& m, const BigInt& coefficient);

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a);
  friend bool operator==(const MPoly&, const MPoly&) = default;

  MPoly pow(std::uint32_t exponent) const;

  /// e.g. "X^2*Y - 3*Y*Z + 1"; zero prints as "0".
  std::string to_string() const;
  /// Accepts the to_string() syntax (any term order, optional spaces).
  static MPoly parse(std::string_view text);

 private:
  TermMap terms_;
};

/// (1 + p) style helpers used throughout the expansions.
inline MPoly one_plus(const MPoly& p) { return MPoly(1) + p; }

Rational evaluate(const MPoly& p, const RationalPoint& point);

/// Replaces each variable by a polynomial.
MPoly substitute(const MPoly& p, const MPoly& x, const MPoly& y, const MPoly& z, const MPoly& t);

/// q(t, Y) = C(1, Y, t Y^-2): each surviving Y^n Z^g becomes t^g Y^(n - 2g).
/// Throws NegativeExponent if some n - 2g < 0, InvalidArgument if p involves t.
MPoly counting_substitution(const MPoly& p);

/// Terms of p free of Y, i.e. p with Y := 0.
MPoly at_y_zero(const MPoly& p);

/// Ascending univariate rendering of a polynomial in t only, e.g. "4 + 7*t + t^2".
std::string ascending_t_string(const MPoly& p);

}  // namespace brt
