#pragma once

// Exact scalar and polynomial arithmetic. Integers and rationals are backed by
// GMP; every value is immutable once built and stored in canonical form.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wr {

using Integer = mpz_class;

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws DomainError when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Accepts "p/q" or "p" (optional leading '-'), ASCII decimal digits only.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Rational pow(unsigned exponent) const;
  Rational abs() const { return Rational(::abs(value_)); }

  const mpq_class& raw() const { return value_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_;
};

std::string to_string(const Integer& value);
Integer integer_pow(const Integer& base, unsigned exponent);

/// Dense univariate polynomial with integer coefficients; index k holds the
/// coefficient of x^k. The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, unsigned degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  /// Zero beyond the degree.
  Integer coefficient(unsigned k) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// Multiply by x^k.
  IntPolynomial shifted(unsigned k) const;

  /// Pretty form, e.g. "1+8λ+12λ²" with the given variable symbol.
  std::string to_string(std::string_view variable = "λ") const;
  /// Comma-separated coefficients, lowest degree first; "0" for the zero polynomial.
  std::string serialize() const;
  static IntPolynomial parse(std::string_view text);

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);
/// (1+x)^k with exact binomial coefficients.
IntPolynomial binomial_power(unsigned k);
IntPolynomial poly_derivative(const IntPolynomial& p);
/// Horner evaluation.
Rational poly_eval(const IntPolynomial& p, const Rational& x);

/// Sparse polynomial in two variables; key (i, j) is the coefficient of
/// x^i y^j. Only nonzero coefficients are stored.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<unsigned, unsigned>;
  using Terms = std::map<Exponents, Integer>;

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(Terms terms);
  static BivariatePolynomial monomial(const Integer& c, unsigned i, unsigned j);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(unsigned i, unsigned j) const;

  friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) = default;

  void add_term(const Integer& c, unsigned i, unsigned j);

  /// p(y, x).
  BivariatePolynomial swapped() const;
  /// p(x, x).
  IntPolynomial diagonal() const;
  std::string to_string() const;

 private:
  Terms terms_;
};

Rational bivariate_eval(const BivariatePolynomial& p, const Rational& x, const Rational& y);
/// Formal partial derivative; `variable` is 1 or 2, anything else is a UsageError.
BivariatePolynomial bivariate_partial(const BivariatePolynomial& p, int variable);

}  // namespace wr
