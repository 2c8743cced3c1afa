#include "wr/numerics.hpp"

#include <algorithm>
#include <cctype>

#include "wr/error.hpp"

namespace wr {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) {
    throw ParseError("not an exact rational: '" + std::string(whole) + "'");
  }
  Integer value(std::string(text), 10);
  return negative ? Integer(-value) : value;
}

const char* superscript(char digit) {
  static const char* const table[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  return table[digit - '0'];
}

std::string power_suffix(std::string_view variable, unsigned k) {
  std::string out(variable);
  if (k > 1) {
    for (char c : std::to_string(k)) out += superscript(c);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw ParseError("not an exact rational: '" + std::string(text) + "'");
  const Integer den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  // Powers of coprime integers stay coprime.
  mpq_class out;
  out.get_num() = num;
  out.get_den() = den;
  return Rational(std::move(out));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer integer_pow(const Integer& base, unsigned exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

// ----------------------------------------------------------- IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, unsigned degree) {
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] -= b.coeffs_[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const Integer& c, const IntPolynomial& p) {
  std::vector<Integer> out(p.coeffs_);
  for (auto& x : out) x *= c;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(unsigned k) const {
  if (is_zero()) return {};
  std::vector<Integer> out(k);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(std::string_view variable) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (!out.empty()) out += negative ? "-" : "+";
    else if (negative) out += "-";
    if (k == 0 || magnitude != 1) out += magnitude.get_str();
    if (k > 0) out += power_suffix(variable, static_cast<unsigned>(k));
  }
  return out;
}

std::string IntPolynomial::serialize() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ',';
    out += coeffs_[k].get_str();
  }
  return out;
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::vector<Integer> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    coeffs.push_back(parse_integer(piece, text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

IntPolynomial binomial_power(unsigned k) {
  std::vector<Integer> coeffs(k + 1);
  for (unsigned i = 0; i <= k; ++i) mpz_bin_uiui(coeffs[i].get_mpz_t(), k, i);
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial poly_derivative(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Integer> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(out));
}

Rational poly_eval(const IntPolynomial& p, const Rational& x) {
  // Horner on numerator/denominator separately: p(a/b) = (sum c_k a^k b^(n-k)) / b^n.
  const auto& c = p.coefficients();
  if (c.empty()) return Rational(0);
  const Integer a = x.numerator();
  const Integer b = x.denominator();
  Integer acc = c.back();
  Integer bpow = 1;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    bpow *= b;
    acc = acc * a + c[k] * bpow;
  }
  return Rational(acc, bpow);
}

// ----------------------------------------------------- BivariatePolynomial

BivariatePolynomial::BivariatePolynomial(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

BivariatePolynomial BivariatePolynomial::monomial(const Integer& c, unsigned i, unsigned j) {
  BivariatePolynomial p;
  p.add_term(c, i, j);
  return p;
}

Integer BivariatePolynomial::coefficient(unsigned i, unsigned j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BivariatePolynomial::add_term(const Integer& c, unsigned i, unsigned j) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(c, e.first, e.second);
  return out;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::swapped() const {
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(c, e.second, e.first);
  return out;
}

IntPolynomial BivariatePolynomial::diagonal() const {
  std::vector<Integer> coeffs;
  for (const auto& [e, c] : terms_) {
    const unsigned k = e.first + e.second;
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] += c;
  }
  return IntPolynomial(std::move(coeffs));
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (!out.empty()) out += negative ? "-" : "+";
    else if (negative) out += "-";
    const bool bare = e.first == 0 && e.second == 0;
    if (bare || magnitude != 1) out += magnitude.get_str();
    if (e.first > 0) out += power_suffix("λ₁", e.first);
    if (e.second > 0) out += power_suffix("λ₂", e.second);
  }
  return out;
}

Rational bivariate_eval(const BivariatePolynomial& p, const Rational& x, const Rational& y) {
  Rational acc(0);
  for (const auto& [e, c] : p.terms()) acc += Rational(c) * x.pow(e.first) * y.pow(e.second);
  return acc;
}

BivariatePolynomial bivariate_partial(const BivariatePolynomial& p, int variable) {
  if (variable != 1 && variable != 2) {
    throw UsageError("bivariate_partial: variable index must be 1 or 2, got " + std::to_string(variable));
  }
  BivariatePolynomial out;
  for (const auto& [e, c] : p.terms()) {
    const unsigned power = variable == 1 ? e.first : e.second;
    if (power == 0) continue;
    if (variable == 1) out.add_term(c * power, e.first - 1, e.second);
    else out.add_term(c * power, e.first, e.second - 1);
  }
  return out;
}

}  // namespace wr
