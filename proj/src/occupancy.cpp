#include "wr/occupancy.hpp"

#include "wr/error.hpp"
#include "wr/partition.hpp"

namespace wr {

ActivityPair::ActivityPair(Rational lambda1, Rational lambda2)
    : lambda1_(std::move(lambda1)), lambda2_(std::move(lambda2)) {
  if (lambda1_ <= Rational(0) || lambda2_ <= Rational(0)) {
    throw DomainError("activities must be positive, got (" + lambda1_.to_string() + ", " + lambda2_.to_string() + ")");
  }
}

void require_positive_activity(const Rational& lambda) {
  if (lambda.sign() <= 0) throw DomainError("activity must be positive, got " + lambda.to_string());
}

Rational occupancy_from_polynomial(const IntPolynomial& p, int n, const Rational& lambda) {
  require_positive_activity(lambda);
  if (n <= 0) throw UsageError("occupancy needs at least one vertex");
  return lambda * poly_eval(poly_derivative(p), lambda) / (Rational(n) * poly_eval(p, lambda));
}

Rational occupancy_fraction(const Graph& g, const Rational& lambda) {
  require_positive_activity(lambda);
  return occupancy_from_polynomial(wr_partition(g), g.n(), lambda);
}

Rational alpha_K(int d, const Rational& lambda) {
  if (d < 1) throw UsageError("alpha_K: d must be >= 1");
  require_positive_activity(lambda);
  const Rational base = Rational(1) + lambda;
  return Rational(2) * lambda * base.pow(d) / (Rational(2) * base.pow(d + 1) - Rational(1));
}

ColourOccupancy occupancy_by_colour(const BivariatePolynomial& p, int n, const ActivityPair& act) {
  const Rational& l1 = act.lambda1();
  const Rational& l2 = act.lambda2();
  const Rational z = Rational(n) * bivariate_eval(p, l1, l2);
  return {l1 * bivariate_eval(bivariate_partial(p, 1), l1, l2) / z,
          l2 * bivariate_eval(bivariate_partial(p, 2), l1, l2) / z};
}

ColourOccupancy occupancy_by_colour(const Graph& g, const ActivityPair& act) {
  return occupancy_by_colour(wr_partition_bivariate(g), g.n(), act);
}

Rational weighted_occupancy(const BivariatePolynomial& p, int n, const ActivityPair& act) {
  const auto [a1, a2] = occupancy_by_colour(p, n, act);
  return (act.lambda2() * a1 + act.lambda1() * a2) / (act.lambda1() + act.lambda2());
}

Rational weighted_occupancy(const Graph& g, const ActivityPair& act) {
  return weighted_occupancy(wr_partition_bivariate(g), g.n(), act);
}

namespace {

// Coefficients of Q(x) = P(shift + x, x) as exact rationals, lowest degree first.
std::vector<Rational> restrict_to_line(const BivariatePolynomial& p, const Rational& shift) {
  std::vector<Rational> out;
  for (const auto& [e, c] : p.terms()) {
    const auto [i, j] = e;
    if (out.size() < i + j + 1) out.resize(i + j + 1, Rational(0));
    // (shift + x)^i x^j = sum_k C(i,k) shift^(i-k) x^(k+j)
    for (unsigned k = 0; k <= i; ++k) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), i, k);
      out[k + j] += Rational(Integer(c * binom)) * shift.pow(i - k);
    }
  }
  return out;
}

Rational eval_rational_poly(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc(0);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

}  // namespace

FreeEnergyDerivative free_energy_derivative(const BivariatePolynomial& p, int n, const Rational& lambda1,
                                            const Rational& lambda2, const Rational& x) {
  if (!(lambda1 >= lambda2 && lambda2 > Rational(0))) {
    throw DomainError("free_energy_derivative needs lambda1 >= lambda2 > 0");
  }
  if (!(x > Rational(0) && x <= lambda2)) throw DomainError("free_energy_derivative needs 0 < x <= lambda2");
  const Rational shift = lambda1 - lambda2;
  const Rational first = shift + x;

  const auto line = restrict_to_line(p, shift);
  std::vector<Rational> derivative;
  for (std::size_t k = 1; k < line.size(); ++k) derivative.push_back(line[k] * Rational(static_cast<long>(k)));
  const Rational along = eval_rational_poly(derivative, x) / (Rational(n) * eval_rational_poly(line, x));

  const auto [a1, a2] = occupancy_by_colour(p, n, ActivityPair(first, x));
  const Rational formula = (x * a1 + first * a2) / (x * first);

  FreeEnergyDerivative out{along, formula};
  if (!out.agree()) {
    throw VerificationError("free-energy derivative routes disagree: " + along.to_string() + " vs " +
                            formula.to_string());
  }
  return out;
}

FreeEnergyDerivative free_energy_derivative(const Graph& g, const Rational& lambda1, const Rational& lambda2,
                                            const Rational& x) {
  return free_energy_derivative(wr_partition_bivariate(g), g.n(), lambda1, lambda2, x);
}

}  // namespace wr
