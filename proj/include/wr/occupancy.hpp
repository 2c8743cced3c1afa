#pragma once

#include <utility>

#include "wr/graph.hpp"
#include "wr/numerics.hpp"

namespace wr {

/// Two strictly positive activities, one per colour.
class ActivityPair {
 public:
  /// Throws DomainError unless both are > 0.
  ActivityPair(Rational lambda1, Rational lambda2);
  const Rational& lambda1() const { return lambda1_; }
  const Rational& lambda2() const { return lambda2_; }
  ActivityPair swapped() const { return {lambda2_, lambda1_}; }
  std::string to_string() const { return lambda1_.to_string() + "," + lambda2_.to_string(); }

 private:
  Rational lambda1_;
  Rational lambda2_;
};

/// Throws DomainError unless lambda > 0.
void require_positive_activity(const Rational& lambda);

/// λ P'(λ) / (n P(λ)) for a partition polynomial on n vertices.
Rational occupancy_from_polynomial(const IntPolynomial& p, int n, const Rational& lambda);
/// Expected fraction of occupied vertices.
Rational occupancy_fraction(const Graph& g, const Rational& lambda);
/// Occupancy fraction of K_{d+1}: 2λ(1+λ)^d / (2(1+λ)^{d+1} - 1).
Rational alpha_K(int d, const Rational& lambda);

struct ColourOccupancy {
  Rational colour1;
  Rational colour2;
};

ColourOccupancy occupancy_by_colour(const BivariatePolynomial& p, int n, const ActivityPair& act);
ColourOccupancy occupancy_by_colour(const Graph& g, const ActivityPair& act);
/// (λ₂ α¹ + λ₁ α²) / (λ₁ + λ₂).
Rational weighted_occupancy(const BivariatePolynomial& p, int n, const ActivityPair& act);
Rational weighted_occupancy(const Graph& g, const ActivityPair& act);

/// d/dx of (1/n) log P(λ₁-λ₂+x, x), computed by differentiating the restriction
/// of P to that line and, independently, from the per-colour occupancies.
struct FreeEnergyDerivative {
  Rational along_path;
  Rational from_occupancy;
  bool agree() const { return along_path == from_occupancy; }
};

/// Requires λ₁ >= λ₂ > 0 and 0 < x <= λ₂; throws VerificationError if the routes disagree.
FreeEnergyDerivative free_energy_derivative(const Graph& g, const Rational& lambda1, const Rational& lambda2,
                                            const Rational& x);
FreeEnergyDerivative free_energy_derivative(const BivariatePolynomial& p, int n, const Rational& lambda1,
                                            const Rational& lambda2, const Rational& x);

}  // namespace wr
