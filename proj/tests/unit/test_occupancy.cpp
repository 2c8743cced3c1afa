#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wr/error.hpp"
#include "wr/occupancy.hpp"
#include "wr/partition.hpp"

using namespace wr;

namespace {
Rational q(long p, long r) { return Rational(Integer(p), Integer(r)); }
}  // namespace

TEST_CASE("single activity occupancy") {
  CHECK(occupancy_fraction(make_complete(3), Rational(1)) == q(8, 15));
  CHECK(occupancy_fraction(make_cycle(4), Rational(1)) == oracle::occupancy(make_cycle(4), Rational(1)));
  CHECK(occupancy_fraction(make_cycle(4), Rational(1)) == q(18, 35));
  CHECK(occupancy_fraction(make_cycle(5), Rational(1)) == oracle::occupancy(make_cycle(5), Rational(1)));
  CHECK(occupancy_fraction(make_cycle(5), Rational(1)) == q(42, 83));
  CHECK_THROWS_AS(occupancy_fraction(make_cycle(5), Rational(0)), DomainError);
  CHECK_THROWS_AS(occupancy_fraction(make_cycle(5), q(-1, 2)), DomainError);
}

TEST_CASE("closed form for the complete graph") {
  CHECK(alpha_K(1, Rational(1)) == q(4, 7));
  CHECK(alpha_K(3, Rational(1)) == q(16, 31));
  std::mt19937_64 rng(6);
  for (int d = 1; d <= 6; ++d) {
    for (int i = 0; i < 5; ++i) {
      const Rational l = oracle::random_rational(rng);
      CHECK(alpha_K(d, l) == occupancy_fraction(make_complete(d + 1), l));
    }
  }
  CHECK(alpha_K(2, Rational(1)) == oracle::occupancy(make_complete(3), Rational(1)));
  CHECK_THROWS_AS(alpha_K(2, Rational(0)), DomainError);
}

TEST_CASE("alpha_K increases with the activity") {
  for (int d = 1; d <= 5; ++d) {
    Rational prev(0);
    for (long num = 1; num <= 40; ++num) {
      const Rational cur = alpha_K(d, q(num, 4));
      CHECK(prev < cur);
      prev = cur;
    }
  }
}

TEST_CASE("occupancy is strictly inside (0,1) and union invariant") {
  std::mt19937_64 rng(10);
  for (const auto& g : {make_cycle(6), make_petersen(), make_path(5), make_complete_bipartite(2, 3)}) {
    const Rational l = oracle::random_rational(rng);
    const Rational a = occupancy_fraction(g, l);
    CHECK(a.sign() > 0);
    CHECK(a < Rational(1));
    CHECK(occupancy_fraction(disjoint_union(g, g), l) == a);
  }
}

TEST_CASE("per-colour occupancy on K2 at (1,2)") {
  // 9 colourings of K2, weights 1 + 2λ₁ + 2λ₂ + λ₁² + λ₂²: total 12 at (1,2)
  const auto expected = oracle::occupancy_by_colour(make_complete(2), Rational(1), Rational(2));
  CHECK(expected.first == q(1, 6));
  CHECK(expected.second == q(1, 2));
  const auto got = occupancy_by_colour(make_complete(2), ActivityPair(Rational(1), Rational(2)));
  CHECK(got.colour1 == expected.first);
  CHECK(got.colour2 == expected.second);
  const Rational weighted = (Rational(2) * expected.first + Rational(1) * expected.second) / Rational(3);
  CHECK(weighted_occupancy(make_complete(2), ActivityPair(Rational(1), Rational(2))) == weighted);
  CHECK(weighted == q(5, 18));
}

TEST_CASE("per-colour occupancy against enumeration, symmetry and collapse") {
  std::mt19937_64 rng(12);
  for (const auto& g : {make_cycle(5), make_path(4), make_complete(4), make_prism(3)}) {
    const Rational l1 = oracle::random_rational(rng), l2 = oracle::random_rational(rng);
    const ActivityPair act(l1, l2);
    const auto got = occupancy_by_colour(g, act);
    const auto want = oracle::occupancy_by_colour(g, l1, l2);
    CHECK(got.colour1 == want.first);
    CHECK(got.colour2 == want.second);
    const auto swapped = occupancy_by_colour(g, act.swapped());
    CHECK(swapped.colour1 == got.colour2);
    CHECK(swapped.colour2 == got.colour1);
    CHECK(weighted_occupancy(g, act) == weighted_occupancy(g, act.swapped()));

    const auto diag = occupancy_by_colour(g, ActivityPair(l1, l1));
    CHECK(diag.colour1 == diag.colour2);
    CHECK(diag.colour1 + diag.colour2 == occupancy_fraction(g, l1));
    CHECK(weighted_occupancy(g, ActivityPair(l1, l1)) * Rational(2) == occupancy_fraction(g, l1));
  }
  CHECK_THROWS_AS(ActivityPair(Rational(1), Rational(0)), DomainError);
}

TEST_CASE("free energy derivative, both routes and a chain-rule oracle") {
  // d/dx P(s+x, x) = ∂₁P + ∂₂P, so the derivative of (1/n) log P is (∂₁P + ∂₂P)/(nP)
  auto chain_rule = [](const Graph& g, const Rational& l1, const Rational& l2, const Rational& x) {
    const auto terms = oracle::bivariate(g);
    const Rational a = l1 - l2 + x;
    Rational p(0), dp(0);
    for (const auto& [e, c] : terms) {
      const Rational cc(static_cast<long>(c));
      p += cc * a.pow(e.first) * x.pow(e.second);
      if (e.first) dp += cc * Rational(static_cast<long>(e.first)) * a.pow(e.first - 1) * x.pow(e.second);
      if (e.second) dp += cc * Rational(static_cast<long>(e.second)) * a.pow(e.first) * x.pow(e.second - 1);
    }
    return dp / (Rational(g.n()) * p);
  };
  const auto k2 = free_energy_derivative(make_complete(2), Rational(2), Rational(1), Rational(1));
  CHECK(k2.agree());
  CHECK(k2.along_path == chain_rule(make_complete(2), Rational(2), Rational(1), Rational(1)));

  std::mt19937_64 rng(14);
  for (const auto& g : {make_cycle(5), make_complete(3), make_path(4)}) {
    Rational l2 = oracle::random_rational(rng);
    Rational l1 = l2 + oracle::random_rational(rng);
    const Rational x = l2 * q(1 + static_cast<long>(rng() % 5), 5);
    const auto r = free_energy_derivative(g, l1, l2, x);
    CHECK(r.agree());
    CHECK(r.along_path == chain_rule(g, l1, l2, x));
    const auto diag = free_energy_derivative(g, l2, l2, x);
    CHECK(diag.agree());
  }
  const auto one = free_energy_derivative(make_complete(3), Rational(3), Rational(1), q(1, 2));
  const auto two = free_energy_derivative(disjoint_union(make_complete(3), make_complete(3)), Rational(3), Rational(1), q(1, 2));
  CHECK(one.along_path == two.along_path);

  CHECK_THROWS_AS(free_energy_derivative(make_complete(2), Rational(1), Rational(2), Rational(1)), DomainError);
  CHECK_THROWS_AS(free_energy_derivative(make_complete(2), Rational(2), Rational(1), Rational(2)), DomainError);
  CHECK_THROWS_AS(free_energy_derivative(make_complete(2), Rational(2), Rational(1), Rational(0)), DomainError);
}
