#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "wr/config_space.hpp"
#include "wr/error.hpp"

using namespace wr;

namespace {

Rational q(long p, long r) { return Rational(Integer(p), Integer(r)); }
IntPolynomial one_plus(unsigned k) { return binomial_power(k); }
IntPolynomial constant(long c) { return IntPolynomial::constant(Integer(c)); }

Configuration random_config(int d, std::mt19937_64& rng) {
  const std::uint32_t pairs = d * (d - 1) / 2;
  const auto h = graph_from_edge_code(d, static_cast<std::uint32_t>(rng() & ((1ULL << pairs) - 1)));
  std::vector<ColourList> lists(d);
  for (auto& l : lists) l = static_cast<ColourList>(rng() % 4);
  return make_configuration(h, lists);
}

Configuration relabel(const Configuration& c, std::mt19937_64& rng) {
  std::vector<int> perm(c.d());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<ColourList> lists(c.d());
  for (int v = 0; v < c.d(); ++v) lists[perm[v]] = c.lists[v];
  return make_configuration(permuted(c.h, perm), lists);
}

}  // namespace

TEST_CASE("local partition functions of the named configurations") {
  const auto c0 = local_partition_functions(make_empty_lists(make_empty(2)));
  CHECK(c0.p0 == constant(1));
  CHECK(c0.p12 == constant(2));
  CHECK(c0.pc.serialize() == "1,2");
  CHECK(c0.all_lists_empty);

  const auto k = local_partition_functions(make_complete_full(2));
  CHECK(k.p0 == Integer(2) * one_plus(2) - constant(1));
  CHECK(k.p12 == Integer(2) * one_plus(2));
  CHECK(k.pc == Integer(2) * one_plus(3) - constant(1));
  CHECK(k.lists_all_equal);
  CHECK_FALSE(k.has_dichromatic);

  const auto c1 = local_partition_functions(make_single_colour(make_empty(2), 1));
  CHECK(c1.p0 == one_plus(2));
  CHECK(c1.p12 == one_plus(2) + constant(1));
  CHECK(c1.pc == one_plus(3) + IntPolynomial::monomial(Integer(1), 1));
  CHECK(c1.a1 == 2);
  CHECK(c1.a2 == 0);
}

TEST_CASE("occupancy estimates of the named configurations") {
  const auto c0 = make_empty_lists(make_empty(2));
  CHECK(alpha_v(c0, Rational(1)) == q(2, 3));
  CHECK(alpha_u(c0, Rational(1)) == Rational(0));
  const auto c1 = make_single_colour(make_empty(2), 1);
  CHECK(alpha_v(c1, Rational(1)) == q(5, 9));
  CHECK(alpha_u(c1, Rational(1)) == q(4, 9));
  const auto k = make_complete_full(2);
  CHECK(alpha_v(k, Rational(1)) == q(8, 15));
  CHECK(alpha_u(k, Rational(1)) == q(8, 15));
  for (const auto& c : {c0, c1, k}) {
    const auto s = oracle::star(c, Rational(1));
    CHECK(alpha_v(c, Rational(1)) == s.v);
    CHECK(alpha_u(c, Rational(1)) == s.u);
  }
  CHECK_THROWS_AS(alpha_v(k, Rational(0)), DomainError);
}

TEST_CASE("closed formulas equal star enumeration for every configuration, d <= 4") {
  const Rational lambdas[] = {q(1, 2), Rational(1), Rational(3)};
  for (int d = 1; d <= 4; ++d) {
    for (const auto& e : enumerate_configs(d)) {
      const auto s = local_partition_functions(e.config);
      for (const auto& l : lambdas) {
        const auto want = oracle::star(e.config, l);
        CHECK(alpha_v(s, l) == want.v);
        CHECK(alpha_u(s, l) == want.u);
      }
      const auto star = star_enumeration_alpha(e.config, Rational(1));
      CHECK(star.v1 + star.v2 == alpha_v(s, Rational(1)));
      CHECK(star.u1 + star.u2 == alpha_u(s, Rational(1)));
    }
  }
}

TEST_CASE("per-colour estimates") {
  const auto c1 = make_single_colour(make_empty(2), 1);
  const auto a = per_colour_alpha(c1, Rational(1));
  CHECK(a.u1 == q(4, 9));
  CHECK(a.u2 == Rational(0));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    const auto c = random_config(1 + static_cast<int>(rng() % 4), rng);
    const Rational l = oracle::random_rational(rng);
    const auto pc = per_colour_alpha(c, l);
    CHECK(pc.v1 + pc.v2 == alpha_v(c, l));
    CHECK(pc.u1 + pc.u2 == alpha_u(c, l));
    const auto star = star_enumeration_alpha(c, l);
    CHECK(star.v1 == pc.v1);
    CHECK(star.u2 == pc.u2);
    bool has_two = false;
    for (auto x : c.lists) has_two = has_two || (x & kListTwo);
    if (!has_two) CHECK(pc.u2 == Rational(0));
  }
  const auto full = per_colour_alpha(make_complete_full(3), q(2, 3));
  CHECK(full.v1 == full.v2);
  CHECK(full.u1 == full.u2);
}

TEST_CASE("enumeration sizes match an orbit count") {
  CHECK(enumerate_configs(1).size() == 4);
  CHECK(enumerate_configs(2).size() == 20);
  // regression constant, cross-checked by the orbit count below
  CHECK(enumerate_configs(3).size() == 120);
  for (int d = 1; d <= 6; ++d) {
    CHECK(static_cast<long long>(enumerate_configs(d).size()) == oracle::burnside_config_count(d));
  }
  CHECK_THROWS_AS(enumerate_configs(kConfigEnumerationMaxD + 1), CapacityError);
}

TEST_CASE("enumeration contains the special configurations and is sorted") {
  for (int d = 1; d <= 4; ++d) {
    const auto& all = enumerate_configs(d);
    CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.key < b.key; }));
    int empty = 0, one = 0, two = 0, complete = 0;
    for (const auto& e : all) {
      CHECK(e.key == config_key(e.config));
      switch (classify(e.config)) {
        case ConfigClass::empty_lists: ++empty; break;
        case ConfigClass::single_colour_1: ++one; break;
        case ConfigClass::single_colour_2: ++two; break;
        case ConfigClass::complete_full: ++complete; break;
        case ConfigClass::other: break;
      }
    }
    CHECK(empty >= 1);
    CHECK(one == empty);
    CHECK(two == empty);
    CHECK(complete == 1);
  }
  bool found = false;
  for (const auto& e : enumerate_configs(2)) found = found || config_key(make_complete_full(2)) == e.key;
  CHECK(found);
}

TEST_CASE("dedup is sound: relabelled configurations share key and statistics") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    const auto c = random_config(1 + static_cast<int>(rng() % 6), rng);
    const auto r = relabel(c, rng);
    CHECK(config_key(c) == config_key(r));
    const auto a = local_partition_functions(c), b = local_partition_functions(r);
    CHECK(a.a1 == b.a1);
    CHECK(a.a2 == b.a2);
    CHECK(a.p0 == b.p0);
    CHECK(alpha_v(a, Rational(2)) == alpha_v(b, Rational(2)));
    CHECK(alpha_u(a, Rational(2)) == alpha_u(b, Rational(2)));
  }
}

TEST_CASE("flags and positivity on every configuration, d <= 4") {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& e : enumerate_configs(d)) {
      const auto s = local_partition_functions(e.config);
      const auto [equal, dichromatic] = oracle::equal_lists_and_dichromatic(e.config);
      CHECK(s.lists_all_equal == equal);
      CHECK(s.has_dichromatic == dichromatic);
      CHECK(s.p1 == one_plus(s.a1));
      CHECK(s.p2 == one_plus(s.a2));
      CHECK(s.p12 == s.p1 + s.p2);
      CHECK(s.pc == s.p0 + s.p12.shifted(1));
      const auto gap = Integer(2) * s.p0 - s.p12;
      for (const auto& l : {q(1, 10), Rational(1), Rational(10)}) {
        if (s.all_lists_empty) {
          CHECK(gap.is_zero());
        } else {
          CHECK(poly_eval(gap, l).sign() > 0);
          CHECK(poly_eval(poly_derivative(s.p0), l).sign() > 0);
        }
      }
    }
  }
}

TEST_CASE("with full lists only the complete graph has no dichromatic colouring") {
  for (int d = 1; d <= 6; ++d) {
    for (const auto& e : enumerate_configs(d)) {
      if (!std::all_of(e.config.lists.begin(), e.config.lists.end(), [](ColourList l) { return l == kListBoth; })) {
        continue;
      }
      const bool complete = e.config.h.edge_count() == d * (d - 1) / 2;
      CHECK(local_partition_functions(e.config).has_dichromatic == !complete);
    }
  }
}

TEST_CASE("text form") {
  const Edge path[] = {{0, 1}, {1, 2}};
  const auto c = make_configuration(Graph(3, path), {kListBoth, kListEmpty, kListTwo});
  const auto text = serialize_configuration(c);
  CHECK(text.find("lists: 12 - 2") != std::string::npos);
  const auto back = parse_configuration(text);
  CHECK(back.h == c.h);
  CHECK(back.lists == c.lists);
  CHECK_THROWS_AS(parse_configuration("2 1\n0 1\nlists: 12\n"), ParseError);
  CHECK_THROWS_AS(parse_configuration("2 1\n0 1\nlists: 12 3\n"), ParseError);
  CHECK_THROWS_AS(make_configuration(make_empty(2), {kListBoth}), UsageError);
  CHECK(config_label(make_complete_full(3)) == "K3-full-lists");
}

TEST_CASE("capacity") {
  CHECK_THROWS_AS(local_partition_functions(make_complete_full(kConfigStatsMaxD + 1)), CapacityError);
  CHECK_NOTHROW(local_partition_functions(make_complete_full(kConfigStatsMaxD)));
}
