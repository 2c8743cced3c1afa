#pragma once

// Brute-force reference computations used only by the tests. They enumerate
// colourings directly and share no code with the library's fast paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "wr/config_space.hpp"
#include "wr/graph.hpp"
#include "wr/numerics.hpp"

namespace oracle {

using wr::Rational;

// Calls f(colour vector) for every valid WR colouring of g (3^n loop).
template <class F>
void for_each_colouring(const wr::Graph& g, F&& f) {
  const int n = g.n();
  std::vector<int> c(n, 0);
  for (;;) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (c[e.u] && c[e.v] && c[e.u] != c[e.v]) {
        ok = false;
        break;
      }
    }
    if (ok) f(c);
    int i = 0;
    while (i < n && c[i] == 2) c[i++] = 0;
    if (i == n) return;
    ++c[i];
  }
}

// coefficient k = number of valid colourings with k coloured vertices
inline std::vector<long long> univariate(const wr::Graph& g) {
  std::vector<long long> coeff(g.n() + 1, 0);
  for_each_colouring(g, [&](const std::vector<int>& c) {
    int k = 0;
    for (int x : c) k += x != 0;
    ++coeff[k];
  });
  while (coeff.size() > 1 && coeff.back() == 0) coeff.pop_back();
  return coeff;
}

inline std::map<std::pair<unsigned, unsigned>, long long> bivariate(const wr::Graph& g) {
  std::map<std::pair<unsigned, unsigned>, long long> terms;
  for_each_colouring(g, [&](const std::vector<int>& c) {
    unsigned a = 0, b = 0;
    for (int x : c) {
      a += x == 1;
      b += x == 2;
    }
    ++terms[{a, b}];
  });
  return terms;
}

inline Rational evaluate(const std::vector<long long>& coeff, const Rational& x) {
  Rational sum(0);
  Rational power(1);
  for (long long c : coeff) {
    sum += Rational(c) * power;
    power *= x;
  }
  return sum;
}

// E[#coloured]/n under weights λ^{#coloured}
inline Rational occupancy(const wr::Graph& g, const Rational& lambda) {
  Rational num(0), den(0);
  for_each_colouring(g, [&](const std::vector<int>& c) {
    int k = 0;
    for (int x : c) k += x != 0;
    const Rational w = lambda.pow(k);
    num += Rational(k) * w;
    den += w;
  });
  return num / (Rational(g.n()) * den);
}

// per-colour expected fractions under weights λ₁^{X₁} λ₂^{X₂}
inline std::pair<Rational, Rational> occupancy_by_colour(const wr::Graph& g, const Rational& l1, const Rational& l2) {
  Rational n1(0), n2(0), den(0);
  for_each_colouring(g, [&](const std::vector<int>& c) {
    int a = 0, b = 0;
    for (int x : c) {
      a += x == 1;
      b += x == 2;
    }
    const Rational w = l1.pow(a) * l2.pow(b);
    n1 += Rational(a) * w;
    n2 += Rational(b) * w;
    den += w;
  });
  const Rational nd = Rational(g.n()) * den;
  return {n1 / nd, n2 / nd};
}

struct StarAlpha {
  Rational v;
  Rational u;
};

// Joint enumeration of the centre v (adjacent to all of H) and H with lists.
inline StarAlpha star(const wr::Configuration& c, const Rational& lambda) {
  const int d = c.d();
  Rational z(0), zv(0), zu(0);
  std::vector<int> col(d, 0);
  for (int centre = 0; centre < 3; ++centre) {
    for (;;) {
      bool ok = true;
      for (int u = 0; u < d && ok; ++u) {
        if (col[u] && !(c.lists[u] >> (col[u] - 1) & 1)) ok = false;
        if (col[u] && centre && col[u] != centre) ok = false;
      }
      for (const auto& e : c.h.edges()) {
        if (col[e.u] && col[e.v] && col[e.u] != col[e.v]) ok = false;
      }
      if (ok) {
        int k = centre != 0;
        int ku = 0;
        for (int x : col) ku += x != 0;
        const Rational w = lambda.pow(k + ku);
        z += w;
        if (centre) zv += w;
        zu += Rational(ku) * w;
      }
      int i = 0;
      while (i < d && col[i] == 2) col[i++] = 0;
      if (i == d) break;
      ++col[i];
    }
  }
  return {zv / z, d == 0 ? Rational(0) : zu / (Rational(d) * z)};
}

// Valid colourings of H respecting the lists: all lists equal, some
// colouring uses both colours.
inline std::pair<bool, bool> equal_lists_and_dichromatic(const wr::Configuration& c) {
  bool equal = true;
  for (auto l : c.lists) equal = equal && l == c.lists.front();
  bool dichromatic = false;
  const int d = c.d();
  std::vector<int> col(d, 0);
  for (;;) {
    bool ok = true, one = false, two = false;
    for (int u = 0; u < d; ++u) {
      if (col[u] && !(c.lists[u] >> (col[u] - 1) & 1)) ok = false;
      one = one || col[u] == 1;
      two = two || col[u] == 2;
    }
    for (const auto& e : c.h.edges()) {
      if (col[e.u] && col[e.v] && col[e.u] != col[e.v]) ok = false;
    }
    if (ok && one && two) dichromatic = true;
    int i = 0;
    while (i < d && col[i] == 2) col[i++] = 0;
    if (i == d) break;
    ++col[i];
  }
  return {equal, dichromatic};
}

// Number of (graph, list assignment) pairs on d labelled vertices up to
// relabelling, by Burnside: average over permutations of
// 2^{#edge orbits} * 4^{#vertex cycles}.
inline long long burnside_config_count(int d) {
  std::vector<int> perm(d);
  for (int i = 0; i < d; ++i) perm[i] = i;
  long long total = 0, perms = 0;
  do {
    ++perms;
    std::vector<char> seen(d, 0);
    int cycles = 0;
    for (int i = 0; i < d; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (int j = i; !seen[j]; j = perm[j]) seen[j] = 1;
    }
    std::map<std::pair<int, int>, int> orbit_of;
    int orbits = 0;
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b) {
        if (orbit_of.count({a, b})) continue;
        ++orbits;
        int x = a, y = b;
        do {
          orbit_of[{std::min(x, y), std::max(x, y)}] = orbits;
          x = perm[x];
          y = perm[y];
        } while (!(std::min(x, y) == a && std::max(x, y) == b));
      }
    }
    total += (1LL << orbits) * (1LL << (2 * cycles));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / perms;
}

inline Rational random_rational(std::mt19937_64& rng, int max_num = 40, int max_den = 20) {
  const long p = 1 + static_cast<long>(rng() % max_num);
  const long q = 1 + static_cast<long>(rng() % max_den);
  return Rational(wr::Integer(p), wr::Integer(q));
}

}  // namespace oracle
