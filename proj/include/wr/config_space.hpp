#pragma once

// Local objects of the linear-programming relaxation: a centre vertex v whose
// neighbourhood is a graph H on d vertices, each neighbour u carrying a list
// L_u ⊆ {1,2} of colours the outside world still permits.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wr/graph.hpp"
#include "wr/numerics.hpp"

namespace wr {

/// Bitmask: bit 0 allows colour 1, bit 1 allows colour 2.
using ColourList = std::uint8_t;
inline constexpr ColourList kListEmpty = 0;
inline constexpr ColourList kListOne = 1;
inline constexpr ColourList kListTwo = 2;
inline constexpr ColourList kListBoth = 3;

inline constexpr int kConfigStatsMaxD = 8;
inline constexpr int kConfigEnumerationMaxD = 6;

struct Configuration {
  Graph h;
  std::vector<ColourList> lists;

  int d() const { return h.n(); }
};

/// Validates list values and |lists| = |V(H)|.
Configuration make_configuration(Graph h, std::vector<ColourList> lists);
/// All lists empty (edges immaterial).
Configuration make_empty_lists(const Graph& h);
/// Every list {colour}.
Configuration make_single_colour(const Graph& h, int colour);
/// H = K_d with every list {1,2}: the neighbourhood seen in K_{d+1}.
Configuration make_complete_full(int d);

enum class ConfigClass { empty_lists, single_colour_1, single_colour_2, complete_full, other };

struct ConfigStats {
  int d = 0;
  int a1 = 0;
  int a2 = 0;
  IntPolynomial p0;
  IntPolynomial p1;
  IntPolynomial p2;
  IntPolynomial p12;
  IntPolynomial pc;
  bool lists_all_equal = false;
  bool has_dichromatic = false;
  bool all_lists_empty = false;

  /// The predicate characterising equality in the claims.
  bool equality_predicate() const { return lists_all_equal && !has_dichromatic; }
};

/// Enumerates the list-respecting colourings of H. Throws CapacityError for d > 8
/// and VerificationError if P¹, P² differ from (1+λ)^{a_i}.
ConfigStats local_partition_functions(const Configuration& c);

/// λ P¹² / P_C.
Rational alpha_v(const ConfigStats& s, const Rational& lambda);
/// λ ((P⁰)' + λ (P¹²)') / (d P_C).
Rational alpha_u(const ConfigStats& s, const Rational& lambda);
Rational alpha_v(const Configuration& c, const Rational& lambda);
Rational alpha_u(const Configuration& c, const Rational& lambda);

struct PerColourAlpha {
  Rational v1;
  Rational v2;
  Rational u1;
  Rational u2;
};

/// Centre terms from λ Pⁱ / P_C; neighbour terms by enumerating the joint
/// colourings of {v} ∪ V(H).
PerColourAlpha per_colour_alpha(const Configuration& c, const Rational& lambda);
/// All four terms by joint enumeration of the star {v} ∪ V(H).
PerColourAlpha star_enumeration_alpha(const Configuration& c, const Rational& lambda);

ConfigClass classify(const Configuration& c);
CanonicalKey config_key(const Configuration& c);
/// Readable identifier: "K3-full-lists", "C0[H={0-1}]", "C1(2)[H={}]", "[H={0-1} L=12,1]".
std::string config_label(const Configuration& c);

struct ConfigEntry {
  CanonicalKey key;
  Configuration config;
};

/// Every (H, lists) with |V(H)| = d, one representative per list-preserving
/// isomorphism class, sorted by key. The representative is the canonical form.
/// Throws CapacityError for d > 6. Results are cached per d.
const std::vector<ConfigEntry>& enumerate_configs(int d);

/// "lists: 12 1 - 2" line appended to the edge list of H.
std::string serialize_configuration(const Configuration& c);
Configuration parse_configuration(std::string_view text);
std::string list_to_string(ColourList l);

}  // namespace wr
