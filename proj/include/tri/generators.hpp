#pragma once

#include <cstdint>
#include <array>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tri/freeness.hpp"
#include "tri/trigraph.hpp"

namespace tri {

constexpr int kLabeledEnumerationBound = 6;
constexpr int kIsoEnumerationBound = 6;

/// Minimum over vertex orderings of the theta encoding, restricted to
/// orderings that sort vertices by (strong degree, semi degree). First byte is n.
using CanonicalCode = std::vector<std::int8_t>;
CanonicalCode canonical_code(const Trigraph& g);
bool isomorphic(const Trigraph& a, const Trigraph& b);

/// Vertex v of g becomes perm[v].
Trigraph permute(const Trigraph& g, const std::vector<int>& perm);

/// All 3^(n(n-1)/2) labeled trigraphs (pair values as a base-3 counter over
/// pair ranks, digits -1 < 0 < +1), or one representative per isomorphism
/// class. Stops early if visit returns false. Throws InputError beyond the bounds.
void for_each_trigraph(int n, bool modulo_iso, const std::function<bool(const Trigraph&)>& visit);
/// Isomorphism class representatives on n vertices, in a deterministic order.
std::vector<Trigraph> trigraph_classes(int n);

/// Number of isomorphism classes by brute force over all labeled trigraphs.
std::uint64_t count_classes_brute_force(int n);

/// All-strong named families. `semi` turns the listed pairs semi-adjacent
/// (they must be adjacent or non-adjacent pairs of the family as documented per family).
///
///   prism l1 l2 l3             branch lengths >= 1
///   theta l1 l2 l3             path lengths >= 2
///   k33
///   complete-bipartite s t     s, t >= 1
///   long-rich-square l1 .. lk  k >= 2 links, lengths >= 1; orientation per link in `orient`
///   k4-subdivision c1 .. c6    subdivision counts >= 0 on ab ac ad bc bd cd
///   line-k4-subdivision c1..c6 counts >= 1
///   cycle n (n >= 3), complete n, path n (n >= 1)
struct FamilyParams {
  std::vector<int> values;
  std::vector<int> orient;  ///< long-rich-square: 0 = links {a0,a1}-{a2,a3}, 1 = {a1,a2}-{a3,a0}
  std::vector<Pair> semi;
};
Trigraph make_family(const std::string& name, const FamilyParams& params);
std::vector<std::string> family_names();

SimpleGraph theta_graph(int l1, int l2, int l3);
/// K4 with counts[i] subdivision vertices on edge i (ab ac ad bc bd cd). Corners are 0..3.
SimpleGraph k4_subdivision(const std::array<int, 6>& counts);
/// Each edge of h replaced by a path with counts[i] interior vertices (h.edges() order).
SimpleGraph subdivide(const SimpleGraph& h, const std::vector<int>& counts);
Trigraph line_trigraph_of(const SimpleGraph& h);

/// Uniform double in [0, 1) from the top 53 bits of one generator draw.
double unit(std::mt19937_64& rng);
int uniform_int(std::mt19937_64& rng, int lo, int hi);  ///< inclusive

Trigraph random_trigraph(int n, double p_plus, double p_zero, std::uint64_t seed);

struct RandomFreeOptions {
  double p_plus = 0.3;
  double p_zero = 0.1;
  int max_attempts = 1000;
};
std::optional<Trigraph> random_free_trigraph(int n, const std::vector<Pattern>& patterns,
                                             std::uint64_t seed, RandomFreeOptions opts = {});

/// Random subdivision of a cubic 3-connected base (K4, K33, prism, cube) or a
/// theta, every edge subdivided 1..max_sub times. Chordless, cyclically
/// 3-connected, maximum degree 3.
SimpleGraph random_qualified_root(std::mt19937_64& rng, int max_sub = 3, int max_edges = 64);

/// Adds up to n_extra vertices to base, one at a time with random attachments,
/// dropping any vertex that creates one of the patterns. Base keeps its labels
/// 0..base.size()-1.
Trigraph grow_free_instance(const Trigraph& base, int n_extra, const std::vector<Pattern>& patterns,
                            std::uint64_t seed);

}  // namespace tri
