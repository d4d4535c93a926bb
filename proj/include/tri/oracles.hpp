#pragma once

#include <optional>

#include "tri/freeness.hpp"
#include "tri/trigraph.hpp"

// Slow reference implementations used to cross-check the library. Each one
// follows the definition as literally as possible and shares no search code
// with the detectors and recognizers it checks.
namespace tri::oracle {

/// h itself (all vertices) is a subdivision of K4: four degree-3 vertices,
/// the rest degree 2, and the degree-2 components plus direct edges join the
/// four branch vertices exactly like the six edges of K4.
bool induces_K4_subdivision(const SimpleGraph& h);

/// h itself is a wheel: some vertex has >= 3 neighbours on the rest, and the
/// rest is a chordless cycle of length >= min_rim.
bool is_wheel(const SimpleGraph& h, int min_rim = 4);

/// Some realization of g has a vertex subset inducing the pattern.
bool contains_pattern(const Trigraph& g, Pattern p, int min_rim = 4);

/// Subgraph (not necessarily induced) that is a subdivision of K4, by
/// choosing four branch vertices and backtracking over six disjoint paths.
bool has_K4_subdivision_subgraph(const SimpleGraph& h);

struct BipartitionCheck {
  bool exists = false;
  bool thick = false;
};
/// Every split of V into (A, B), both strongly stable and strongly complete.
BipartitionCheck brute_force_bipartition(const Trigraph& g);

/// All cycles by depth-first search; chordless iff each cycle's vertex set
/// induces exactly its own edges.
bool chordless_by_cycles(const SimpleGraph& h);

/// Depth-first search over pairs with theta >= 0 inside `within`.
bool connected_by_search(const Trigraph& g, VertexSet within);

}  // namespace tri::oracle
