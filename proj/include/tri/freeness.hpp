#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tri/trigraph.hpp"

namespace tri {

enum class Pattern { ISK4, Wheel, Diamond, K4, K33 };

std::string pattern_name(Pattern p);
/// Accepts isk4, wheel, diamond, k4, k33 (case-insensitive). Throws InputError.
Pattern parse_pattern(const std::string& s);
const std::vector<Pattern>& all_patterns();

/// A decision for one semi-adjacent pair of the host.
struct PairChoice {
  int u = 0;
  int v = 0;
  bool edge = false;
  bool operator==(const PairChoice&) const = default;
};

struct Witness {
  Pattern kind = Pattern::ISK4;
  std::vector<int> vertices;              ///< sorted, host coordinates
  std::vector<PairChoice> realization;    ///< every semi-adjacent pair of the host
  /// Wheel only: rim in cyclic order, then the hub.
  std::vector<int> rim;
  int hub = -1;

  /// The realization the witness lives in.
  SimpleGraph realize(const Trigraph& host) const;
};

/// Structured text record: kind, vertex list, realization choices.
std::string format_witness(const Witness& w);

struct WheelOptions {
  /// Minimum rim length. 4 by default; 3 admits triangle rims (then K4 is a wheel).
  int min_rim = 4;
};

enum class Isk4Strategy {
  SubsetScan,  ///< all vertex subsets with an in-set degree filter
  Backtrack,   ///< four branch vertices, then six induced paths
};

/// Whether h (all vertices) is a subdivision of K4.
bool is_subdivision_of_K4(const SimpleGraph& h);

std::optional<Witness> find_ISK4(const SimpleGraph& h,
                                 Isk4Strategy strategy = Isk4Strategy::SubsetScan);
std::optional<Witness> find_wheel(const SimpleGraph& h, WheelOptions opts = {});

/// Some realization contains the pattern as an induced subgraph. Each detector
/// searches the trigraph directly: a vertex set X with a target edge set E is
/// realizable iff every pair of E has theta >= 0 and every other pair inside X
/// has theta <= 0, since each semi-adjacent pair is decided independently.
std::optional<Witness> find_ISK4(const Trigraph& g);
std::optional<Witness> find_wheel(const Trigraph& g, WheelOptions opts = {});
std::optional<Witness> find_diamond(const Trigraph& g);
std::optional<Witness> find_K4(const Trigraph& g);
std::optional<Witness> find_K33(const Trigraph& g);

/// Absent iff every realization of g is p-free; otherwise a witness.
std::optional<Witness> trigraph_is_free(const Trigraph& g, Pattern p, WheelOptions opts = {});
/// Free of every listed pattern.
bool is_free(const Trigraph& g, const std::vector<Pattern>& patterns, WheelOptions opts = {});

/// Restricted search: only structures that contain vertex v. Used when a
/// vertex is added to a trigraph already known to be free.
std::optional<Witness> find_pattern_through(const Trigraph& g, Pattern p, int v,
                                            WheelOptions opts = {});

/// Every cycle of h is induced.
bool is_chordless(const SimpleGraph& h);

}  // namespace tri
