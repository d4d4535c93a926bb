#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tri/cutsets.hpp"
#include "tri/structure.hpp"
#include "tri/trigraph.hpp"

namespace tri {

enum class ClassLabel {
  SeriesParallel,
  ThickCompleteBipartite,
  LineTrigraphBasic,
  CliqueCutset,
  Stable2Cutset,
};

std::string label_name(ClassLabel l);
bool is_basic(ClassLabel l);

struct Classification {
  std::vector<ClassLabel> labels;  ///< in enum order
  /// Set whenever g is a line trigraph, qualified or not.
  std::optional<RootQualification> root_flags;
  /// Outcomes of the weaker statement: complete bipartite and unqualified line trigraph.
  bool complete_bipartite = false;
  bool line_trigraph = false;
  std::optional<CutsetReport> clique_cutset;
  std::optional<CutsetReport> stable_2_cutset;

  bool has(ClassLabel l) const;
  bool any_basic() const;
};

Classification classify(const Trigraph& g);

/// Leaf (cut absent) or split on `cut`. Vertices are in the coordinates of the
/// trigraph passed to decompose.
struct DecompositionTree {
  VertexSet vertices;
  std::vector<ClassLabel> labels;  ///< basic labels of a leaf
  std::optional<CutsetReport> cut;
  std::unique_ptr<DecompositionTree> left;   ///< a ∪ c
  std::unique_ptr<DecompositionTree> right;  ///< b ∪ c

  bool leaf() const { return !cut.has_value(); }
  bool irreducible() const { return leaf() && labels.empty(); }
  int leaf_count() const;
  int irreducible_count() const;
};

DecompositionTree decompose(const Trigraph& g);

/// Checks leaf priority, non-empty leaf labels, and every split's partition
/// against g. Returns a diagnostic for the first failure.
std::optional<std::string> check_tree(const Trigraph& g, const DecompositionTree& t);

/// Nested JSON records with labels, cut kinds and vertex lists.
std::string format_tree(const DecompositionTree& t, int indent = 2);

}  // namespace tri
