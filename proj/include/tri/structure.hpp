#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tri/trigraph.hpp"

namespace tri {

/// (a, b) partition V into strongly stable sets, strongly complete to each other.
struct Bipartition {
  VertexSet a;
  VertexSet b;
  bool operator==(const Bipartition&) const = default;
};

struct CompleteBipartite {
  Bipartition parts;
  bool thick = false;  ///< both sides have at least three vertices
};

/// Two strong triangles t1, t2 and flat branches joining t1[i] to t2[i].
struct PrismPieces {
  std::array<int, 3> t1{};
  std::array<int, 3> t2{};
  std::array<NarrowPath, 3> branches;

  /// Pieces as vertex sets: t1, t2, then the three branch pieces.
  std::array<VertexSet, 5> pieces() const;
};

/// Root graph of a line trigraph: vertex v of the trigraph is root edge vertex_edge[v].
struct RootGraph {
  SimpleGraph h;
  std::vector<Pair> vertex_edge;

  /// Inverse map, indexed like h.edges().
  std::vector<int> edge_to_vertex() const;
};

struct RootQualification {
  bool chordless = false;
  bool cyclically_3_connected = false;
  bool max_degree_3 = false;

  bool all() const { return chordless && cyclically_3_connected && max_degree_3; }
};

struct LineGraph {
  SimpleGraph graph;
  std::vector<Pair> vertex_edge;  ///< root edge for each line-graph vertex
};

/// Full realization has no K4-subdivision subgraph. Reduction: delete vertices of
/// degree at most one and suppress degree-2 vertices, merging parallel edges.
bool is_series_parallel(const Trigraph& g);
bool is_series_parallel(const SimpleGraph& h);

std::optional<CompleteBipartite> as_complete_bipartite(const Trigraph& g);
bool is_strong_K33(const Trigraph& g);

std::optional<PrismPieces> as_prism(const Trigraph& g);
/// Prism on g[host], pieces in g coordinates.
std::optional<PrismPieces> as_prism(const Trigraph& g, VertexSet host);

/// Line graph of h; vertices follow the order of h.edges().
LineGraph line_graph(const SimpleGraph& h);

/// Root graph if every triangle of g is strong and the full realization is a
/// line graph. A K3 component gets the root K_{1,3}. Throws ConsistencyError if
/// the recovered root fails its own line-graph check.
std::optional<RootGraph> as_line_trigraph(const Trigraph& g);

/// Checks that vertex_edge is an isomorphism from full_realization(g) onto L(root.h).
bool verify_root(const Trigraph& g, const RootGraph& root);

RootQualification qualify_root(const SimpleGraph& h);

bool is_two_connected(const SimpleGraph& h);
bool is_three_connected(const SimpleGraph& h);
/// 2-connected, not a cycle, no separation (A, B) with |A ∩ B| <= 2 and cycles on both sides.
bool is_cyclically_3_connected(const SimpleGraph& h);
bool is_theta(const SimpleGraph& h);
bool is_subdivision_of_3connected(const SimpleGraph& h);

/// JSON: {"vertices": n, "edges": [[u,v],...], "vertex_edge": [[u,v],...]}.
std::string format_root(const RootGraph& root);

}  // namespace tri
