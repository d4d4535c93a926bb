#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tri/vertex_set.hpp"

namespace tri {

/// Raised for malformed caller input (unknown vertices, bad parameters, parse errors).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a result fails its own re-verification.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Value of the adjacency function on one unordered pair. Ordered -1 < 0 < +1.
enum class Adj : std::int8_t { StrongAnti = -1, Semi = 0, Strong = 1 };

constexpr Adj negate(Adj a) { return static_cast<Adj>(-static_cast<int>(a)); }
char adj_symbol(Adj a);

using Pair = std::pair<int, int>;

/// A trigraph on vertices 0..n-1.
///
/// The adjacency function lives in a flat triangular array indexed by pair
/// rank; per-vertex bitmasks of neighbours (theta >= 0) and strong neighbours
/// (theta == +1) are kept alongside for the detectors.
class Trigraph {
 public:
  static constexpr int kMaxVertices = 64;

  Trigraph() = default;
  /// n vertices, every pair strongly anti-adjacent.
  explicit Trigraph(int n);

  int size() const { return n_; }
  bool null() const { return n_ == 0; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  Adj theta(int u, int v) const { return static_cast<Adj>(theta_[rank(u, v)]); }
  void set(int u, int v, Adj value);

  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  bool strongly_adjacent(int u, int v) const { return strong_[u].contains(v); }
  bool anti_adjacent(int u, int v) const { return !strong_[u].contains(v); }
  bool strongly_anti_adjacent(int u, int v) const { return !adj_[u].contains(v); }
  bool semi_adjacent(int u, int v) const { return adjacent(u, v) && !strongly_adjacent(u, v); }

  /// Vertices w with theta(v, w) >= 0.
  VertexSet neighbors(int v) const { return adj_[v]; }
  /// Vertices w with theta(v, w) == +1.
  VertexSet strong_neighbors(int v) const { return strong_[v]; }
  VertexSet semi_neighbors(int v) const { return adj_[v] - strong_[v]; }
  int degree(int v) const { return adj_[v].size(); }

  /// Semi-adjacent pairs in lexicographic order.
  std::vector<Pair> semi_pairs() const;
  int semi_count() const;
  bool is_graph() const { return semi_count() == 0; }

  bool is_clique(VertexSet s) const;
  bool is_strong_clique(VertexSet s) const;
  bool is_stable(VertexSet s) const;
  bool is_strongly_stable(VertexSet s) const;
  /// Every vertex of a is strongly anti-adjacent to every vertex of b.
  bool strongly_anticomplete(VertexSet a, VertexSet b) const;
  bool strongly_complete(VertexSet a, VertexSet b) const;

  /// Raw theta values in pair-rank order, encoded -1/0/+1.
  const std::vector<std::int8_t>& raw() const { return theta_; }

  bool operator==(const Trigraph& o) const { return n_ == o.n_ && theta_ == o.theta_; }

  static std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }
  /// Rank of the pair {u,v} in lexicographic order of (min, max).
  std::size_t rank(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<std::int8_t> theta_;
  std::vector<VertexSet> adj_;
  std::vector<VertexSet> strong_;
};

/// A trigraph with no semi-adjacent pairs.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : t_(n) {}
  /// Throws InputError if t has a semi-adjacent pair.
  explicit SimpleGraph(Trigraph t);
  static SimpleGraph from_edges(int n, const std::vector<Pair>& edges);

  int size() const { return t_.size(); }
  bool adjacent(int u, int v) const { return t_.strongly_adjacent(u, v); }
  VertexSet neighbors(int v) const { return t_.strong_neighbors(v); }
  int degree(int v) const { return t_.degree(v); }
  void add_edge(int u, int v) { t_.set(u, v, Adj::Strong); }
  void remove_edge(int u, int v) { t_.set(u, v, Adj::StrongAnti); }
  std::vector<Pair> edges() const;
  int edge_count() const;

  const Trigraph& trigraph() const { return t_; }
  bool operator==(const SimpleGraph&) const = default;

 private:
  Trigraph t_;
};

/// Induced subtrigraph together with the map back to host vertices.
struct Induced {
  Trigraph graph;
  std::vector<int> to_host;
};

/// Narrow path as an ordered vertex sequence in host coordinates.
struct NarrowPath {
  std::vector<int> order;

  int length() const { return static_cast<int>(order.size()) - 1; }
  int front() const { return order.front(); }
  int back() const { return order.back(); }
  VertexSet vertex_set() const { return VertexSet(order); }
  VertexSet interior() const;
  bool operator==(const NarrowPath&) const = default;
};

/// Consecutive vertices adjacent, non-consecutive strongly anti-adjacent, all distinct.
bool is_narrow_path(const Trigraph& g, const std::vector<int>& order);
/// Whether the whole trigraph is a narrow path (its full realization is a path).
bool is_narrow_path_trigraph(const Trigraph& g);

Trigraph complement(const Trigraph& g);
/// Throws InputError on vertices outside g.
Induced induced(const Trigraph& g, VertexSet x);
Induced induced(const Trigraph& g, const std::vector<int>& x);
Trigraph delete_vertices(const Trigraph& g, VertexSet x);

SimpleGraph full_realization(const Trigraph& g);
SimpleGraph null_realization(const Trigraph& g);

/// Realization selected by a decision mask over semi_pairs() (bit i set = edge).
SimpleGraph realization(const Trigraph& g, const std::vector<Pair>& semi, std::uint64_t decisions);

/// Calls visit for each of the 2^m realizations in binary-counter order over the
/// lexicographically sorted semi-adjacent pairs. Stops early if visit returns false.
/// Throws InputError if m > 40.
void for_each_realization(const Trigraph& g,
                          const std::function<bool(const SimpleGraph&, std::uint64_t)>& visit);

/// Lazy stream of realizations in the order above.
class RealizationStream {
 public:
  explicit RealizationStream(const Trigraph& g);
  std::optional<SimpleGraph> next();
  std::uint64_t total() const { return total_; }

 private:
  Trigraph g_;
  std::vector<Pair> semi_;
  std::uint64_t next_ = 0;
  std::uint64_t total_ = 0;
};

/// Components of the full realization, ordered by smallest member.
std::vector<VertexSet> components(const Trigraph& g);
std::vector<VertexSet> components(const Trigraph& g, VertexSet within);
bool is_connected(const Trigraph& g);
/// Connectivity of g restricted to the vertex subset (false for the empty set).
bool is_connected(const Trigraph& g, VertexSet within);

/// Shortest path of the full realization between a and b, which is a narrow path.
std::optional<NarrowPath> find_narrow_path(const Trigraph& g, int a, int b);
std::optional<NarrowPath> find_narrow_path(const Trigraph& g, int a, int b, VertexSet within);

/// Triangles (pairwise adjacent triples) of g.
std::vector<VertexSet> triangles(const Trigraph& g);
std::vector<VertexSet> strong_triangles(const Trigraph& g);

struct Branch {
  NarrowPath path;
  bool flat = false;
};

struct BranchStructure {
  VertexSet branch_vertices;
  std::vector<Branch> branches;

  std::vector<NarrowPath> flat_branches() const;
};

/// Branch vertices (degree >= 3, semi-adjacent pairs counted) and all branches.
/// Branches are reported with front() < back(), sorted by vertex order.
BranchStructure branch_structure(const Trigraph& g);

}  // namespace tri
