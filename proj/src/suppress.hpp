#pragma once

#include <vector>

#include "tri/trigraph.hpp"

namespace tri::detail {

/// Multigraph obtained by suppressing every degree-2 vertex: nodes are the
/// vertices of degree other than two, edges are the maximal paths whose interior
/// vertices all have degree two. Parallel edges and loops are kept.
struct Suppressed {
  struct Edge {
    int a = 0;
    int b = 0;
    int length = 0;  ///< edges of the underlying path
  };
  std::vector<int> nodes;
  std::vector<Edge> edges;
  int free_cycles = 0;  ///< components made only of degree-2 vertices
  int loops = 0;
  bool low_degree = false;  ///< some vertex has degree 0 or 1
};

inline Suppressed suppress_degree_two(const SimpleGraph& h) {
  Suppressed s;
  const int n = h.size();
  VertexSet visited_interior;
  for (int v = 0; v < n; ++v) {
    int d = h.degree(v);
    if (d < 2) s.low_degree = true;
    if (d != 2) s.nodes.push_back(v);
  }
  for (int a : s.nodes) {
    for (int first : h.neighbors(a)) {
      int prev = a, cur = first, len = 1;
      while (h.degree(cur) == 2) {
        visited_interior.insert(cur);
        int next = (h.neighbors(cur) - VertexSet::single(prev)).first();
        prev = cur;
        cur = next;
        ++len;
      }
      // Each path is seen from both ends; keep the walk from the smaller
      // (end, last-step) orientation so it is counted once.
      int b = cur;
      if (a < b || (a == b && first < prev)) {
        s.edges.push_back({a, b, len});
        if (a == b) ++s.loops;
      }
    }
  }
  VertexSet deg2;
  for (int v = 0; v < n; ++v) {
    if (h.degree(v) == 2) deg2.insert(v);
  }
  VertexSet rest = deg2 - visited_interior;
  while (!rest.empty()) {
    int v = rest.first();
    VertexSet comp = VertexSet::single(v), frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int w : frontier) next |= h.neighbors(w);
      next = next - comp;
      comp |= next;
      frontier = next;
    }
    ++s.free_cycles;
    rest -= comp;
  }
  return s;
}

}  // namespace tri::detail
