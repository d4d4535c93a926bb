#include "tri/oracles.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <vector>

namespace tri::oracle {

namespace {

std::vector<std::vector<int>> adjacency_lists(const SimpleGraph& h) {
  std::vector<std::vector<int>> adj(h.size());
  for (auto [u, v] : h.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

SimpleGraph induced_graph(const SimpleGraph& h, const std::vector<int>& xs) {
  SimpleGraph out(static_cast<int>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (h.adjacent(xs[i], xs[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

}  // namespace

bool connected_by_search(const Trigraph& g, VertexSet within) {
  std::vector<int> vs = within.to_vector();
  if (vs.empty()) return false;
  std::vector<bool> seen(g.size(), false);
  std::vector<int> stack{vs[0]};
  seen[vs[0]] = true;
  int reached = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : vs) {
      if (!seen[w] && g.theta(u, w) != Adj::StrongAnti) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return reached == static_cast<int>(vs.size());
}

bool induces_K4_subdivision(const SimpleGraph& h) {
  const int n = h.size();
  auto adj = adjacency_lists(h);
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    int d = static_cast<int>(adj[v].size());
    if (d == 3) {
      branch.push_back(v);
    } else if (d != 2) {
      return false;
    }
  }
  if (branch.size() != 4) return false;
  if (!connected_by_search(h.trigraph(), VertexSet::range(n))) return false;
  auto index = [&](int v) {
    auto it = std::find(branch.begin(), branch.end(), v);
    return it == branch.end() ? -1 : static_cast<int>(it - branch.begin());
  };
  std::multiset<std::pair<int, int>> links;
  // Direct edges between branch vertices.
  for (auto [u, v] : h.edges()) {
    int a = index(u), b = index(v);
    if (a >= 0 && b >= 0) links.insert({std::min(a, b), std::max(a, b)});
  }
  // Components of the degree-2 vertices; each is a path touching branch
  // vertices at its two ends.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (index(s) >= 0 || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    std::vector<int> touch;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u]) {
        if (index(w) >= 0) {
          touch.push_back(index(w));
        } else if (comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
    if (touch.size() != 2 || touch[0] == touch[1]) return false;
    links.insert({std::min(touch[0], touch[1]), std::max(touch[0], touch[1])});
  }
  std::multiset<std::pair<int, int>> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return links == k4;
}

bool is_wheel(const SimpleGraph& h, int min_rim) {
  const int n = h.size();
  if (n < min_rim + 1) return false;
  for (int hub = 0; hub < n; ++hub) {
    std::vector<int> rim;
    for (int v = 0; v < n; ++v) {
      if (v != hub) rim.push_back(v);
    }
    SimpleGraph r = induced_graph(h, rim);
    bool cycle = true;
    for (int v = 0; v < r.size(); ++v) cycle = cycle && r.degree(v) == 2;
    if (!cycle || !connected_by_search(r.trigraph(), VertexSet::range(r.size()))) continue;
    if (h.degree(hub) >= 3) return true;
  }
  return false;
}

namespace {

bool subset_has(const SimpleGraph& sub, Pattern p, int min_rim) {
  const int n = sub.size();
  const int m = sub.edge_count();
  switch (p) {
    case Pattern::ISK4:
      return induces_K4_subdivision(sub);
    case Pattern::Wheel:
      return is_wheel(sub, min_rim);
    case Pattern::Diamond:
      return n == 4 && m == 5;
    case Pattern::K4:
      return n == 4 && m == 6;
    case Pattern::K33: {
      if (n != 6 || m != 9) return false;
      for (int v = 0; v < n; ++v) {
        if (sub.degree(v) != 3) return false;
      }
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          for (int c = b + 1; c < n; ++c) {
            if (sub.adjacent(a, b) && sub.adjacent(b, c) && sub.adjacent(a, c)) return false;
          }
        }
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool contains_pattern(const Trigraph& g, Pattern p, int min_rim) {
  if (g.size() > 20) throw InputError("oracle: trigraph too large");
  bool found = false;
  for_each_realization(g, [&](const SimpleGraph& r, std::uint64_t) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.size()) && !found; ++mask) {
      std::vector<int> xs;
      for (int v = 0; v < g.size(); ++v) {
        if ((mask >> v) & 1U) xs.push_back(v);
      }
      found = subset_has(induced_graph(r, xs), p, min_rim);
    }
    return !found;
  });
  return found;
}

bool has_K4_subdivision_subgraph(const SimpleGraph& h) {
  const int n = h.size();
  if (n > 12) throw InputError("oracle: graph too large");
  auto adj = adjacency_lists(h);
  static constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  std::array<int, 4> b{};
  std::vector<bool> used(n, false);

  // Route path k and the remaining ones through unused vertices.
  std::function<bool(int)> route = [&](int k) -> bool {
    if (k == 6) return true;
    const int from = b[kPairs[k][0]], to = b[kPairs[k][1]];
    std::function<bool(int)> extend = [&](int u) -> bool {
      for (int w : adj[u]) {
        if (w == to) {
          if (route(k + 1)) return true;
          continue;
        }
        if (used[w]) continue;
        used[w] = true;
        if (extend(w)) return true;
        used[w] = false;
      }
      return false;
    };
    return extend(from);
  };

  for (b[0] = 0; b[0] < n; ++b[0]) {
    for (b[1] = b[0] + 1; b[1] < n; ++b[1]) {
      for (b[2] = b[1] + 1; b[2] < n; ++b[2]) {
        for (b[3] = b[2] + 1; b[3] < n; ++b[3]) {
          bool degree_ok = true;
          for (int x : b) degree_ok = degree_ok && adj[x].size() >= 3;
          if (!degree_ok) continue;
          std::fill(used.begin(), used.end(), false);
          for (int x : b) used[x] = true;
          if (route(0)) return true;
        }
      }
    }
  }
  return false;
}

BipartitionCheck brute_force_bipartition(const Trigraph& g) {
  BipartitionCheck out;
  const int n = g.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    int na = 0;
    for (int u = 0; u < n && ok; ++u) {
      bool au = (mask >> u) & 1U;
      na += au;
      for (int v = u + 1; v < n && ok; ++v) {
        bool av = (mask >> v) & 1U;
        Adj want = au == av ? Adj::StrongAnti : Adj::Strong;
        ok = g.theta(u, v) == want;
      }
    }
    if (!ok) continue;
    out.exists = true;
    if (na >= 3 && n - na >= 3) out.thick = true;
  }
  return out;
}

bool chordless_by_cycles(const SimpleGraph& h) {
  const int n = h.size();
  auto adj = adjacency_lists(h);
  std::vector<int> path;
  std::vector<bool> on(n, false);
  bool ok = true;
  // Cycles with smallest vertex s, found as paths from s back to s.
  std::function<void(int, int)> walk = [&](int s, int u) {
    for (int w : adj[u]) {
      if (!ok) return;
      if (w == s && path.size() >= 3) {
        int edges = 0;
        for (std::size_t i = 0; i < path.size(); ++i) {
          for (std::size_t j = i + 1; j < path.size(); ++j) edges += h.adjacent(path[i], path[j]);
        }
        if (edges != static_cast<int>(path.size())) ok = false;
        continue;
      }
      if (w <= s || on[w]) continue;
      on[w] = true;
      path.push_back(w);
      walk(s, w);
      path.pop_back();
      on[w] = false;
    }
  };
  for (int s = 0; s < n && ok; ++s) {
    path = {s};
    on[s] = true;
    walk(s, s);
    on[s] = false;
  }
  return ok;
}

}  // namespace tri::oracle
