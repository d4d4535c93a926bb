#include "tri/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

#include "suppress.hpp"
#include "tri/freeness.hpp"

namespace tri {

std::array<VertexSet, 5> PrismPieces::pieces() const {
  return {VertexSet{t1[0], t1[1], t1[2]}, VertexSet{t2[0], t2[1], t2[2]},
          branches[0].vertex_set(), branches[1].vertex_set(), branches[2].vertex_set()};
}

std::vector<int> RootGraph::edge_to_vertex() const {
  auto edges = h.edges();
  std::map<Pair, int> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = static_cast<int>(i);
  std::vector<int> out(edges.size(), -1);
  for (std::size_t v = 0; v < vertex_edge.size(); ++v) {
    auto [a, b] = vertex_edge[v];
    out[index.at({std::min(a, b), std::max(a, b)})] = static_cast<int>(v);
  }
  return out;
}

// --- series-parallel -------------------------------------------------------

bool is_series_parallel(const SimpleGraph& h) {
  std::vector<VertexSet> adj(h.size());
  for (int v = 0; v < h.size(); ++v) adj[v] = h.neighbors(v);
  VertexSet alive = VertexSet::range(h.size());
  bool changed = true;
  while (changed && !alive.empty()) {
    changed = false;
    for (int v : alive) {
      if (!alive.contains(v)) continue;
      int d = adj[v].size();
      if (d <= 1) {
        for (int w : adj[v]) adj[w].erase(v);
        adj[v] = {};
        alive.erase(v);
        changed = true;
      } else if (d == 2) {
        int a = adj[v].first();
        int b = (adj[v] - VertexSet::single(a)).first();
        adj[a].erase(v);
        adj[b].erase(v);
        // Inserting into a set merges a parallel edge.
        adj[a].insert(b);
        adj[b].insert(a);
        adj[v] = {};
        alive.erase(v);
        changed = true;
      }
    }
  }
  return alive.empty();
}

bool is_series_parallel(const Trigraph& g) { return is_series_parallel(full_realization(g)); }

// --- complete bipartite ----------------------------------------------------

std::optional<CompleteBipartite> as_complete_bipartite(const Trigraph& g) {
  if (g.null()) return CompleteBipartite{};
  // Two vertices share a side iff strongly anti-adjacent.
  VertexSet a = VertexSet::single(0);
  for (int v = 1; v < g.size(); ++v) {
    if (g.theta(0, v) == Adj::StrongAnti) a.insert(v);
  }
  VertexSet b = g.vertices() - a;
  if (!g.is_strongly_stable(a) || !g.is_strongly_stable(b) || !g.strongly_complete(a, b)) {
    return std::nullopt;
  }
  return CompleteBipartite{{a, b}, a.size() >= 3 && b.size() >= 3};
}

bool is_strong_K33(const Trigraph& g) {
  if (g.size() != 6 || !g.is_graph()) return false;
  auto cb = as_complete_bipartite(g);
  return cb && cb->parts.a.size() == 3 && cb->parts.b.size() == 3;
}

// --- prism -----------------------------------------------------------------

namespace {

std::optional<PrismPieces> prism_from(const Trigraph& g, VertexSet t1, VertexSet t2) {
  PrismPieces p;
  VertexSet covered = t1 | t2;
  VertexSet t2_hit;
  int i = 0;
  for (int x : t1) {
    VertexSet out = g.neighbors(x) - t1;
    if (out.size() != 1) return std::nullopt;
    std::vector<int> order{x};
    int prev = x, cur = out.first();
    while (!t2.contains(cur)) {
      if (covered.contains(cur) || g.degree(cur) != 2) return std::nullopt;
      covered.insert(cur);
      order.push_back(cur);
      int next = (g.neighbors(cur) - VertexSet::single(prev)).first();
      prev = cur;
      cur = next;
    }
    if (t2_hit.contains(cur)) return std::nullopt;
    t2_hit.insert(cur);
    order.push_back(cur);
    p.t1[i] = x;
    p.t2[i] = cur;
    p.branches[i] = NarrowPath{order};
    ++i;
  }
  if (covered != g.vertices()) return std::nullopt;

  // Exact adjacency pattern: triangle pairs strong, consecutive branch pairs
  // adjacent, every other pair strongly anti-adjacent.
  std::set<Pair> allowed;
  for (int k = 0; k < 3; ++k) {
    const auto& o = p.branches[k].order;
    for (std::size_t j = 0; j + 1 < o.size(); ++j) {
      allowed.insert({std::min(o[j], o[j + 1]), std::max(o[j], o[j + 1])});
    }
  }
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) {
      bool tri_pair = (t1.contains(u) && t1.contains(v)) || (t2.contains(u) && t2.contains(v));
      Adj a = g.theta(u, v);
      if (tri_pair) {
        if (a != Adj::Strong) return std::nullopt;
      } else if (allowed.count({u, v})) {
        if (a == Adj::StrongAnti) return std::nullopt;
      } else if (a != Adj::StrongAnti) {
        return std::nullopt;
      }
    }
  }
  auto bs = branch_structure(g);
  for (const auto& branch : p.branches) {
    bool flat = false;
    for (const auto& b : bs.branches) {
      if (b.flat && b.path.vertex_set() == branch.vertex_set()) flat = true;
    }
    if (!flat) return std::nullopt;
  }
  return p;
}

}  // namespace

std::optional<PrismPieces> as_prism(const Trigraph& g) {
  if (g.size() < 6) return std::nullopt;
  auto tris = strong_triangles(g);
  if (tris.size() != 2 || tris[0].intersects(tris[1])) return std::nullopt;
  if (triangles(g).size() != 2) return std::nullopt;
  return prism_from(g, tris[0], tris[1]);
}

std::optional<PrismPieces> as_prism(const Trigraph& g, VertexSet host) {
  Induced sub = induced(g, host);
  auto p = as_prism(sub.graph);
  if (!p) return std::nullopt;
  const auto& m = sub.to_host;
  for (int k = 0; k < 3; ++k) {
    p->t1[k] = m[p->t1[k]];
    p->t2[k] = m[p->t2[k]];
    for (int& v : p->branches[k].order) v = m[v];
  }
  return p;
}

// --- line graphs -----------------------------------------------------------

LineGraph line_graph(const SimpleGraph& h) {
  auto edges = h.edges();
  LineGraph lg{SimpleGraph(static_cast<int>(edges.size())), edges};
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) {
        lg.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return lg;
}

namespace {

/// Krausz partition of one component: cliques covering every edge exactly
/// once with each vertex in at most two of them. The cliques of a start vertex
/// fix everything else, because a vertex's second clique is its neighbourhood
/// minus its first.
class Krausz {
 public:
  Krausz(const SimpleGraph& g, VertexSet comp) : g_(g), comp_(comp) {}

  std::optional<std::vector<VertexSet>> run() {
    if (comp_.size() == 1) return std::vector<VertexSet>{};
    int v = comp_.first();
    for (int w : comp_) {
      if (g_.degree(w) < g_.degree(v)) v = w;
    }
    const auto nb = g_.neighbors(v).to_vector();
    const int d = static_cast<int>(nb.size());
    if (d > 24) throw InputError("line-graph recognition: degree too large");
    // nb[0] always goes to the first clique; mask 0 (single clique) first.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (d - 1)); ++mask) {
      VertexSet s1, s2;
      for (int i = 0; i < d; ++i) {
        if (i > 0 && ((mask >> (i - 1)) & 1U)) {
          s2.insert(nb[i]);
        } else {
          s1.insert(nb[i]);
        }
      }
      if (!g_.trigraph().is_strong_clique(s1) || !g_.trigraph().is_strong_clique(s2)) continue;
      auto result = propagate(v, s1, s2);
      if (result) return result;
    }
    return std::nullopt;
  }

 private:
  std::optional<std::vector<VertexSet>> propagate(int v, VertexSet s1, VertexSet s2) {
    std::vector<VertexSet> cliques;
    std::vector<std::vector<int>> member(g_.size());
    auto add = [&](VertexSet c) -> bool {
      for (std::size_t i = 0; i < cliques.size(); ++i) {
        if (cliques[i] == c) return true;
      }
      int id = static_cast<int>(cliques.size());
      cliques.push_back(c);
      for (int u : c) {
        member[u].push_back(id);
        if (member[u].size() > 2) return false;
      }
      return true;
    };
    if (!add(s1 | VertexSet::single(v))) return std::nullopt;
    if (!s2.empty() && !add(s2 | VertexSet::single(v))) return std::nullopt;
    VertexSet done = VertexSet::single(v);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int u : comp_ - done) {
        if (member[u].empty()) continue;
        VertexSet covered;
        for (int id : member[u]) covered |= cliques[id];
        VertexSet rest = g_.neighbors(u) - covered;
        if (!rest.empty()) {
          if (member[u].size() >= 2) return std::nullopt;
          VertexSet c = rest | VertexSet::single(u);
          if (!g_.trigraph().is_strong_clique(c)) return std::nullopt;
          if (!add(c)) return std::nullopt;
        }
        done.insert(u);
        changed = true;
      }
    }
    if (done != comp_) return std::nullopt;
    // Every edge in exactly one clique.
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      for (std::size_t j = i + 1; j < cliques.size(); ++j) {
        if ((cliques[i] & cliques[j]).size() > 1) return std::nullopt;
      }
    }
    for (int u : comp_) {
      VertexSet covered;
      for (int id : member[u]) covered |= cliques[id];
      if (!(g_.neighbors(u) - covered).empty()) return std::nullopt;
    }
    return cliques;
  }

  const SimpleGraph& g_;
  VertexSet comp_;
};

}  // namespace

bool verify_root(const Trigraph& g, const RootGraph& root) {
  if (static_cast<int>(root.vertex_edge.size()) != g.size()) return false;
  if (root.h.edge_count() != g.size()) return false;
  std::set<Pair> seen;
  for (auto [a, b] : root.vertex_edge) {
    if (a == b || !root.h.adjacent(a, b)) return false;
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) return false;
  }
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) {
      auto [a, b] = root.vertex_edge[u];
      auto [c, d] = root.vertex_edge[v];
      bool share = a == c || a == d || b == c || b == d;
      if (share != g.adjacent(u, v)) return false;
    }
  }
  return true;
}

std::optional<RootGraph> as_line_trigraph(const Trigraph& g) {
  for (auto t : triangles(g)) {
    if (!g.is_strong_clique(t)) return std::nullopt;
  }
  SimpleGraph full = full_realization(g);
  std::vector<std::vector<int>> member(g.size());
  int root_n = 0;
  for (VertexSet comp : components(g)) {
    auto cliques = Krausz(full, comp).run();
    if (!cliques) return std::nullopt;
    for (VertexSet c : *cliques) {
      for (int u : c) member[u].push_back(root_n);
      ++root_n;
    }
  }
  std::vector<Pair> vertex_edge(g.size());
  for (int u = 0; u < g.size(); ++u) {
    // Missing cliques become pendant root vertices.
    while (member[u].size() < 2) member[u].push_back(root_n++);
    vertex_edge[u] = {std::min(member[u][0], member[u][1]), std::max(member[u][0], member[u][1])};
  }
  if (root_n > Trigraph::kMaxVertices) throw InputError("root graph exceeds vertex limit");
  RootGraph root{SimpleGraph(root_n), vertex_edge};
  for (auto [a, b] : vertex_edge) root.h.add_edge(a, b);
  if (!verify_root(g, root)) throw ConsistencyError("line-graph root failed verification");
  return root;
}

// --- connectivity classes ---------------------------------------------------

namespace {

bool has_cycle(const SimpleGraph& h, VertexSet x) {
  if (x.empty()) return false;
  int edges = 0;
  for (int v : x) edges += (h.neighbors(v) & x).size();
  edges /= 2;
  int comps = static_cast<int>(components(h.trigraph(), x).size());
  return edges > x.size() - comps;
}

bool connected_without(const SimpleGraph& h, VertexSet removed) {
  return is_connected(h.trigraph(), h.trigraph().vertices() - removed);
}

}  // namespace

bool is_two_connected(const SimpleGraph& h) {
  if (h.size() < 3 || !is_connected(h.trigraph())) return false;
  for (int v = 0; v < h.size(); ++v) {
    if (!connected_without(h, VertexSet::single(v))) return false;
  }
  return true;
}

bool is_three_connected(const SimpleGraph& h) {
  if (h.size() < 4 || !is_two_connected(h)) return false;
  for (int u = 0; u < h.size(); ++u) {
    for (int v = u + 1; v < h.size(); ++v) {
      if (!connected_without(h, VertexSet{u, v})) return false;
    }
  }
  return true;
}

bool is_cyclically_3_connected(const SimpleGraph& h) {
  if (!is_two_connected(h)) return false;
  bool cycle = true;
  for (int v = 0; v < h.size(); ++v) cycle = cycle && h.degree(v) == 2;
  if (cycle) return false;
  const VertexSet all = h.trigraph().vertices();
  auto cyclic_split = [&](VertexSet s) {
    auto comps = components(h.trigraph(), all - s);
    const int c = static_cast<int>(comps.size());
    if (c < 2) return false;
    // Sides are unions of whole components; comps[0] stays on side A.
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << (c - 1)); ++mask) {
      VertexSet a = s | comps[0], b = s;
      for (int i = 1; i < c; ++i) {
        if ((mask >> (i - 1)) & 1U) {
          a |= comps[i];
        } else {
          b |= comps[i];
        }
      }
      if (has_cycle(h, a) && has_cycle(h, b)) return true;
    }
    return false;
  };
  for (int u = 0; u < h.size(); ++u) {
    for (int v = u + 1; v < h.size(); ++v) {
      if (cyclic_split(VertexSet{u, v})) return false;
    }
  }
  // Separators of size 0 or 1 do not exist in a 2-connected graph.
  return true;
}

bool is_theta(const SimpleGraph& h) {
  if (!is_connected(h.trigraph())) return false;
  int branch = 0;
  for (int v = 0; v < h.size(); ++v) {
    int d = h.degree(v);
    if (d == 3) {
      ++branch;
    } else if (d != 2) {
      return false;
    }
  }
  if (branch != 2) return false;
  auto s = detail::suppress_degree_two(h);
  if (s.loops != 0 || s.edges.size() != 3) return false;
  return std::all_of(s.edges.begin(), s.edges.end(),
                     [](const auto& e) { return e.a != e.b && e.length >= 2; });
}

bool is_subdivision_of_3connected(const SimpleGraph& h) {
  if (!is_connected(h.trigraph())) return false;
  auto s = detail::suppress_degree_two(h);
  if (s.low_degree || s.loops != 0 || s.free_cycles != 0 || s.nodes.size() < 4) return false;
  std::map<int, int> index;
  for (std::size_t i = 0; i < s.nodes.size(); ++i) index[s.nodes[i]] = static_cast<int>(i);
  SimpleGraph core(static_cast<int>(s.nodes.size()));
  for (const auto& e : s.edges) {
    int a = index.at(e.a), b = index.at(e.b);
    if (core.adjacent(a, b)) return false;  // parallel paths
    core.add_edge(a, b);
  }
  return is_three_connected(core);
}

RootQualification qualify_root(const SimpleGraph& h) {
  RootQualification q;
  q.chordless = is_chordless(h);
  q.cyclically_3_connected = is_cyclically_3_connected(h);
  q.max_degree_3 = true;
  for (int v = 0; v < h.size(); ++v) q.max_degree_3 = q.max_degree_3 && h.degree(v) <= 3;
  return q;
}

std::string format_root(const RootGraph& root) {
  nlohmann::json j;
  j["vertices"] = root.h.size();
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : root.h.edges()) j["edges"].push_back({a, b});
  j["vertex_edge"] = nlohmann::json::array();
  for (auto [a, b] : root.vertex_edge) j["vertex_edge"].push_back({a, b});
  return j.dump();
}

}  // namespace tri
