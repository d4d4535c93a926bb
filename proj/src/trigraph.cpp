#include "tri/trigraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace tri {

char adj_symbol(Adj a) {
  switch (a) {
    case Adj::Strong:
      return '+';
    case Adj::Semi:
      return '0';
    case Adj::StrongAnti:
      return '-';
  }
  return '?';
}

Trigraph::Trigraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("trigraph size " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxVertices));
  }
  theta_.assign(pair_count(n), static_cast<std::int8_t>(Adj::StrongAnti));
  adj_.assign(n, VertexSet{});
  strong_.assign(n, VertexSet{});
}

std::size_t Trigraph::rank(int u, int v) const {
  if (u > v) std::swap(u, v);
  // Row u holds pairs (u, u+1..n-1); rows before it hold sum_{i<u} (n-1-i).
  return static_cast<std::size_t>(u) * (2 * n_ - u - 1) / 2 + (v - u - 1);
}

void Trigraph::set(int u, int v, Adj value) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InputError("invalid pair " + std::to_string(u) + " " + std::to_string(v));
  }
  theta_[rank(u, v)] = static_cast<std::int8_t>(value);
  if (value == Adj::StrongAnti) {
    adj_[u].erase(v);
    adj_[v].erase(u);
  } else {
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
  if (value == Adj::Strong) {
    strong_[u].insert(v);
    strong_[v].insert(u);
  } else {
    strong_[u].erase(v);
    strong_[v].erase(u);
  }
}

std::vector<Pair> Trigraph::semi_pairs() const {
  std::vector<Pair> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : semi_neighbors(u)) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

int Trigraph::semi_count() const {
  int c = 0;
  for (auto t : theta_) c += (t == 0);
  return c;
}

bool Trigraph::is_clique(VertexSet s) const {
  for (int v : s) {
    if (!(s - VertexSet::single(v)).subset_of(adj_[v])) return false;
  }
  return true;
}

bool Trigraph::is_strong_clique(VertexSet s) const {
  for (int v : s) {
    if (!(s - VertexSet::single(v)).subset_of(strong_[v])) return false;
  }
  return true;
}

bool Trigraph::is_stable(VertexSet s) const {
  for (int v : s) {
    if (strong_[v].intersects(s)) return false;
  }
  return true;
}

bool Trigraph::is_strongly_stable(VertexSet s) const {
  for (int v : s) {
    if (adj_[v].intersects(s)) return false;
  }
  return true;
}

bool Trigraph::strongly_anticomplete(VertexSet a, VertexSet b) const {
  for (int v : a) {
    if (adj_[v].intersects(b)) return false;
  }
  return true;
}

bool Trigraph::strongly_complete(VertexSet a, VertexSet b) const {
  for (int v : a) {
    if (!(b - VertexSet::single(v)).subset_of(strong_[v])) return false;
  }
  return true;
}

SimpleGraph::SimpleGraph(Trigraph t) : t_(std::move(t)) {
  if (!t_.is_graph()) throw InputError("graph has semi-adjacent pairs");
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<Pair>& edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::vector<Pair> SimpleGraph::edges() const {
  std::vector<Pair> out;
  for (int u = 0; u < size(); ++u) {
    for (int v : neighbors(u)) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

int SimpleGraph::edge_count() const {
  int c = 0;
  for (int u = 0; u < size(); ++u) c += degree(u);
  return c / 2;
}

VertexSet NarrowPath::interior() const {
  VertexSet s;
  for (std::size_t i = 1; i + 1 < order.size(); ++i) s.insert(order[i]);
  return s;
}

bool is_narrow_path(const Trigraph& g, const std::vector<int>& order) {
  if (order.empty()) return false;
  VertexSet seen;
  for (int v : order) {
    if (v < 0 || v >= g.size() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      bool ok = (j == i + 1) ? g.adjacent(order[i], order[j])
                             : g.strongly_anti_adjacent(order[i], order[j]);
      if (!ok) return false;
    }
  }
  return true;
}

bool is_narrow_path_trigraph(const Trigraph& g) {
  if (g.null() || !is_connected(g)) return false;
  int edges = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (g.degree(v) > 2) return false;
    edges += g.degree(v);
  }
  return edges / 2 == g.size() - 1;
}

Trigraph complement(const Trigraph& g) {
  Trigraph out(g.size());
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) out.set(u, v, negate(g.theta(u, v)));
  }
  return out;
}

Induced induced(const Trigraph& g, VertexSet x) {
  if (!x.subset_of(g.vertices())) throw InputError("induced: vertex outside trigraph");
  Induced out{Trigraph(x.size()), x.to_vector()};
  const auto& m = out.to_host;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      Adj a = g.theta(m[i], m[j]);
      if (a != Adj::StrongAnti) out.graph.set(static_cast<int>(i), static_cast<int>(j), a);
    }
  }
  return out;
}

Induced induced(const Trigraph& g, const std::vector<int>& x) {
  for (int v : x) {
    if (v < 0 || v >= g.size()) throw InputError("induced: unknown vertex " + std::to_string(v));
  }
  return induced(g, VertexSet(x));
}

Trigraph delete_vertices(const Trigraph& g, VertexSet x) {
  return induced(g, g.vertices() - x).graph;
}

namespace {

SimpleGraph decide_all(const Trigraph& g, Adj semi_value) {
  Trigraph t = g;
  for (auto [u, v] : g.semi_pairs()) t.set(u, v, semi_value);
  return SimpleGraph(std::move(t));
}

}  // namespace

SimpleGraph full_realization(const Trigraph& g) { return decide_all(g, Adj::Strong); }
SimpleGraph null_realization(const Trigraph& g) { return decide_all(g, Adj::StrongAnti); }

SimpleGraph realization(const Trigraph& g, const std::vector<Pair>& semi, std::uint64_t decisions) {
  Trigraph t = g;
  for (std::size_t i = 0; i < semi.size(); ++i) {
    bool edge = (decisions >> i) & 1U;
    t.set(semi[i].first, semi[i].second, edge ? Adj::Strong : Adj::StrongAnti);
  }
  return SimpleGraph(std::move(t));
}

void for_each_realization(const Trigraph& g,
                          const std::function<bool(const SimpleGraph&, std::uint64_t)>& visit) {
  RealizationStream stream(g);
  for (std::uint64_t d = 0; d < stream.total(); ++d) {
    auto r = stream.next();
    if (!visit(*r, d)) return;
  }
}

RealizationStream::RealizationStream(const Trigraph& g) : g_(g), semi_(g.semi_pairs()) {
  if (semi_.size() > 40) throw InputError("too many semi-adjacent pairs to enumerate realizations");
  total_ = std::uint64_t{1} << semi_.size();
}

std::optional<SimpleGraph> RealizationStream::next() {
  if (next_ >= total_) return std::nullopt;
  return realization(g_, semi_, next_++);
}

std::vector<VertexSet> components(const Trigraph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next = (next & left) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

std::vector<VertexSet> components(const Trigraph& g) { return components(g, g.vertices()); }

bool is_connected(const Trigraph& g, VertexSet within) {
  if (within.empty()) return false;
  VertexSet comp = VertexSet::single(within.first());
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & within) - comp;
    comp |= next;
    frontier = next;
  }
  return comp == within;
}

bool is_connected(const Trigraph& g) { return is_connected(g, g.vertices()); }

std::optional<NarrowPath> find_narrow_path(const Trigraph& g, int a, int b, VertexSet within) {
  if (!within.contains(a) || !within.contains(b)) return std::nullopt;
  std::vector<int> parent(g.size(), -1);
  VertexSet seen = VertexSet::single(a);
  std::deque<int> queue{a};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == b) break;
    // Ascending neighbour order keeps the chosen path deterministic.
    for (int w : (g.neighbors(u) & within) - seen) {
      seen.insert(w);
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (!seen.contains(b)) return std::nullopt;
  NarrowPath p;
  for (int v = b; v != -1; v = parent[v]) p.order.push_back(v);
  std::reverse(p.order.begin(), p.order.end());
  return p;
}

std::optional<NarrowPath> find_narrow_path(const Trigraph& g, int a, int b) {
  return find_narrow_path(g, a, b, g.vertices());
}

std::vector<VertexSet> triangles(const Trigraph& g) {
  std::vector<VertexSet> out;
  for (int u = 0; u < g.size(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      for (int w : g.neighbors(u) & g.neighbors(v)) {
        if (w > v) out.push_back(VertexSet{u, v, w});
      }
    }
  }
  return out;
}

std::vector<VertexSet> strong_triangles(const Trigraph& g) {
  std::vector<VertexSet> out;
  for (auto t : triangles(g)) {
    if (g.is_strong_clique(t)) out.push_back(t);
  }
  return out;
}

std::vector<NarrowPath> BranchStructure::flat_branches() const {
  std::vector<NarrowPath> out;
  for (const auto& b : branches) {
    if (b.flat) out.push_back(b.path);
  }
  return out;
}

BranchStructure branch_structure(const Trigraph& g) {
  BranchStructure bs;
  for (int v = 0; v < g.size(); ++v) {
    if (g.degree(v) >= 3) bs.branch_vertices.insert(v);
  }
  // A pair lies in a triangle iff its endpoints have a common neighbour.
  auto in_triangle = [&](int u, int v) {
    return g.adjacent(u, v) && (g.neighbors(u) & g.neighbors(v)).size() > 0;
  };
  for (int start : bs.branch_vertices) {
    for (int first : g.neighbors(start)) {
      std::vector<int> order{start, first};
      int prev = start, cur = first;
      bool ok = true;
      // Interior vertices have degree exactly two, so the walk is forced.
      while (!bs.branch_vertices.contains(cur)) {
        if (g.degree(cur) != 2) {
          ok = false;
          break;
        }
        int next = (g.neighbors(cur) - VertexSet::single(prev)).first();
        if (next == start) {
          ok = false;
          break;
        }
        order.push_back(next);
        prev = cur;
        cur = next;
      }
      if (!ok || cur == start || cur < start) continue;
      if (!is_narrow_path(g, order)) continue;
      Branch b{NarrowPath{order}, true};
      for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        if (in_triangle(order[i], order[i + 1])) b.flat = false;
      }
      bs.branches.push_back(std::move(b));
    }
  }
  std::sort(bs.branches.begin(), bs.branches.end(),
            [](const Branch& x, const Branch& y) { return x.path.order < y.path.order; });
  return bs;
}

}  // namespace tri
