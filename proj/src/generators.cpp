#include "tri/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "tri/structure.hpp"

namespace tri {

namespace {

struct CodeHash {
  std::size_t operator()(const CanonicalCode& c) const {
    std::size_t h = 1469598103934665603ULL;
    for (std::int8_t x : c) h = (h ^ static_cast<std::uint8_t>(x)) * 1099511628211ULL;
    return h;
  }
};

// Vertex colour: (strong degree, semi degree), refined once by the multiset
// of (value, colour) over the other vertices.
std::vector<int> vertex_cells(const Trigraph& g) {
  const int n = g.size();
  std::vector<std::pair<int, int>> base(n);
  for (int v = 0; v < n; ++v) base[v] = {g.strong_neighbors(v).size(), g.semi_neighbors(v).size()};
  std::vector<std::vector<int>> sig(n);
  for (int v = 0; v < n; ++v) {
    sig[v] = {base[v].first, base[v].second};
    std::vector<int> around;
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      around.push_back((static_cast<int>(g.theta(v, w)) + 1) * 10000 + base[w].first * 100 + base[w].second);
    }
    std::sort(around.begin(), around.end());
    sig[v].insert(sig[v].end(), around.begin(), around.end());
  }
  std::vector<std::vector<int>> distinct = sig;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> cell(n);
  for (int v = 0; v < n; ++v) {
    cell[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
  }
  return cell;
}

class Canonizer {
 public:
  explicit Canonizer(const Trigraph& g) : g_(g), n_(g.size()), cell_(vertex_cells(g)) {
    slot_cell_ = cell_;
    std::sort(slot_cell_.begin(), slot_cell_.end());
    order_.resize(n_);
    current_.reserve(Trigraph::pair_count(n_));
  }

  CanonicalCode run() {
    used_ = VertexSet{};
    search(0, false);
    CanonicalCode out;
    out.push_back(static_cast<std::int8_t>(n_));
    out.insert(out.end(), best_.begin(), best_.end());
    return out;
  }

 private:
  // Position k contributes theta(order[j], order[k]) for j < k.
  // Returns true if best_ changed. The stacked prefix then equals the new
  // best, so callers compare afresh.
  bool search(int k, bool below) {
    if (k == n_) {
      if (have_best_ && !below) return false;
      best_ = current_;
      have_best_ = true;
      return true;
    }
    bool updated = false;
    for (int v = 0; v < n_; ++v) {
      if (used_.contains(v) || cell_[v] != slot_cell_[k]) continue;
      const std::size_t mark = current_.size();
      bool now_below = below;
      bool prune = false;
      for (int j = 0; j < k; ++j) {
        std::int8_t x = static_cast<std::int8_t>(g_.theta(order_[j], v));
        current_.push_back(x);
        if (have_best_ && !now_below) {
          std::int8_t b = best_[current_.size() - 1];
          if (x > b) {
            prune = true;
            break;
          }
          if (x < b) now_below = true;
        }
      }
      if (!prune) {
        order_[k] = v;
        used_.insert(v);
        if (search(k + 1, now_below)) {
          updated = true;
          below = false;
        }
        used_.erase(v);
      }
      current_.resize(mark);
    }
    return updated;
  }

  const Trigraph& g_;
  int n_;
  std::vector<int> cell_;
  std::vector<int> slot_cell_;
  std::vector<int> order_;
  VertexSet used_;
  std::vector<std::int8_t> current_;
  std::vector<std::int8_t> best_;
  bool have_best_ = false;
};

Trigraph from_digits(int n, const std::vector<int>& digits) {
  Trigraph g(n);
  std::size_t i = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.set(u, v, static_cast<Adj>(digits[i++] - 1));
  }
  return g;
}

bool increment(std::vector<int>& digits) {
  for (int& d : digits) {
    if (++d < 3) return true;
    d = 0;
  }
  return false;
}

}  // namespace

CanonicalCode canonical_code(const Trigraph& g) {
  if (g.size() > 16) throw InputError("canonical_code: too many vertices");
  return Canonizer(g).run();
}

bool isomorphic(const Trigraph& a, const Trigraph& b) {
  return a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

Trigraph permute(const Trigraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.size()) throw InputError("permute: wrong permutation size");
  Trigraph out(g.size());
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) out.set(perm[u], perm[v], g.theta(u, v));
  }
  return out;
}

void for_each_trigraph(int n, bool modulo_iso, const std::function<bool(const Trigraph&)>& visit) {
  if (n < 0) throw InputError("enumeration: negative vertex count");
  if (modulo_iso) {
    if (n > kIsoEnumerationBound) {
      throw InputError("enumeration modulo isomorphism supports n <= " + std::to_string(kIsoEnumerationBound));
    }
    for (const Trigraph& g : trigraph_classes(n)) {
      if (!visit(g)) return;
    }
    return;
  }
  if (n > kLabeledEnumerationBound) {
    throw InputError("labeled enumeration supports n <= " + std::to_string(kLabeledEnumerationBound));
  }
  std::vector<int> digits(Trigraph::pair_count(n), 0);
  do {
    if (!visit(from_digits(n, digits))) return;
  } while (increment(digits));
}

std::vector<Trigraph> trigraph_classes(int n) {
  if (n < 0 || n > kIsoEnumerationBound) throw InputError("trigraph_classes: unsupported n");
  std::vector<Trigraph> reps{Trigraph(0)};
  for (int k = 1; k <= n; ++k) {
    std::vector<Trigraph> next;
    std::unordered_set<CanonicalCode, CodeHash> seen;
    for (const Trigraph& small : reps) {
      std::vector<int> digits(k - 1, 0);
      do {
        Trigraph g(k);
        for (int u = 0; u < k - 1; ++u) {
          for (int v = u + 1; v < k - 1; ++v) g.set(u, v, small.theta(u, v));
          g.set(u, k - 1, static_cast<Adj>(digits[u] - 1));
        }
        if (seen.insert(canonical_code(g)).second) next.push_back(std::move(g));
      } while (increment(digits));
    }
    reps = std::move(next);
  }
  return reps;
}

std::uint64_t count_classes_brute_force(int n) {
  // Burnside: average over permutations of 3^(orbits on pairs).
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t total = 0, perms = 0;
  do {
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    int orbits = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (seen[u][v]) continue;
        ++orbits;
        int a = u, b = v;
        while (!seen[std::min(a, b)][std::max(a, b)]) {
          seen[std::min(a, b)][std::max(a, b)] = true;
          a = perm[a];
          b = perm[b];
        }
      }
    }
    std::uint64_t p = 1;
    for (int i = 0; i < orbits; ++i) p *= 3;
    total += p;
    ++perms;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / perms;
}

SimpleGraph subdivide(const SimpleGraph& h, const std::vector<int>& counts) {
  auto edges = h.edges();
  if (counts.size() != edges.size()) throw InputError("subdivide: one count per edge required");
  int n = h.size();
  for (int c : counts) {
    if (c < 0) throw InputError("subdivide: negative count");
    n += c;
  }
  if (n > Trigraph::kMaxVertices) throw InputError("subdivide: too many vertices");
  std::vector<Pair> out;
  int next = h.size();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int prev = edges[i].first;
    for (int j = 0; j < counts[i]; ++j) {
      out.push_back({prev, next});
      prev = next++;
    }
    out.push_back({prev, edges[i].second});
  }
  return SimpleGraph::from_edges(n, out);
}

SimpleGraph theta_graph(int l1, int l2, int l3) {
  for (int l : {l1, l2, l3}) {
    if (l < 2) throw InputError("theta: path lengths must be at least 2");
  }
  std::vector<Pair> edges;
  int next = 2;
  for (int l : {l1, l2, l3}) {
    int prev = 0;
    for (int j = 0; j < l - 1; ++j) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 1});
  }
  return SimpleGraph::from_edges(next, edges);
}

SimpleGraph k4_subdivision(const std::array<int, 6>& counts) {
  SimpleGraph k4 = SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  return subdivide(k4, std::vector<int>(counts.begin(), counts.end()));
}

Trigraph line_trigraph_of(const SimpleGraph& h) { return line_graph(h).graph.trigraph(); }

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

void require_count(const std::string& name, const FamilyParams& p, std::size_t k) {
  require(p.values.size() == k, name + ": expected " + std::to_string(k) + " parameters");
}

Trigraph prism(int l1, int l2, int l3) {
  require(l1 >= 1 && l2 >= 1 && l3 >= 1, "prism: branch lengths must be at least 1");
  std::vector<Pair> edges{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
  int next = 6;
  const std::array<int, 3> len{l1, l2, l3};
  for (int i = 0; i < 3; ++i) {
    int prev = i;
    for (int j = 0; j < len[i] - 1; ++j) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 3 + i});
  }
  return SimpleGraph::from_edges(next, edges).trigraph();
}

Trigraph long_rich_square(const std::vector<int>& lengths, const std::vector<int>& orient) {
  require(lengths.size() >= 2, "long-rich-square: at least two links");
  require(orient.empty() || orient.size() == lengths.size(), "long-rich-square: one orientation per link");
  std::vector<Pair> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  int next = 4;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    require(lengths[i] >= 1, "long-rich-square: link lengths must be at least 1");
    int o = orient.empty() ? 0 : orient[i];
    require(o == 0 || o == 1, "long-rich-square: orientation must be 0 or 1");
    const int first = next;
    for (int j = 0; j < lengths[i]; ++j) edges.push_back({next + j, next + j + 1});
    const int last = next + lengths[i];
    next = last + 1;
    if (o == 0) {
      edges.insert(edges.end(), {{0, first}, {1, first}, {2, last}, {3, last}});
    } else {
      edges.insert(edges.end(), {{1, first}, {2, first}, {3, last}, {0, last}});
    }
  }
  return SimpleGraph::from_edges(next, edges).trigraph();
}

Trigraph complete_bipartite(int s, int t) {
  require(s >= 1 && t >= 1, "complete-bipartite: both sides need at least one vertex");
  Trigraph g(s + t);
  for (int a = 0; a < s; ++a) {
    for (int b = s; b < s + t; ++b) g.set(a, b, Adj::Strong);
  }
  return g;
}

std::array<int, 6> six(const std::string& name, const FamilyParams& p, int min) {
  require_count(name, p, 6);
  std::array<int, 6> c{};
  for (int i = 0; i < 6; ++i) {
    require(p.values[i] >= min, name + ": subdivision counts must be at least " + std::to_string(min));
    c[i] = p.values[i];
  }
  return c;
}

Trigraph build_family(const std::string& name, const FamilyParams& p) {
  const auto& v = p.values;
  if (name == "prism") {
    require_count(name, p, 3);
    return prism(v[0], v[1], v[2]);
  }
  if (name == "theta") {
    require_count(name, p, 3);
    return theta_graph(v[0], v[1], v[2]).trigraph();
  }
  if (name == "k33") {
    require_count(name, p, 0);
    return complete_bipartite(3, 3);
  }
  if (name == "complete-bipartite") {
    require_count(name, p, 2);
    return complete_bipartite(v[0], v[1]);
  }
  if (name == "long-rich-square") return long_rich_square(v, p.orient);
  if (name == "k4-subdivision") return k4_subdivision(six(name, p, 0)).trigraph();
  if (name == "line-k4-subdivision") return line_trigraph_of(k4_subdivision(six(name, p, 1)));
  if (name == "cycle" || name == "complete" || name == "path") {
    require_count(name, p, 1);
    const int n = v[0];
    require(n >= (name == "cycle" ? 3 : 1), name + ": too few vertices");
    Trigraph g(n);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        bool edge = name == "complete" || b == a + 1 || (name == "cycle" && a == 0 && b == n - 1);
        if (edge) g.set(a, b, Adj::Strong);
      }
    }
    return g;
  }
  throw InputError("unknown family: " + name);
}

}  // namespace

std::vector<std::string> family_names() {
  return {"prism",          "theta",
          "k33",            "complete-bipartite",
          "long-rich-square", "k4-subdivision",
          "line-k4-subdivision", "cycle",
          "complete",       "path"};
}

Trigraph make_family(const std::string& name, const FamilyParams& params) {
  for (int x : params.values) require(x <= Trigraph::kMaxVertices, name + ": parameter too large");
  Trigraph g = build_family(name, params);
  for (auto [a, b] : params.semi) {
    require(a >= 0 && b >= 0 && a < g.size() && b < g.size() && a != b, name + ": bad semi-adjacent pair");
    g.set(a, b, Adj::Semi);
  }
  return g;
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(unit(rng) * (hi - lo + 1));
}

Trigraph random_trigraph(int n, double p_plus, double p_zero, std::uint64_t seed) {
  if (n < 0 || n > Trigraph::kMaxVertices) throw InputError("random_trigraph: bad vertex count");
  if (p_plus < 0 || p_zero < 0 || p_plus + p_zero > 1 + 1e-12) {
    throw InputError("random_trigraph: probabilities must be non-negative and sum to at most 1");
  }
  std::mt19937_64 rng(seed);
  Trigraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      double x = unit(rng);
      if (x < p_plus) {
        g.set(u, v, Adj::Strong);
      } else if (x < p_plus + p_zero) {
        g.set(u, v, Adj::Semi);
      }
    }
  }
  return g;
}

std::optional<Trigraph> random_free_trigraph(int n, const std::vector<Pattern>& patterns,
                                             std::uint64_t seed, RandomFreeOptions opts) {
  if (opts.max_attempts < 1) throw InputError("random_free_trigraph: max_attempts must be positive");
  std::mt19937_64 seeds(seed);
  for (int i = 0; i < opts.max_attempts; ++i) {
    Trigraph g = random_trigraph(n, opts.p_plus, opts.p_zero, seeds());
    if (is_free(g, patterns)) return g;
  }
  return std::nullopt;
}

SimpleGraph random_qualified_root(std::mt19937_64& rng, int max_sub, int max_edges) {
  struct Base {
    SimpleGraph graph;
    bool theta;
  };
  static const std::vector<Base> bases = {
      {SimpleGraph::from_edges(2, {}), true},
      {SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), false},
      {SimpleGraph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}),
       false},
      {SimpleGraph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}}),
       false},
      {SimpleGraph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7},
                                   {0, 4}, {1, 5}, {2, 6}, {3, 7}}),
       false},
  };
  if (max_sub < 1) throw InputError("random_qualified_root: max_sub must be positive");
  std::vector<int> usable;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    int base_edges = bases[i].theta ? 3 : bases[i].graph.edge_count();
    if (2 * base_edges <= max_edges) usable.push_back(static_cast<int>(i));
  }
  if (usable.empty()) throw InputError("random_qualified_root: max_edges too small");
  const Base& b = bases[usable[uniform_int(rng, 0, static_cast<int>(usable.size()) - 1)]];
  const int m = b.theta ? 3 : b.graph.edge_count();
  std::vector<int> counts(m);
  for (int& c : counts) c = uniform_int(rng, 1, max_sub);
  auto total = [&] { return m + std::accumulate(counts.begin(), counts.end(), 0); };
  while (total() > max_edges) {
    int i = uniform_int(rng, 0, m - 1);
    if (counts[i] > 1) --counts[i];
  }
  if (b.theta) return theta_graph(counts[0] + 1, counts[1] + 1, counts[2] + 1);
  return subdivide(b.graph, counts);
}

Trigraph grow_free_instance(const Trigraph& base, int n_extra, const std::vector<Pattern>& patterns,
                            std::uint64_t seed) {
  if (n_extra < 0) throw InputError("grow_free_instance: negative growth");
  if (base.size() + n_extra > Trigraph::kMaxVertices) throw InputError("grow_free_instance: too many vertices");
  constexpr int kAttemptsPerVertex = 12;
  std::mt19937_64 rng(seed);
  Trigraph g = base;
  for (int step = 0; step < n_extra; ++step) {
    const int n = g.size();
    for (int attempt = 0; attempt < kAttemptsPerVertex; ++attempt) {
      Trigraph h(n + 1);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) h.set(u, v, g.theta(u, v));
      }
      std::vector<Pair> adjacent_pairs;
      for (int x = 0; x < n; ++x) {
        for (int y : g.neighbors(x)) {
          if (x < y) adjacent_pairs.push_back({x, y});
        }
      }
      std::vector<Pair> bare_pairs;  // adjacent pairs in no triangle
      for (auto [x, y] : adjacent_pairs) {
        if (!(g.neighbors(x) & g.neighbors(y)).intersects(g.vertices())) bare_pairs.push_back({x, y});
      }
      auto random_pair = [&] {
        const auto& from = !bare_pairs.empty() && unit(rng) < 0.75 ? bare_pairs : adjacent_pairs;
        return from[uniform_int(rng, 0, static_cast<int>(from.size()) - 1)];
      };
      VertexSet chosen;
      if (n > base.size() && unit(rng) < 0.5) {
        // Extend a path from the newest vertex, often closing a triangle on
        // an adjacent pair at the same time.
        chosen.insert(n - 1);
        const double r = unit(rng);
        if (r < 0.6 && !adjacent_pairs.empty()) {
          auto [x, y] = random_pair();
          chosen |= VertexSet{x, y};
        } else if (r < 0.85) {
          chosen.insert(uniform_int(rng, 0, n - 1));
        }
      } else {
        static constexpr std::array<int, 6> kDegrees{1, 1, 2, 2, 2, 3};
        const int want = std::min(n, kDegrees[uniform_int(rng, 0, 5)]);
        if (want >= 2 && !adjacent_pairs.empty() && unit(rng) < 0.6) {
          auto [x, y] = random_pair();
          chosen = VertexSet{x, y};
        }
        while (chosen.size() < want) {
          if (n > base.size() && unit(rng) < 0.5) {
            chosen.insert(uniform_int(rng, base.size(), n - 1));
          } else {
            chosen.insert(uniform_int(rng, 0, n - 1));
          }
        }
      }
      for (int t : chosen) h.set(t, n, unit(rng) < 0.85 ? Adj::Strong : Adj::Semi);
      bool ok = true;
      for (Pattern p : patterns) {
        if (find_pattern_through(h, p, n)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g = std::move(h);
        break;
      }
    }
  }
  return g;
}

}  // namespace tri
