#include "tri/freeness.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "suppress.hpp"

namespace tri {

std::string pattern_name(Pattern p) {
  switch (p) {
    case Pattern::ISK4:
      return "ISK4";
    case Pattern::Wheel:
      return "Wheel";
    case Pattern::Diamond:
      return "Diamond";
    case Pattern::K4:
      return "K4";
    case Pattern::K33:
      return "K33";
  }
  return "?";
}

Pattern parse_pattern(const std::string& s) {
  std::string k;
  for (char c : s) k.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (k == "isk4") return Pattern::ISK4;
  if (k == "wheel") return Pattern::Wheel;
  if (k == "diamond") return Pattern::Diamond;
  if (k == "k4") return Pattern::K4;
  if (k == "k33") return Pattern::K33;
  throw InputError("unknown pattern '" + s + "'");
}

const std::vector<Pattern>& all_patterns() {
  static const std::vector<Pattern> all{Pattern::ISK4, Pattern::Wheel, Pattern::Diamond,
                                        Pattern::K4, Pattern::K33};
  return all;
}

SimpleGraph Witness::realize(const Trigraph& host) const {
  Trigraph t = host;
  for (const auto& c : realization) t.set(c.u, c.v, c.edge ? Adj::Strong : Adj::StrongAnti);
  return SimpleGraph(std::move(t));
}

std::string format_witness(const Witness& w) {
  std::ostringstream out;
  out << "witness " << pattern_name(w.kind) << '\n';
  out << "vertices";
  for (int v : w.vertices) out << ' ' << v;
  out << '\n';
  if (w.kind == Pattern::Wheel) {
    out << "rim";
    for (int v : w.rim) out << ' ' << v;
    out << "\nhub " << w.hub << '\n';
  }
  out << "realization";
  for (const auto& c : w.realization) out << ' ' << c.u << '-' << c.v << (c.edge ? '+' : '-');
  out << '\n';
  return out.str();
}

namespace {

/// Realization choices for every semi-adjacent pair: edge iff the pair is a
/// target edge inside the witness.
std::vector<PairChoice> choices_for(const Trigraph& g, const std::set<Pair>& edges) {
  std::vector<PairChoice> out;
  for (auto [u, v] : g.semi_pairs()) out.push_back({u, v, edges.count({u, v}) > 0});
  return out;
}

Pair ordered(int u, int v) { return u < v ? Pair{u, v} : Pair{v, u}; }

/// Choices for a witness on x that realizes every adjacent pair inside x as an
/// edge except the listed non-edges.
std::vector<PairChoice> choices_all_edges_except(const Trigraph& g, VertexSet x,
                                                 const std::set<Pair>& non_edges) {
  std::set<Pair> edges;
  for (int u : x) {
    for (int v : g.neighbors(u) & x) {
      if (u < v && !non_edges.count({u, v})) edges.insert({u, v});
    }
  }
  return choices_for(g, edges);
}

// ---------------------------------------------------------------------------
// ISK4: four branch vertices joined pairwise by six paths. A vertex added to a
// path must be non-strongly-adjacent to everything already placed except its
// predecessor and the path's target; a strongly adjacent target forces the
// path to close.

class Isk4Search {
 public:
  Isk4Search(const Trigraph& g, VertexSet through) : g_(g), through_(through) {}

  std::optional<Witness> run() {
    std::vector<int> cand;
    for (int v = 0; v < g_.size(); ++v) {
      if (g_.degree(v) >= 3) cand.push_back(v);
    }
    const int c = static_cast<int>(cand.size());
    for (int i = 0; i < c; ++i) {
      for (int j = i + 1; j < c; ++j) {
        for (int k = j + 1; k < c; ++k) {
          for (int l = k + 1; l < c; ++l) {
            br_ = {cand[i], cand[j], cand[k], cand[l]};
            used_ = VertexSet{br_[0], br_[1], br_[2], br_[3]};
            edges_.clear();
            if (build(0)) return witness();
          }
        }
      }
    }
    return std::nullopt;
  }

 private:
  static constexpr std::array<std::array<int, 2>, 6> kPairs{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

  bool build(int idx) {
    if (idx == 6) return through_.empty() || through_.intersects(used_);
    return extend(idx, br_[kPairs[idx][0]], br_[kPairs[idx][1]]);
  }

  bool extend(int idx, int u, int target) {
    if (g_.adjacent(u, target)) {
      edges_.push_back(ordered(u, target));
      if (build(idx + 1)) return true;
      edges_.pop_back();
      if (g_.strongly_adjacent(u, target)) return false;
    }
    const VertexSet others = used_ - VertexSet{u, target};
    for (int w : g_.neighbors(u) - used_) {
      if (g_.strong_neighbors(w).intersects(others)) continue;
      used_.insert(w);
      edges_.push_back(ordered(u, w));
      if (extend(idx, w, target)) return true;
      edges_.pop_back();
      used_.erase(w);
    }
    return false;
  }

  Witness witness() const {
    Witness w;
    w.kind = Pattern::ISK4;
    w.vertices = used_.to_vector();
    w.realization = choices_for(g_, std::set<Pair>(edges_.begin(), edges_.end()));
    return w;
  }

  const Trigraph& g_;
  VertexSet through_;
  std::array<int, 4> br_{};
  VertexSet used_;
  std::vector<Pair> edges_;
};

// ---------------------------------------------------------------------------
// Holes are enumerated once each: the smallest vertex first, and the second
// vertex smaller than the last.

class HoleSearch {
 public:
  HoleSearch(const Trigraph& g, int min_rim, VertexSet through)
      : g_(g), min_rim_(min_rim), through_(through) {}

  std::optional<Witness> run() {
    for (int s = 0; s < g_.size(); ++s) {
      path_ = {s};
      used_ = VertexSet::single(s);
      allowed_ = g_.vertices() - VertexSet::range(s + 1);
      if (grow()) return found_;
    }
    return std::nullopt;
  }

 private:
  bool grow() {
    const int s = path_.front();
    const int u = path_.back();
    const int k = static_cast<int>(path_.size());
    const VertexSet others = used_ - VertexSet{u, s};
    for (int w : (g_.neighbors(u) & allowed_) - used_) {
      if (g_.strong_neighbors(w).intersects(others)) continue;
      path_.push_back(w);
      used_.insert(w);
      bool closes = g_.adjacent(w, s);
      // Cycle length would be k + 1.
      if (closes && k >= 2 && k + 1 >= min_rim_ && path_[1] < w && check_hub()) return true;
      // w follows s directly when k == 1; otherwise w-s must stay a non-edge.
      bool may_continue = k == 1 || !g_.strongly_adjacent(w, s);
      if (may_continue && grow()) return true;
      path_.pop_back();
      used_.erase(w);
    }
    return false;
  }

  bool check_hub() {
    const bool rim_hit = through_.empty() || through_.intersects(used_);
    for (int h = 0; h < g_.size(); ++h) {
      if (used_.contains(h)) continue;
      if (!rim_hit && !through_.contains(h)) continue;
      VertexSet spokes = g_.neighbors(h) & used_;
      if (spokes.size() < 3) continue;
      std::set<Pair> edges;
      const int k = static_cast<int>(path_.size());
      for (int i = 0; i < k; ++i) edges.insert(ordered(path_[i], path_[(i + 1) % k]));
      for (int r : spokes) edges.insert(ordered(h, r));
      Witness w;
      w.kind = Pattern::Wheel;
      w.vertices = (used_ | VertexSet::single(h)).to_vector();
      w.rim = path_;
      w.hub = h;
      w.realization = choices_for(g_, edges);
      found_ = std::move(w);
      return true;
    }
    return false;
  }

  const Trigraph& g_;
  int min_rim_;
  VertexSet through_;
  std::vector<int> path_;
  VertexSet used_;
  VertexSet allowed_;
  Witness found_;
};

template <typename Visit>
bool for_each_subset_of_size(int n, int k, VertexSet must, Visit&& visit) {
  std::vector<int> idx(k);
  std::function<bool(int, int, VertexSet)> rec = [&](int pos, int from, VertexSet acc) {
    if (pos == k) return must.subset_of(acc) && visit(acc);
    for (int v = from; v <= n - (k - pos); ++v) {
      if (rec(pos + 1, v + 1, acc | VertexSet::single(v))) return true;
    }
    return false;
  };
  return rec(0, 0, VertexSet{});
}

std::optional<Witness> diamond_search(const Trigraph& g, VertexSet through) {
  std::optional<Witness> out;
  for_each_subset_of_size(g.size(), 4, through, [&](VertexSet x) {
    auto vs = x.to_vector();
    int adjacent = 0;
    std::optional<Pair> hole;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (g.adjacent(vs[i], vs[j])) ++adjacent;
      }
    }
    if (adjacent < 5) return false;
    // The one non-edge must be an anti-adjacent pair.
    for (int i = 0; i < 4 && !hole; ++i) {
      for (int j = i + 1; j < 4 && !hole; ++j) {
        if (!g.anti_adjacent(vs[i], vs[j])) continue;
        bool rest_adjacent = true;
        for (int a = 0; a < 4; ++a) {
          for (int b = a + 1; b < 4; ++b) {
            if ((a != i || b != j) && !g.adjacent(vs[a], vs[b])) rest_adjacent = false;
          }
        }
        if (rest_adjacent) hole = Pair{vs[i], vs[j]};
      }
    }
    if (!hole) return false;
    out = Witness{Pattern::Diamond, vs, choices_all_edges_except(g, x, {*hole}), {}, -1};
    return true;
  });
  return out;
}

std::optional<Witness> k4_search(const Trigraph& g, VertexSet through) {
  std::optional<Witness> out;
  for_each_subset_of_size(g.size(), 4, through, [&](VertexSet x) {
    if (!g.is_clique(x)) return false;
    out = Witness{Pattern::K4, x.to_vector(), choices_all_edges_except(g, x, {}), {}, -1};
    return true;
  });
  return out;
}

std::optional<Witness> k33_search(const Trigraph& g, VertexSet through) {
  std::optional<Witness> out;
  for_each_subset_of_size(g.size(), 6, through, [&](VertexSet x) {
    auto vs = x.to_vector();
    // vs[0] is on side A; choose its two partners.
    for (int i = 1; i < 6; ++i) {
      for (int j = i + 1; j < 6; ++j) {
        VertexSet a{vs[0], vs[i], vs[j]};
        VertexSet b = x - a;
        if (!g.is_stable(a) || !g.is_stable(b)) continue;
        bool cross = true;
        for (int p : a) {
          if (!b.subset_of(g.neighbors(p))) cross = false;
        }
        if (!cross) continue;
        std::set<Pair> non_edges;
        for (VertexSet side : {a, b}) {
          for (int p : side) {
            for (int q : side) {
              if (p < q) non_edges.insert({p, q});
            }
          }
        }
        out = Witness{Pattern::K33, vs, choices_all_edges_except(g, x, non_edges), {}, -1};
        return true;
      }
    }
    return false;
  });
  return out;
}

std::optional<Witness> search(const Trigraph& g, Pattern p, WheelOptions opts, VertexSet through) {
  switch (p) {
    case Pattern::ISK4:
      return Isk4Search(g, through).run();
    case Pattern::Wheel:
      return HoleSearch(g, opts.min_rim, through).run();
    case Pattern::Diamond:
      return diamond_search(g, through);
    case Pattern::K4:
      return k4_search(g, through);
    case Pattern::K33:
      return k33_search(g, through);
  }
  return std::nullopt;
}

}  // namespace

bool is_subdivision_of_K4(const SimpleGraph& h) {
  if (h.size() < 4 || !is_connected(h.trigraph())) return false;
  int branch = 0;
  for (int v = 0; v < h.size(); ++v) {
    int d = h.degree(v);
    if (d == 3) {
      ++branch;
    } else if (d != 2) {
      return false;
    }
  }
  if (branch != 4) return false;
  auto s = detail::suppress_degree_two(h);
  if (s.loops != 0 || s.free_cycles != 0 || s.edges.size() != 6) return false;
  std::set<Pair> seen;
  for (const auto& e : s.edges) seen.insert(ordered(e.a, e.b));
  return seen.size() == 6;
}

std::optional<Witness> find_ISK4(const SimpleGraph& h, Isk4Strategy strategy) {
  if (strategy == Isk4Strategy::Backtrack) return find_ISK4(h.trigraph());
  const int n = h.size();
  if (n > 30) throw InputError("subset scan limited to 30 vertices");
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    VertexSet x(bits);
    if (x.size() < 4) continue;
    int deg3 = 0;
    bool ok = true;
    for (int v : x) {
      int d = (h.neighbors(v) & x).size();
      if (d == 3) {
        ++deg3;
      } else if (d != 2) {
        ok = false;
        break;
      }
    }
    if (!ok || deg3 != 4) continue;
    Induced sub = induced(h.trigraph(), x);
    if (is_subdivision_of_K4(SimpleGraph(sub.graph))) {
      return Witness{Pattern::ISK4, x.to_vector(), {}, {}, -1};
    }
  }
  return std::nullopt;
}

std::optional<Witness> find_wheel(const SimpleGraph& h, WheelOptions opts) {
  return find_wheel(h.trigraph(), opts);
}

std::optional<Witness> find_ISK4(const Trigraph& g) { return search(g, Pattern::ISK4, {}, {}); }
std::optional<Witness> find_wheel(const Trigraph& g, WheelOptions opts) {
  return search(g, Pattern::Wheel, opts, {});
}
std::optional<Witness> find_diamond(const Trigraph& g) {
  return search(g, Pattern::Diamond, {}, {});
}
std::optional<Witness> find_K4(const Trigraph& g) { return search(g, Pattern::K4, {}, {}); }
std::optional<Witness> find_K33(const Trigraph& g) { return search(g, Pattern::K33, {}, {}); }

std::optional<Witness> trigraph_is_free(const Trigraph& g, Pattern p, WheelOptions opts) {
  return search(g, p, opts, {});
}

bool is_free(const Trigraph& g, const std::vector<Pattern>& patterns, WheelOptions opts) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](Pattern p) { return search(g, p, opts, {}).has_value(); });
}

std::optional<Witness> find_pattern_through(const Trigraph& g, Pattern p, int v,
                                            WheelOptions opts) {
  if (v < 0 || v >= g.size()) throw InputError("unknown vertex " + std::to_string(v));
  return search(g, p, opts, VertexSet::single(v));
}

bool is_chordless(const SimpleGraph& h) {
  Trigraph t = h.trigraph();
  for (auto [u, v] : h.edges()) {
    t.set(u, v, Adj::StrongAnti);
    bool two_paths = false;
    VertexSet all = t.vertices();
    if (find_narrow_path(t, u, v)) {
      two_paths = true;
      // A single vertex separating u from v means local connectivity one.
      for (int w = 0; w < t.size() && two_paths; ++w) {
        if (w == u || w == v) continue;
        if (!find_narrow_path(t, u, v, all - VertexSet::single(w))) two_paths = false;
      }
    }
    t.set(u, v, Adj::Strong);
    if (two_paths) return false;
  }
  return true;
}

}  // namespace tri
