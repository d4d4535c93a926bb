#include "tri/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "tri/attachments.hpp"
#include "tri/cutsets.hpp"
#include "tri/decomposer.hpp"
#include "tri/generators.hpp"
#include "tri/io.hpp"
#include "tri/oracles.hpp"
#include "tri/structure.hpp"

namespace tri {

std::uint64_t PropertyReport::stat(const std::string& name) const {
  for (const auto& [k, v] : stats) {
    if (k == name) return v;
  }
  return 0;
}

const std::vector<std::string>& property_ids() {
  static const std::vector<std::string> ids = {
      "theorem",      "oracle",       "delete-three",  "diamond",          "prism-vertex",
      "prism-conn",   "K4-vertex",    "K4-conn",       "cyclic3-conn",     "max-cyclic3",
      "K33-vertex",   "K33-comp",     "K33-strong",    "prism-realization", "K33-or-prism",
      "lemma45",      "long-rich-square", "decomposition", "block-freeness"};
  return ids;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string set_text(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    out += (first ? "" : " ") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

/// Collects counters in first-touch order and failures.
class Recorder {
 public:
  explicit Recorder(std::string id) : start_(Clock::now()) { r_.id = std::move(id); }

  void count(const std::string& name, std::uint64_t by = 1) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      index_[name] = r_.stats.size();
      r_.stats.emplace_back(name, by);
    } else {
      r_.stats[it->second].second += by;
    }
  }
  void instance() { ++r_.instances; }
  void fail(const Trigraph& g, const std::string& why) {
    ++r_.failures;
    if (r_.counterexamples.size() < kStoredCounterexamples) r_.counterexamples.push_back({g, why});
  }
  void row(const std::string& text) { r_.rows.push_back(text); }
  std::uint64_t failures() const { return r_.failures; }
  std::uint64_t instances() const { return r_.instances; }

  PropertyReport finish() {
    r_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(r_);
  }
  PropertyReport& report() { return r_; }

 private:
  PropertyReport r_;
  std::map<std::string, std::size_t> index_;
  Clock::time_point start_;
};

int bound(const VerifyOptions& o, int fallback, int max, const std::string& id) {
  int n = o.n.value_or(fallback);
  if (n < 1 || n > max) {
    throw InputError(id + ": --n must be between 1 and " + std::to_string(max));
  }
  return n;
}

WheelOptions wheel_options(const VerifyOptions& o) { return WheelOptions{o.triangle_rims ? 3 : 4}; }

const std::vector<Pattern> kIsk4Wheel{Pattern::ISK4, Pattern::Wheel};
const std::vector<Pattern> kIsk4WheelDiamond{Pattern::ISK4, Pattern::Wheel, Pattern::Diamond};

void for_each_graph(int n, const std::function<void(const SimpleGraph&)>& visit) {
  const std::size_t m = Trigraph::pair_count(n);
  std::vector<Pair> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    SimpleGraph h(n);
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) h.add_edge(pairs[i].first, pairs[i].second);
    }
    visit(h);
  }
}

// --- theorem and exhaustive checks -----------------------------------------

PropertyReport theorem_impl(int n_max, bool iso, WheelOptions wheel) {
  Recorder rec("theorem");
  for (int n = 1; n <= n_max; ++n) {
    std::uint64_t scanned = 0, free = 0, bad = 0;
    for_each_trigraph(n, iso, [&](const Trigraph& g) {
      ++scanned;
      if (!is_free(g, kIsk4Wheel, wheel)) return true;
      ++free;
      if (classify(g).labels.empty()) {
        ++bad;
        rec.fail(g, "{ISK4,wheel}-free but no outcome holds");
      }
      return true;
    });
    rec.report().instances += scanned;
    rec.count("free", free);
    rec.row("n=" + std::to_string(n) + " scanned " + std::to_string(scanned) + " free " +
            std::to_string(free) + " counterexamples " + std::to_string(bad));
  }
  rec.count("scanned", rec.instances());
  return rec.finish();
}

PropertyReport oracle_impl(int n_max, WheelOptions wheel) {
  Recorder rec("oracle");
  for (int n = 1; n <= n_max; ++n) {
    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> per;  // positives, mismatches
    std::uint64_t scanned = 0;
    for_each_trigraph(n, false, [&](const Trigraph& g) {
      ++scanned;
      rec.instance();
      for (Pattern p : all_patterns()) {
        auto w = trigraph_is_free(g, p, wheel);
        bool brute = oracle::contains_pattern(g, p, wheel.min_rim);
        auto& slot = per["free-check " + pattern_name(p)];
        slot.first += brute;
        if (w.has_value() != brute) {
          ++slot.second;
          rec.fail(g, pattern_name(p) + ": detector " + (w ? "found" : "missed") + " a pattern");
        } else if (w) {
          SimpleGraph r = w->realize(g);
          Trigraph sub = induced(r.trigraph(), VertexSet(w->vertices)).graph;
          if (!oracle::contains_pattern(sub, p, wheel.min_rim)) {
            ++slot.second;
            rec.fail(g, pattern_name(p) + ": witness does not replay");
          }
        }
      }
      bool sp = is_series_parallel(g);
      bool sp_brute = !oracle::has_K4_subdivision_subgraph(full_realization(g));
      auto& sps = per["series-parallel"];
      sps.first += sp_brute;
      if (sp != sp_brute) {
        ++sps.second;
        rec.fail(g, "series-parallel recognizer disagrees with subgraph search");
      }
      auto cb = as_complete_bipartite(g);
      auto cb_brute = oracle::brute_force_bipartition(g);
      auto& cbs = per["complete-bipartite"];
      cbs.first += cb_brute.exists;
      if (cb.has_value() != cb_brute.exists || (cb && cb->thick != cb_brute.thick)) {
        ++cbs.second;
        rec.fail(g, "complete bipartite recognizer disagrees with bipartition search");
      }
      return true;
    });
    for (const auto& [check, v] : per) {
      rec.row("n=" + std::to_string(n) + " " + check + " instances " + std::to_string(scanned) +
              " positive " + std::to_string(v.first) + " mismatches " + std::to_string(v.second));
    }
  }
  return rec.finish();
}

PropertyReport delete_three(const VerifyOptions& o) {
  const int n_max = bound(o, kDeleteThreeMaxN, kDeleteThreeMaxN, "delete-three");
  const bool iso = o.modulo_iso.value_or(true);
  Recorder rec("delete-three");
  for (int n = 1; n <= n_max; ++n) {
    std::uint64_t checked = 0;
    for_each_trigraph(n, iso, [&](const Trigraph& g) {
      if (!is_connected(g) || is_narrow_path_trigraph(g)) return true;
      ++checked;
      rec.instance();
      int good = 0;
      for (int v = 0; v < n; ++v) good += is_connected(g, g.vertices() - VertexSet::single(v));
      if (good < 3) rec.fail(g, "only " + std::to_string(good) + " vertices keep the trigraph connected");
      return true;
    });
    rec.row("n=" + std::to_string(n) + " connected non-path instances " + std::to_string(checked));
  }
  return rec.finish();
}

PropertyReport diamond(const VerifyOptions& o) {
  const int n_max = bound(o, kDiamondMaxN, kDiamondMaxN, "diamond");
  const bool iso = o.modulo_iso.value_or(false);
  const WheelOptions wheel = wheel_options(o);
  Recorder rec("diamond");
  for (int n = 1; n <= n_max; ++n) {
    std::uint64_t k4_wheel_free = 0, isk4_subclass = 0, with_diamond = 0;
    for_each_trigraph(n, iso, [&](const Trigraph& g) {
      if (trigraph_is_free(g, Pattern::K4) || trigraph_is_free(g, Pattern::Wheel, wheel)) return true;
      ++k4_wheel_free;
      rec.instance();
      const bool isk4_free = !trigraph_is_free(g, Pattern::ISK4);
      isk4_subclass += isk4_free;
      if (!trigraph_is_free(g, Pattern::Diamond)) return true;
      ++with_diamond;
      if (!find_clique_cutset(g) && !find_stable_2_cutset(g)) {
        rec.fail(g, std::string("contains a diamond and has no clique-cutset or stable 2-cutset") +
                        (isk4_free ? " (ISK4-free)" : ""));
      }
      return true;
    });
    rec.row("n=" + std::to_string(n) + " {K4,wheel}-free " + std::to_string(k4_wheel_free) +
            " of which ISK4-free " + std::to_string(isk4_subclass) + " containing a diamond " +
            std::to_string(with_diamond));
  }
  return rec.finish();
}

PropertyReport k33_strong() {
  Recorder rec("K33-strong");
  std::uint64_t isk4_free = 0;
  // Bipartitions {A, B} of 0..5 with 0 in A.
  for (int a1 = 1; a1 < 6; ++a1) {
    for (int a2 = a1 + 1; a2 < 6; ++a2) {
      VertexSet a{0, a1, a2};
      std::vector<Pair> cross, inner;
      for (int u = 0; u < 6; ++u) {
        for (int v = u + 1; v < 6; ++v) {
          (a.contains(u) == a.contains(v) ? inner : cross).push_back({u, v});
        }
      }
      for (std::uint32_t mask = 0; mask < (1U << 15); ++mask) {
        Trigraph g(6);
        for (int i = 0; i < 9; ++i) {
          g.set(cross[i].first, cross[i].second, ((mask >> i) & 1U) ? Adj::Semi : Adj::Strong);
        }
        for (int i = 0; i < 6; ++i) {
          g.set(inner[i].first, inner[i].second, ((mask >> (9 + i)) & 1U) ? Adj::Semi : Adj::StrongAnti);
        }
        rec.instance();
        if (trigraph_is_free(g, Pattern::ISK4)) continue;
        ++isk4_free;
        if (!g.is_graph() || !is_strong_K33(g)) rec.fail(g, "ISK4-free K33-trigraph with a semi-adjacent pair");
      }
    }
  }
  rec.count("isk4_free", isk4_free);
  rec.row("K33-trigraphs " + std::to_string(rec.instances()) + " ISK4-free " + std::to_string(isk4_free));
  return rec.finish();
}

bool contains_prism(const Trigraph& g) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
    if (VertexSet(mask).size() >= 6 && as_prism(g, VertexSet(mask))) return true;
  }
  return false;
}

bool contains_prism_or_strong_K33(const Trigraph& g) {
  const int n = g.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet x(mask);
    if (x.size() < 6) continue;
    if (as_prism(g, x)) return true;
    if (x.size() == 6 && is_strong_K33(induced(g, x).graph)) return true;
  }
  return false;
}

PropertyReport k33_or_prism(const VerifyOptions& o) {
  Recorder rec("K33-or-prism");
  const int n_exhaustive = std::min(o.n.value_or(kK33OrPrismExhaustiveN), kK33OrPrismExhaustiveN);
  const bool iso = o.modulo_iso.value_or(false);
  auto check = [&](const Trigraph& g) {
    rec.instance();
    if (is_series_parallel(g)) {
      rec.count("series_parallel");
      return;
    }
    if (contains_prism_or_strong_K33(g)) {
      rec.count("prism_or_K33");
      return;
    }
    rec.fail(g, "not series-parallel and no induced prism or strong K33");
  };
  for (int n = 1; n <= n_exhaustive; ++n) {
    std::uint64_t free = 0;
    for_each_trigraph(n, iso, [&](const Trigraph& g) {
      if (!is_free(g, kIsk4Wheel)) return true;
      ++free;
      check(g);
      return true;
    });
    rec.row("n=" + std::to_string(n) + " exhaustive, free instances " + std::to_string(free));
  }
  const int n_sampled = o.n ? std::min(*o.n, kK33OrPrismSampledMaxN) : kK33OrPrismSampledMaxN;
  for (int n = kK33OrPrismExhaustiveN + 1; n <= n_sampled; ++n) {
    std::uint64_t found = 0;
    for (int i = 0; i < o.samples; ++i) {
      std::mt19937_64 rng(o.seed + static_cast<std::uint64_t>(i));
      RandomFreeOptions ro;
      ro.p_plus = 0.2 + 0.4 * unit(rng);
      ro.p_zero = 0.3 * unit(rng);
      ro.max_attempts = 50;
      auto g = random_free_trigraph(n, kIsk4Wheel, rng(), ro);
      if (!g) continue;
      ++found;
      check(*g);
    }
    rec.row("n=" + std::to_string(n) + " sampled, free instances " + std::to_string(found));
  }
  return rec.finish();
}

PropertyReport lemma45(const VerifyOptions& o) {
  const int n_max = bound(o, kLemma45MaxN, kLemma45MaxN, "lemma45");
  Recorder rec("lemma45");
  for (int n = 1; n <= n_max; ++n) {
    std::uint64_t connected = 0, cyclic = 0;
    for_each_graph(n, [&](const SimpleGraph& h) {
      if (!is_connected(h.trigraph())) return;
      ++connected;
      rec.instance();
      const bool c3 = is_cyclically_3_connected(h);
      cyclic += c3;
      const bool theta = is_theta(h);
      const bool sub3 = is_subdivision_of_3connected(h);
      if (c3 != (theta || sub3)) {
        rec.fail(h.trigraph(), std::string("cyclically 3-connected ") + (c3 ? "yes" : "no") + ", theta " +
                                   (theta ? "yes" : "no") + ", subdivision of 3-connected " +
                                   (sub3 ? "yes" : "no"));
      }
    });
    rec.row("n=" + std::to_string(n) + " connected graphs " + std::to_string(connected) +
            " cyclically 3-connected " + std::to_string(cyclic));
  }
  return rec.finish();
}

PropertyReport long_rich_square(const VerifyOptions& o) {
  Recorder rec("long-rich-square");
  const WheelOptions wheel = wheel_options(o);
  for (int links = 2; links <= 3; ++links) {
    int combos = 1;
    for (int i = 0; i < links; ++i) combos *= 3;
    for (int c = 0; c < combos; ++c) {
      FamilyParams p;
      int x = c;
      for (int i = 0; i < links; ++i) {
        p.values.push_back(1 + x % 3);
        x /= 3;
      }
      for (int orient = 0; orient < (1 << links); ++orient) {
        p.orient.clear();
        for (int i = 0; i < links; ++i) p.orient.push_back((orient >> i) & 1);
        Trigraph g = make_family("long-rich-square", p);
        rec.instance();
        auto w = find_wheel(SimpleGraph(g), wheel);
        if (!w) {
          rec.fail(g, "no wheel found");
          continue;
        }
        SimpleGraph sub(induced(g, VertexSet(w->vertices)).graph);
        if (!oracle::is_wheel(sub, wheel.min_rim)) rec.fail(g, "wheel witness does not replay");
        rec.count("witnesses");
      }
    }
  }
  return rec.finish();
}

// --- sampled attachment lemmas ---------------------------------------------

/// Semi-adjacent pairs are placed on adjacent pairs that lie in no triangle.
Trigraph soften(const Trigraph& g, std::mt19937_64& rng, double p) {
  Trigraph out = g;
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) {
      if (!g.adjacent(u, v) || (g.neighbors(u) & g.neighbors(v)).size() > 0) continue;
      if (unit(rng) < p) out.set(u, v, Adj::Semi);
    }
  }
  return out;
}

enum class HostKind { Prism, K4Line, Qualified, Bipartite };

struct Trial {
  std::uint64_t seed = 0;
  Trigraph g;
  VertexSet host;
  bool base_free = true;
};

Trial make_trial(HostKind kind, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Trial t;
  t.seed = seed;
  Trigraph base;
  std::vector<Pattern> patterns = kIsk4WheelDiamond;
  switch (kind) {
    case HostKind::Prism: {
      FamilyParams p;
      for (int i = 0; i < 3; ++i) p.values.push_back(uniform_int(rng, 1, 4) + (unit(rng) < 0.5));
      for (int& l : p.values) l = std::min(l, 4);
      while (6 + p.values[0] + p.values[1] + p.values[2] - 3 > kMaxHostSize) --p.values[uniform_int(rng, 0, 2)];
      base = soften(make_family("prism", p), rng, 0.25);
      break;
    }
    case HostKind::K4Line: {
      FamilyParams p;
      for (int i = 0; i < 6; ++i) p.values.push_back(1);
      for (int extra = uniform_int(rng, 0, kMaxHostSize - 12); extra > 0; --extra) {
        ++p.values[uniform_int(rng, 0, 5)];
      }
      base = soften(make_family("line-k4-subdivision", p), rng, 0.25);
      break;
    }
    case HostKind::Qualified:
      base = soften(line_trigraph_of(random_qualified_root(rng, 4, kMaxHostSize)), rng, 0.25);
      break;
    case HostKind::Bipartite: {
      FamilyParams p;
      p.values = {uniform_int(rng, 3, 4), uniform_int(rng, 3, 4)};
      base = make_family("complete-bipartite", p);
      patterns = kIsk4Wheel;
      break;
    }
  }
  t.host = base.vertices();
  t.base_free = is_free(base, patterns);
  const int extra = uniform_int(rng, 2, kMaxGrowth);
  t.g = t.base_free ? grow_free_instance(base, extra, patterns, rng()) : base;
  return t;
}

std::string trial_text(const Trial& t) {
  return "trial seed " + std::to_string(t.seed) + ", host " + set_text(t.host);
}

/// Connected vertex sets outside the host that are neither of type triangle
/// nor of type branch and contain no smaller such set.
std::vector<VertexSet> minimal_violators(const Trigraph& g, const HostStructure& hs) {
  const std::vector<int> outside = (g.vertices() - hs.host).to_vector();
  std::vector<VertexSet> bad;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << outside.size()); ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < outside.size(); ++i) {
      if ((mask >> i) & 1U) s.insert(outside[i]);
    }
    if (!is_connected(g, s)) continue;
    auto r = attachment(g, hs, s);
    if (!r.type_triangle && !r.type_branch) bad.push_back(s);
  }
  std::vector<VertexSet> minimal;
  for (VertexSet s : bad) {
    bool has_smaller = std::any_of(bad.begin(), bad.end(),
                                   [&](VertexSet t) { return t != s && t.subset_of(s); });
    if (!has_smaller) minimal.push_back(s);
  }
  return minimal;
}

std::optional<NarrowPath> as_path(const Trigraph& g, VertexSet s) {
  Induced sub = induced(g, s);
  if (!is_narrow_path_trigraph(sub.graph)) return std::nullopt;
  int start = 0;
  for (int v = 0; v < sub.graph.size(); ++v) {
    if (sub.graph.degree(v) <= 1) {
      start = v;
      break;
    }
  }
  NarrowPath p;
  int prev = -1, cur = start;
  while (cur >= 0) {
    p.order.push_back(sub.to_host[cur]);
    VertexSet next = sub.graph.neighbors(cur);
    if (prev >= 0) next.erase(prev);
    prev = cur;
    cur = next.first();
  }
  return p;
}

void check_vertices(Recorder& rec, const Trial& t) {
  HostStructure hs = host_structure(t.g, t.host);
  for (int v : t.g.vertices() - t.host) {
    rec.count("outside_vertices");
    VertexSet nb = t.g.neighbors(v) & t.host;
    auto r = attachment(t.g, hs, VertexSet::single(v));
    if (nb.size() > 2) {
      rec.fail(t.g, trial_text(t) + ": vertex " + std::to_string(v) + " has " + std::to_string(nb.size()) +
                        " neighbours in the host");
    } else if (!r.type_branch) {
      rec.fail(t.g, trial_text(t) + ": vertex " + std::to_string(v) + " is not of type branch");
    }
  }
}

void check_connected(Recorder& rec, const Trial& t) {
  HostStructure hs = host_structure(t.g, t.host);
  auto minimal = minimal_violators(t.g, hs);
  for (VertexSet s : minimal) {
    rec.count("minimal_violators");
    auto path = as_path(t.g, s);
    if (!path || !is_augmenting_path(t.g, t.host, *path)) {
      rec.fail(t.g, trial_text(t) + ": minimal violator " + set_text(s) + " is not an augmenting path");
    } else {
      rec.count("augmenting_paths");
    }
  }
  auto greedy = minimal_violator(t.g, t.host);
  bool agrees = greedy ? std::find(minimal.begin(), minimal.end(), *greedy) != minimal.end() : minimal.empty();
  if (!agrees) rec.fail(t.g, trial_text(t) + ": minimal_violator result is not inclusion-wise minimal");
}

bool qualified_line(const Trigraph& g, VertexSet x) {
  auto root = as_line_trigraph(induced(g, x).graph);
  return root && qualify_root(root->h).all();
}

/// Maximal sets among host ∪ S (S outside the host) satisfying `good`.
std::vector<VertexSet> maximal_extensions(const Trigraph& g, VertexSet host,
                                          const std::function<bool(VertexSet)>& good) {
  const std::vector<int> outside = (g.vertices() - host).to_vector();
  std::vector<VertexSet> ok;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << outside.size()); ++mask) {
    VertexSet s = host;
    for (std::size_t i = 0; i < outside.size(); ++i) {
      if ((mask >> i) & 1U) s.insert(outside[i]);
    }
    if (good(s)) ok.push_back(s);
  }
  std::vector<VertexSet> maximal;
  for (VertexSet s : ok) {
    bool has_larger = std::any_of(ok.begin(), ok.end(), [&](VertexSet t) { return t != s && s.subset_of(t); });
    if (!has_larger) maximal.push_back(s);
  }
  return maximal;
}

void check_max_cyclic3(Recorder& rec, const Trial& t) {
  for (VertexSet k : maximal_extensions(t.g, t.host, [&](VertexSet x) { return qualified_line(t.g, x); })) {
    rec.count("maximal_hosts");
    if (k != t.host) rec.count("maximal_hosts_beyond_base");
    HostStructure hs = host_structure(t.g, k);
    for (VertexSet c : components(t.g, t.g.vertices() - k)) {
      rec.count("components");
      auto r = attachment(t.g, hs, c);
      if (!r.type_branch && !r.type_triangle) {
        rec.fail(t.g, trial_text(t) + ": component " + set_text(c) + " over maximal host " + set_text(k) +
                          " is neither of type branch nor of type triangle");
      }
    }
  }
}

void check_k33(Recorder& rec, const Trial& t, bool components_mode) {
  auto thick = [&](VertexSet x) {
    auto cb = as_complete_bipartite(induced(t.g, x).graph);
    return cb && cb->thick;
  };
  for (VertexSet h : maximal_extensions(t.g, t.host, thick)) {
    rec.count("maximal_hosts");
    if (h != t.host) rec.count("maximal_hosts_beyond_base");
    Induced sub = induced(t.g, h);
    auto cb = as_complete_bipartite(sub.graph);
    VertexSet a, b;
    for (int v : cb->parts.a) a.insert(sub.to_host[v]);
    for (int v : cb->parts.b) b.insert(sub.to_host[v]);
    std::vector<VertexSet> parts;
    if (components_mode) {
      parts = components(t.g, t.g.vertices() - h);
    } else {
      for (int v : t.g.vertices() - h) parts.push_back(VertexSet::single(v));
    }
    for (VertexSet c : parts) {
      rec.count(components_mode ? "components" : "outside_vertices");
      VertexSet over;
      for (int v : c) over |= t.g.neighbors(v) & h;
      if ((over & a).size() > 1 || (over & b).size() > 1) {
        rec.fail(t.g, trial_text(t) + ": " + set_text(c) + " attaches to " + set_text(over) +
                          " over maximal host " + set_text(h));
      }
    }
  }
}

PropertyReport sampled(const std::string& id, const VerifyOptions& o) {
  if (o.samples < 0) throw InputError(id + ": --samples must be non-negative");
  Recorder rec(id);
  HostKind kind = HostKind::Prism;
  if (id == "K4-vertex" || id == "K4-conn") kind = HostKind::K4Line;
  if (id == "cyclic3-conn" || id == "max-cyclic3") kind = HostKind::Qualified;
  if (id == "K33-vertex" || id == "K33-comp") kind = HostKind::Bipartite;
  for (int i = 0; i < o.samples; ++i) {
    Trial t = make_trial(kind, o.seed + static_cast<std::uint64_t>(i));
    if (!t.base_free) {
      rec.count("hosts_not_free");
      continue;
    }
    rec.instance();
    rec.count("grown_vertices", static_cast<std::uint64_t>(t.g.size() - t.host.size()));
    if (id == "prism-vertex" || id == "K4-vertex") {
      check_vertices(rec, t);
    } else if (id == "prism-conn" || id == "K4-conn" || id == "cyclic3-conn") {
      check_connected(rec, t);
    } else if (id == "max-cyclic3") {
      check_max_cyclic3(rec, t);
    } else {
      check_k33(rec, t, id == "K33-comp");
    }
  }
  return rec.finish();
}

PropertyReport prism_realization(const VerifyOptions& o) {
  Recorder rec("prism-realization");
  for (int i = 0; i < o.samples; ++i) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
    std::mt19937_64 rng(seed);
    FamilyParams p;
    for (int k = 0; k < 3; ++k) p.values.push_back(uniform_int(rng, 1, 3));
    Trigraph base = make_family("prism", p);
    // Any adjacent pair may become semi-adjacent; the full realization stays a prism.
    for (int u = 0; u < base.size(); ++u) {
      for (int v = u + 1; v < base.size(); ++v) {
        if (base.adjacent(u, v) && unit(rng) < 0.15) base.set(u, v, Adj::Semi);
      }
    }
    if (!is_free(base, kIsk4Wheel)) {
      rec.count("hypothesis_fails");
      continue;
    }
    Trigraph g = grow_free_instance(base, uniform_int(rng, 0, 4), kIsk4Wheel, rng());
    rec.instance();
    if (as_prism(g, base.vertices())) {
      rec.count("same_vertex_set");
      continue;
    }
    if (!contains_prism(g)) {
      rec.fail(g, "trial seed " + std::to_string(seed) + ": full realization has a prism, trigraph has none");
    }
  }
  return rec.finish();
}

/// Half of the instances are rejection-sampled outright; the rest grow a small
/// basic piece vertex by vertex, rejecting additions that break freeness.
std::optional<Trigraph> random_free_instance(std::mt19937_64& rng, int n_max) {
  if (n_max < 7 || unit(rng) < 0.5) {
    const int n = uniform_int(rng, 1, n_max);
    RandomFreeOptions ro;
    ro.p_plus = 0.1 + 0.3 * unit(rng);
    ro.p_zero = 0.25 * unit(rng);
    ro.max_attempts = 100;
    return random_free_trigraph(n, kIsk4Wheel, rng(), ro);
  }
  FamilyParams p;
  std::string family;
  switch (uniform_int(rng, 0, 4)) {
    case 0:
      family = "prism";
      p.values = {uniform_int(rng, 1, 2), 1, uniform_int(rng, 1, 2)};
      break;
    case 1:
      family = "complete-bipartite";
      p.values = {3, uniform_int(rng, 3, 4)};
      break;
    case 2:
      family = "theta";
      p.values = {2, 2, uniform_int(rng, 2, 3)};
      break;
    case 3:
      family = "cycle";
      p.values = {uniform_int(rng, 3, 6)};
      break;
    default:
      family = "complete";
      p.values = {3};
      break;
  }
  Trigraph base = soften(make_family(family, p), rng, 0.2);
  if (base.size() > n_max || !is_free(base, kIsk4Wheel)) return std::nullopt;
  return grow_free_instance(base, uniform_int(rng, 0, n_max - base.size()), kIsk4Wheel, rng());
}

int depth(const DecompositionTree& t) {
  return t.leaf() ? 0 : 1 + std::max(depth(*t.left), depth(*t.right));
}

PropertyReport decomposition(const VerifyOptions& o) {
  const int n_max = bound(o, kDecompositionMaxN, 16, "decomposition");
  Recorder rec("decomposition");
  std::uint64_t seed = o.seed;
  const std::uint64_t limit = o.seed + 100 * static_cast<std::uint64_t>(o.samples) + 100;
  while (rec.instances() < static_cast<std::uint64_t>(o.samples) && seed < limit) {
    std::mt19937_64 rng(seed++);
    auto g = random_free_instance(rng, n_max);
    if (!g) {
      rec.count("sampling_misses");
      continue;
    }
    rec.instance();
    if (!is_free(*g, kIsk4Wheel)) {
      rec.fail(*g, "seed " + std::to_string(seed - 1) + ": sampled instance is not {ISK4,wheel}-free");
      continue;
    }
    DecompositionTree t = decompose(*g);
    rec.count("leaves", static_cast<std::uint64_t>(t.leaf_count()));
    rec.count("splits", static_cast<std::uint64_t>(t.leaf_count() - 1));
    rec.count("max_depth_sum", static_cast<std::uint64_t>(depth(t)));
    if (auto e = check_tree(*g, t)) rec.fail(*g, "seed " + std::to_string(seed - 1) + ": " + *e);
  }
  return rec.finish();
}

void collect_blocks(const DecompositionTree& t, std::vector<VertexSet>& out) {
  if (t.leaf()) return;
  out.push_back(t.left->vertices);
  out.push_back(t.right->vertices);
  collect_blocks(*t.left, out);
  collect_blocks(*t.right, out);
}

PropertyReport block_freeness(const VerifyOptions& o) {
  const int n_max = bound(o, kDecompositionMaxN, 16, "block-freeness");
  Recorder rec("block-freeness");
  rec.report().report_only = true;
  for (int i = 0; i < o.samples; ++i) {
    std::mt19937_64 rng(o.seed + static_cast<std::uint64_t>(i));
    auto g = random_free_instance(rng, n_max);
    if (!g) continue;
    rec.instance();
    std::vector<VertexSet> blocks;
    collect_blocks(decompose(*g), blocks);
    for (VertexSet b : blocks) {
      rec.count("blocks");
      rec.count(is_free(induced(*g, b).graph, kIsk4Wheel) ? "blocks_free" : "blocks_not_free");
    }
  }
  return rec.finish();
}

}  // namespace

PropertyReport verify_theorem(int n_max, bool modulo_iso, WheelOptions wheel) {
  const int cap = modulo_iso ? kIsoEnumerationBound : kLabeledEnumerationBound;
  if (n_max < 1 || n_max > cap) throw InputError("theorem: --n must be between 1 and " + std::to_string(cap));
  return theorem_impl(n_max, modulo_iso, wheel);
}

PropertyReport verify_oracle_agreement(int n_max, WheelOptions wheel) {
  if (n_max < 1 || n_max > kOracleMaxN) {
    throw InputError("oracle: --n must be between 1 and " + std::to_string(kOracleMaxN));
  }
  return oracle_impl(n_max, wheel);
}

PropertyReport verify(const std::string& id, const VerifyOptions& o) {
  if (id == "theorem") {
    return verify_theorem(o.n.value_or(kTheoremDefaultN), o.modulo_iso.value_or(false), wheel_options(o));
  }
  if (id == "oracle") return verify_oracle_agreement(o.n.value_or(kOracleMaxN), wheel_options(o));
  if (id == "delete-three") return delete_three(o);
  if (id == "diamond") return diamond(o);
  if (id == "K33-strong") return k33_strong();
  if (id == "K33-or-prism") return k33_or_prism(o);
  if (id == "lemma45") return lemma45(o);
  if (id == "long-rich-square") return long_rich_square(o);
  if (id == "prism-realization") return prism_realization(o);
  if (id == "decomposition") return decomposition(o);
  if (id == "block-freeness") return block_freeness(o);
  for (const char* s : {"prism-vertex", "prism-conn", "K4-vertex", "K4-conn", "cyclic3-conn", "max-cyclic3",
                        "K33-vertex", "K33-comp"}) {
    if (id == s) return sampled(id, o);
  }
  throw InputError("unknown property: " + id);
}

std::string format_report(const PropertyReport& r) {
  std::ostringstream out;
  out << "property " << r.id << '\n';
  out << "instances " << r.instances << '\n';
  out << "counterexamples " << r.failures << '\n';
  out << "elapsed " << r.elapsed_seconds << "s\n";
  for (const auto& [k, v] : r.stats) out << "stat " << k << ' ' << v << '\n';
  for (const auto& row : r.rows) out << "row " << row << '\n';
  for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
    out << "counterexample " << i << ": " << r.counterexamples[i].diagnostic << '\n';
    out << format_tri(r.counterexamples[i].g);
  }
  if (r.report_only) {
    out << "result report-only\n";
  } else {
    out << "result " << (r.pass() ? "pass" : "fail") << '\n';
  }
  return out.str();
}

}  // namespace tri
