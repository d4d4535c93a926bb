#include "tri/cutsets.hpp"

#include <functional>
#include <sstream>

namespace tri {

std::string cutset_kind_name(CutsetKind k) {
  return k == CutsetKind::CliqueCutset ? "CliqueCutset" : "Stable2Cutset";
}

bool is_cutset(const Trigraph& g, VertexSet cut) {
  return components(g, g.vertices() - cut).size() >= 2;
}

std::optional<CutPartition> cut_partition_for(const Trigraph& g, VertexSet cut) {
  if (!cut.subset_of(g.vertices())) throw InputError("cut contains unknown vertices");
  auto comps = components(g, g.vertices() - cut);
  if (comps.size() < 2) return std::nullopt;
  CutPartition p{comps[0], g.vertices() - cut - comps[0], cut};
  if (!is_valid_cut_partition(g, p)) throw ConsistencyError("cut partition failed validation");
  return p;
}

bool is_valid_cut_partition(const Trigraph& g, const CutPartition& p) {
  if (p.a.empty() || p.b.empty()) return false;
  if (p.a.intersects(p.b) || p.a.intersects(p.c) || p.b.intersects(p.c)) return false;
  if ((p.a | p.b | p.c) != g.vertices()) return false;
  return g.strongly_anticomplete(p.a, p.b);
}

std::optional<CutsetReport> find_clique_cutset(const Trigraph& g) {
  if (g.size() < 2) return std::nullopt;
  std::optional<CutsetReport> found;
  // Strong cliques of size k in lexicographic order, k ascending.
  std::function<bool(int, int, VertexSet)> grow = [&](int k, int from, VertexSet clique) {
    if (clique.size() == k) {
      auto p = cut_partition_for(g, clique);
      if (!p) return false;
      found = CutsetReport{CutsetKind::CliqueCutset, clique, *p};
      return true;
    }
    for (int v = from; v < g.size(); ++v) {
      if (!clique.subset_of(g.strong_neighbors(v))) continue;
      if (grow(k, v + 1, clique | VertexSet::single(v))) return true;
    }
    return false;
  };
  for (int k = 0; k <= g.size() - 2; ++k) {
    if (grow(k, 0, VertexSet{})) return found;
  }
  return std::nullopt;
}

std::optional<CutsetReport> find_stable_2_cutset(const Trigraph& g) {
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) {
      if (!g.anti_adjacent(u, v)) continue;
      auto p = cut_partition_for(g, VertexSet{u, v});
      if (p) return CutsetReport{CutsetKind::Stable2Cutset, VertexSet{u, v}, *p};
    }
  }
  return std::nullopt;
}

std::string format_cutset(const CutsetReport& r) {
  std::ostringstream out;
  auto list = [&](const char* name, VertexSet s) {
    out << name;
    for (int v : s) out << ' ' << v;
    out << '\n';
  };
  out << "cutset " << cutset_kind_name(r.kind) << '\n';
  list("cut", r.cut);
  list("a", r.partition.a);
  list("b", r.partition.b);
  list("c", r.partition.c);
  return out.str();
}

}  // namespace tri
