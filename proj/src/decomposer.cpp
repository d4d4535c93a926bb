#include "tri/decomposer.hpp"

#include <algorithm>

#include "json.hpp"

namespace tri {

std::string label_name(ClassLabel l) {
  switch (l) {
    case ClassLabel::SeriesParallel:
      return "SeriesParallel";
    case ClassLabel::ThickCompleteBipartite:
      return "ThickCompleteBipartite";
    case ClassLabel::LineTrigraphBasic:
      return "LineTrigraphBasic";
    case ClassLabel::CliqueCutset:
      return "CliqueCutset";
    case ClassLabel::Stable2Cutset:
      return "Stable2Cutset";
  }
  return "?";
}

bool is_basic(ClassLabel l) {
  return l == ClassLabel::SeriesParallel || l == ClassLabel::ThickCompleteBipartite ||
         l == ClassLabel::LineTrigraphBasic;
}

bool Classification::has(ClassLabel l) const {
  return std::find(labels.begin(), labels.end(), l) != labels.end();
}

bool Classification::any_basic() const {
  return std::any_of(labels.begin(), labels.end(), is_basic);
}

Classification classify(const Trigraph& g) {
  Classification c;
  if (is_series_parallel(g)) c.labels.push_back(ClassLabel::SeriesParallel);
  if (auto cb = as_complete_bipartite(g)) {
    c.complete_bipartite = true;
    if (cb->thick) c.labels.push_back(ClassLabel::ThickCompleteBipartite);
  }
  if (auto root = as_line_trigraph(g)) {
    c.line_trigraph = true;
    c.root_flags = qualify_root(root->h);
    if (c.root_flags->all()) c.labels.push_back(ClassLabel::LineTrigraphBasic);
  }
  c.clique_cutset = find_clique_cutset(g);
  if (c.clique_cutset) c.labels.push_back(ClassLabel::CliqueCutset);
  c.stable_2_cutset = find_stable_2_cutset(g);
  if (c.stable_2_cutset) c.labels.push_back(ClassLabel::Stable2Cutset);
  return c;
}

int DecompositionTree::leaf_count() const {
  return leaf() ? 1 : left->leaf_count() + right->leaf_count();
}

int DecompositionTree::irreducible_count() const {
  if (leaf()) return irreducible() ? 1 : 0;
  return left->irreducible_count() + right->irreducible_count();
}

namespace {

VertexSet lift(VertexSet s, const std::vector<int>& to_host) {
  VertexSet out;
  for (int v : s) out.insert(to_host[v]);
  return out;
}

CutsetReport lift(const CutsetReport& r, const std::vector<int>& to_host) {
  return CutsetReport{r.kind, lift(r.cut, to_host),
                      CutPartition{lift(r.partition.a, to_host), lift(r.partition.b, to_host),
                                   lift(r.partition.c, to_host)}};
}

DecompositionTree build(const Trigraph& g, VertexSet part) {
  Induced sub = induced(g, part);
  DecompositionTree t;
  t.vertices = part;
  Classification c = classify(sub.graph);
  for (ClassLabel l : c.labels) {
    if (is_basic(l)) t.labels.push_back(l);
  }
  if (!t.labels.empty()) return t;
  auto report = c.clique_cutset ? c.clique_cutset : c.stable_2_cutset;
  if (!report) return t;
  t.cut = lift(*report, sub.to_host);
  const CutPartition& p = t.cut->partition;
  t.left = std::make_unique<DecompositionTree>(build(g, p.a | p.c));
  t.right = std::make_unique<DecompositionTree>(build(g, p.b | p.c));
  return t;
}

}  // namespace

DecompositionTree decompose(const Trigraph& g) { return build(g, g.vertices()); }

std::optional<std::string> check_tree(const Trigraph& g, const DecompositionTree& t) {
  Induced sub = induced(g, t.vertices);
  if (t.leaf()) {
    if (t.labels.empty()) return "irreducible leaf on vertices of size " + std::to_string(t.vertices.size());
    return std::nullopt;
  }
  if (classify(sub.graph).any_basic()) return "split on a trigraph with a basic label";
  const CutPartition& p = t.cut->partition;
  if ((p.a | p.b | p.c) != t.vertices || p.a.empty() || p.b.empty() ||
      p.a.intersects(p.b) || p.a.intersects(p.c) || p.b.intersects(p.c) ||
      !g.strongly_anticomplete(p.a, p.b) || p.c != t.cut->cut) {
    return "split partition fails its invariants";
  }
  if (t.cut->kind == CutsetKind::CliqueCutset && !g.is_strong_clique(t.cut->cut)) {
    return "clique-cutset is not a strong clique";
  }
  if (t.cut->kind == CutsetKind::Stable2Cutset &&
      (t.cut->cut.size() != 2 || !g.is_stable(t.cut->cut))) {
    return "stable 2-cutset is not a stable pair";
  }
  if (t.left->vertices != (p.a | p.c) || t.right->vertices != (p.b | p.c)) {
    return "children are not the blocks of the partition";
  }
  if (auto e = check_tree(g, *t.left)) return e;
  return check_tree(g, *t.right);
}

namespace {

nlohmann::json to_json(const DecompositionTree& t) {
  nlohmann::json j;
  j["vertices"] = t.vertices.to_vector();
  if (t.leaf()) {
    j["node"] = "leaf";
    std::vector<std::string> names;
    for (ClassLabel l : t.labels) names.push_back(label_name(l));
    j["labels"] = names;
    if (t.labels.empty()) j["irreducible"] = true;
    return j;
  }
  j["node"] = "split";
  j["cut_kind"] = cutset_kind_name(t.cut->kind);
  j["cut"] = t.cut->cut.to_vector();
  j["a"] = t.cut->partition.a.to_vector();
  j["b"] = t.cut->partition.b.to_vector();
  j["children"] = {to_json(*t.left), to_json(*t.right)};
  return j;
}

}  // namespace

std::string format_tree(const DecompositionTree& t, int indent) {
  return to_json(t).dump(indent) + "\n";
}

}  // namespace tri
