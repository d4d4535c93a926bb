#include "tri/attachments.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tri/freeness.hpp"

namespace tri {

HostStructure host_structure(const Trigraph& g, VertexSet host) {
  Induced sub = induced(g, host);
  const auto& m = sub.to_host;
  HostStructure hs;
  hs.host = host;
  for (VertexSet t : strong_triangles(sub.graph)) {
    VertexSet mapped;
    for (int v : t) mapped.insert(m[v]);
    hs.strong_triangles.push_back(mapped);
  }
  for (NarrowPath p : branch_structure(sub.graph).flat_branches()) {
    for (int& v : p.order) v = m[v];
    hs.flat_branches.push_back(std::move(p));
  }
  return hs;
}

AttachmentReport attachment(const Trigraph& g, const HostStructure& hs, VertexSet part) {
  if (hs.host.intersects(part)) throw InputError("attachment: host and part overlap");
  if (!part.subset_of(g.vertices())) throw InputError("attachment: unknown vertex");
  AttachmentReport r;
  for (int v : part) r.over |= g.neighbors(v) & hs.host;
  r.type_triangle = std::any_of(hs.strong_triangles.begin(), hs.strong_triangles.end(),
                                [&](VertexSet t) { return r.over.subset_of(t); });
  r.type_branch = std::any_of(hs.flat_branches.begin(), hs.flat_branches.end(),
                              [&](const NarrowPath& b) { return r.over.subset_of(b.vertex_set()); });
  return r;
}

AttachmentReport attachment(const Trigraph& g, VertexSet host, VertexSet part) {
  if (!host.subset_of(g.vertices())) throw InputError("attachment: unknown vertex");
  if (host.intersects(part)) throw InputError("attachment: host and part overlap");
  return attachment(g, host_structure(g, host), part);
}

std::optional<AugmentingPathCertificate> is_augmenting_path(const Trigraph& g, VertexSet host,
                                                            const NarrowPath& path) {
  if (path.order.size() < 2) return std::nullopt;
  if (path.vertex_set().intersects(host)) throw InputError("augmenting path meets the host");
  if (!is_narrow_path(g, path.order)) return std::nullopt;
  if (!g.strongly_anticomplete(path.interior(), host)) return std::nullopt;
  HostStructure hs = host_structure(g, host);

  AugmentingPathCertificate cert{path, {}, {}};
  std::array<std::vector<int>, 2> candidates;
  const std::array<int, 2> ends{path.front(), path.back()};
  for (int e = 0; e < 2; ++e) {
    int x = ends[e];
    VertexSet nb = g.neighbors(x) & host;
    if (nb.size() != 2) return std::nullopt;
    VertexSet tri = nb | VertexSet::single(x);
    if (!g.is_strong_clique(tri)) return std::nullopt;
    cert.endpoint_triangles[e] = tri;
    for (std::size_t i = 0; i < hs.flat_branches.size(); ++i) {
      if (nb.subset_of(hs.flat_branches[i].vertex_set())) candidates[e].push_back(static_cast<int>(i));
    }
  }
  for (int fa : candidates[0]) {
    for (int fb : candidates[1]) {
      if (fa != fb) {
        cert.host_branches = {hs.flat_branches[fa], hs.flat_branches[fb]};
        return cert;
      }
    }
  }
  return std::nullopt;
}

std::string host_shape_name(HostShape s) {
  switch (s) {
    case HostShape::Prism:
      return "prism";
    case HostShape::K4Line:
      return "k4-line";
    case HostShape::QualifiedLine:
      return "qualified-line";
  }
  return "?";
}

std::optional<HostShape> host_shape(const Trigraph& g, VertexSet host) {
  if (as_prism(g, host)) return HostShape::Prism;
  Induced sub = induced(g, host);
  auto root = as_line_trigraph(sub.graph);
  if (!root) return std::nullopt;
  if (is_subdivision_of_K4(root->h) && is_chordless(root->h)) return HostShape::K4Line;
  if (qualify_root(root->h).all()) return HostShape::QualifiedLine;
  return std::nullopt;
}

std::optional<VertexSet> minimal_violator(const Trigraph& g, VertexSet host) {
  if (!host_shape(g, host)) throw InputError("minimal_violator: unsupported host shape");
  HostStructure hs = host_structure(g, host);
  auto untyped = [&](VertexSet part) {
    auto r = attachment(g, hs, part);
    return !r.type_triangle && !r.type_branch;
  };
  // A connected untyped set lies inside an untyped component, and every
  // superset of an untyped set is untyped.
  for (VertexSet comp : components(g, g.vertices() - host)) {
    if (!untyped(comp)) continue;
    VertexSet p = comp;
    bool shrunk = true;
    while (shrunk) {
      shrunk = false;
      for (int v : p) {
        VertexSet q = p - VertexSet::single(v);
        if (!q.empty() && is_connected(g, q) && untyped(q)) {
          p = q;
          shrunk = true;
          break;
        }
      }
    }
    return p;
  }
  return std::nullopt;
}

VertexSet K4LinePieces::vertices() const {
  VertexSet s;
  for (const auto& p : paths) s |= p.vertex_set();
  return s;
}

std::array<VertexSet, 6> K4LinePieces::prism_hosts() const {
  std::array<VertexSet, 6> out;
  VertexSet all = vertices();
  for (int i = 0; i < 6; ++i) out[i] = all - paths[i].vertex_set();
  return out;
}

std::vector<VertexSet> K4LinePieces::pieces() const {
  std::vector<VertexSet> out(triangles.begin(), triangles.end());
  for (const auto& p : paths) out.push_back(p.vertex_set());
  return out;
}

std::optional<K4LinePieces> pieces_of_K4_line(const Trigraph& g, VertexSet host) {
  Induced sub = induced(g, host);
  auto root = as_line_trigraph(sub.graph);
  if (!root) return std::nullopt;
  const SimpleGraph& h = root->h;
  if (!is_subdivision_of_K4(h) || !is_chordless(h)) return std::nullopt;

  std::map<Pair, int> edge_vertex;
  for (std::size_t v = 0; v < root->vertex_edge.size(); ++v) {
    auto [a, b] = root->vertex_edge[v];
    edge_vertex[{std::min(a, b), std::max(a, b)}] = sub.to_host[v];
  }
  auto line_vertex = [&](int a, int b) { return edge_vertex.at({std::min(a, b), std::max(a, b)}); };

  std::vector<int> corners;
  for (int v = 0; v < h.size(); ++v) {
    if (h.degree(v) == 3) corners.push_back(v);
  }
  K4LinePieces out;
  for (int i = 0; i < 4; ++i) {
    for (int w : h.neighbors(corners[i])) out.triangles[i].insert(line_vertex(corners[i], w));
  }
  auto corner_index = [&](int v) {
    return static_cast<int>(std::find(corners.begin(), corners.end(), v) - corners.begin());
  };
  for (int i = 0; i < 4; ++i) {
    const int x = corners[i];
    for (int first : h.neighbors(x)) {
      std::vector<int> order{line_vertex(x, first)};
      int prev = x, cur = first;
      while (h.degree(cur) == 2) {
        int next = (h.neighbors(cur) - VertexSet::single(prev)).first();
        order.push_back(line_vertex(cur, next));
        prev = cur;
        cur = next;
      }
      const int j = corner_index(cur);
      if (j <= i) continue;
      for (int k = 0; k < 6; ++k) {
        if (K4LinePieces::kCornerPairs[k][0] == i && K4LinePieces::kCornerPairs[k][1] == j) {
          out.paths[k] = NarrowPath{order};
        }
      }
    }
  }
  return out;
}

VertexSet extend_line_trigraph(const Trigraph& g, VertexSet host,
                               const AugmentingPathCertificate& aug) {
  Induced before = induced(g, host);
  auto root_before = as_line_trigraph(before.graph);
  if (!root_before || !qualify_root(root_before->h).all()) {
    throw InputError("extend_line_trigraph: host is not a qualified line trigraph");
  }
  if (!is_augmenting_path(g, host, aug.path)) {
    throw InputError("extend_line_trigraph: path is not augmenting");
  }
  VertexSet result = host | aug.path.vertex_set();
  auto root_after = as_line_trigraph(induced(g, result).graph);
  if (!root_after || !qualify_root(root_after->h).all()) {
    throw ConsistencyError("extended host is not a qualified line trigraph");
  }
  if (root_after->h.edge_count() != root_before->h.edge_count() + aug.path.length() + 1) {
    throw ConsistencyError("extended root has an unexpected edge count");
  }
  return result;
}

std::string format_certificate(const AugmentingPathCertificate& c) {
  std::ostringstream out;
  auto list = [&](const std::vector<int>& vs) {
    for (int v : vs) out << ' ' << v;
  };
  out << "augmenting-path";
  list(c.path.order);
  for (int e = 0; e < 2; ++e) {
    out << "\nendpoint-triangle";
    list(c.endpoint_triangles[e].to_vector());
    out << "\nhost-branch";
    list(c.host_branches[e].order);
  }
  out << '\n';
  return out.str();
}

}  // namespace tri
