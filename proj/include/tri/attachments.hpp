#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tri/structure.hpp"
#include "tri/trigraph.hpp"

namespace tri {

/// Strong triangles and flat branches of g[host], in g coordinates.
struct HostStructure {
  VertexSet host;
  std::vector<VertexSet> strong_triangles;
  std::vector<NarrowPath> flat_branches;
};

HostStructure host_structure(const Trigraph& g, VertexSet host);

struct AttachmentReport {
  VertexSet over;             ///< host vertices with a neighbour in the part
  bool type_triangle = false; ///< over lies inside a strong triangle of the host
  bool type_branch = false;   ///< over lies inside a flat branch of the host
};

/// Throws InputError if host and part overlap or leave the vertex range.
AttachmentReport attachment(const Trigraph& g, VertexSet host, VertexSet part);
AttachmentReport attachment(const Trigraph& g, const HostStructure& host, VertexSet part);

struct AugmentingPathCertificate {
  NarrowPath path;
  /// {endpoint, x1, x2} for the front and back endpoints.
  std::array<VertexSet, 2> endpoint_triangles;
  /// Distinct flat branches of the host holding x1 x2 for each endpoint.
  std::array<NarrowPath, 2> host_branches;
};

std::optional<AugmentingPathCertificate> is_augmenting_path(const Trigraph& g, VertexSet host,
                                                            const NarrowPath& path);

enum class HostShape {
  Prism,
  K4Line,         ///< line trigraph of a chordless subdivision of K4
  QualifiedLine,  ///< line trigraph of a cyclically 3-connected chordless graph, max degree 3
};

std::string host_shape_name(HostShape s);
/// Most specific shape of g[host], if any.
std::optional<HostShape> host_shape(const Trigraph& g, VertexSet host);

/// Inclusion-wise minimal connected set outside the host that is neither of type
/// triangle nor of type branch. Found by shrinking an untyped component,
/// deleting the smallest removable vertex first. Throws InputError when
/// g[host] has none of the supported shapes.
std::optional<VertexSet> minimal_violator(const Trigraph& g, VertexSet host);

/// Named pieces of a line trigraph of a chordless K4 subdivision, in g
/// coordinates. Corners a < b < c < d are the root's degree-3 vertices.
struct K4LinePieces {
  std::array<VertexSet, 4> triangles;  ///< T_a, T_b, T_c, T_d
  /// P_ab, P_ac, P_ad, P_bc, P_bd, P_cd, each running from T_x to T_y.
  std::array<NarrowPath, 6> paths;

  static constexpr std::array<std::array<int, 2>, 6> kCornerPairs{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

  VertexSet vertices() const;
  /// host minus V(P_xy) for each of the six paths; each is a prism.
  std::array<VertexSet, 6> prism_hosts() const;
  /// The four triangles followed by the six path vertex sets.
  std::vector<VertexSet> pieces() const;
};

std::optional<K4LinePieces> pieces_of_K4_line(const Trigraph& g, VertexSet host);

/// host plus the augmenting path; the result is re-recognized as a line
/// trigraph of a qualified root with one more path in the root. Throws
/// InputError if the preconditions fail and ConsistencyError if the
/// re-recognition fails.
VertexSet extend_line_trigraph(const Trigraph& g, VertexSet host,
                               const AugmentingPathCertificate& aug);

std::string format_certificate(const AugmentingPathCertificate& c);

}  // namespace tri
