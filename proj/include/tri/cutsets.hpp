#pragma once

#include <optional>
#include <string>

#include "tri/trigraph.hpp"

namespace tri {

/// (a, b, c) partitions V; a and b non-empty; a strongly anti-complete to b.
struct CutPartition {
  VertexSet a;
  VertexSet b;
  VertexSet c;
  bool operator==(const CutPartition&) const = default;
};

enum class CutsetKind { CliqueCutset, Stable2Cutset };

std::string cutset_kind_name(CutsetKind k);

struct CutsetReport {
  CutsetKind kind = CutsetKind::CliqueCutset;
  VertexSet cut;
  CutPartition partition;
};

/// The trigraph with `cut` deleted has at least two components.
bool is_cutset(const Trigraph& g, VertexSet cut);

/// a = component holding the smallest remaining vertex, b = the rest.
std::optional<CutPartition> cut_partition_for(const Trigraph& g, VertexSet cut);

bool is_valid_cut_partition(const Trigraph& g, const CutPartition& p);

/// Smallest strong clique whose deletion disconnects g, ties broken
/// lexicographically. The empty set qualifies when g is disconnected.
std::optional<CutsetReport> find_clique_cutset(const Trigraph& g);

/// Lexicographically first anti-adjacent pair whose deletion disconnects g.
/// Semi-adjacent pairs are reported here, never as clique-cutsets.
std::optional<CutsetReport> find_stable_2_cutset(const Trigraph& g);

/// Structured text: kind, cut vertices, partition blocks.
std::string format_cutset(const CutsetReport& r);

}  // namespace tri
