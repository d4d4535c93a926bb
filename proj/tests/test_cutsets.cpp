#include "doctest.h"
#include "helpers.hpp"
#include "tri/cutsets.hpp"
#include "tri/generators.hpp"
#include "tri/oracles.hpp"

using namespace tri;

namespace {

bool separates(const Trigraph& g, VertexSet cut) {
  VertexSet rest = g.vertices() - cut;
  return rest.size() >= 2 && !oracle::connected_by_search(g, rest);
}

// size of the smallest strong-clique separator, -1 if none
int smallest_clique_cut(const Trigraph& g) {
  int best = -1;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.size()); ++bits) {
    VertexSet c(bits);
    if (g.is_strong_clique(c) && separates(g, c) && (best < 0 || c.size() < best)) best = c.size();
  }
  return best;
}

bool has_stable_2_cut(const Trigraph& g) {
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.anti_adjacent(u, v) && separates(g, VertexSet{u, v})) return true;
  return false;
}

}  // namespace

TEST_SUITE("cutsets") {

TEST_CASE("clique cutsets against subset enumeration") {
  for_each_trigraph(5, true, [](const Trigraph& g) {
    auto r = find_clique_cutset(g);
    int best = smallest_clique_cut(g);
    CHECK(r.has_value() == (best >= 0));
    if (r) {
      CHECK(r->kind == CutsetKind::CliqueCutset);
      CHECK(r->cut.size() == best);
      CHECK(g.is_strong_clique(r->cut));
      CHECK(is_valid_cut_partition(g, r->partition));
    }
    return true;
  });
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    Trigraph g = random_trigraph(9, 0.25, 0.1, seed);
    auto r = find_clique_cutset(g);
    int best = smallest_clique_cut(g);
    CHECK(r.has_value() == (best >= 0));
    if (r) CHECK(r->cut.size() == best);
  }
}

TEST_CASE("stable 2-cutsets against pair enumeration") {
  for_each_trigraph(5, true, [](const Trigraph& g) {
    auto r = find_stable_2_cutset(g);
    CHECK(r.has_value() == has_stable_2_cut(g));
    if (r) {
      CHECK(r->cut.size() == 2);
      CHECK(g.is_stable(r->cut));
      CHECK(is_valid_cut_partition(g, r->partition));
    }
    return true;
  });
}

TEST_CASE("cut partitions") {
  Trigraph c6 = test::cycle(6);
  CHECK(is_cutset(c6, VertexSet{0, 3}));
  CHECK_FALSE(is_cutset(c6, VertexSet{0, 1}));
  auto p = cut_partition_for(c6, VertexSet{0, 3});
  REQUIRE(p);
  CHECK(p->a == VertexSet{1, 2});
  CHECK(p->b == VertexSet{4, 5});
  CHECK(p->c == VertexSet{0, 3});
  CHECK(is_valid_cut_partition(c6, *p));
  CHECK_FALSE(is_valid_cut_partition(c6, CutPartition{VertexSet{1}, VertexSet{2, 4, 5}, VertexSet{0, 3}}));
  CHECK_FALSE(cut_partition_for(c6, VertexSet{0}));
}

TEST_CASE("named examples") {
  CHECK_FALSE(find_clique_cutset(test::cycle(5)));
  auto r = find_stable_2_cutset(test::cycle(5));
  REQUIRE(r);
  CHECK(r->cut == VertexSet{0, 2});
  // two triangles sharing an edge: the shared edge is a clique cutset
  Trigraph d = test::from_pairs(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  r = find_clique_cutset(d);
  REQUIRE(r);
  CHECK(r->cut == VertexSet{1, 2});
  // the same with a semi-adjacent shared pair is reported as a stable 2-cutset
  d.set(1, 2, Adj::Semi);
  CHECK_FALSE(find_clique_cutset(d));
  CHECK(find_stable_2_cutset(d));
  // disconnected: empty clique cutset
  r = find_clique_cutset(Trigraph(3));
  REQUIRE(r);
  CHECK(r->cut.empty());
  CHECK(format_cutset(*r).rfind("cutset CliqueCutset", 0) == 0);
}

}
