#include <bit>
#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "tri/generators.hpp"
#include "tri/io.hpp"
#include "tri/oracles.hpp"
#include "tri/trigraph.hpp"

using namespace tri;

TEST_SUITE("trigraph") {

TEST_CASE("vertex set algebra") {
  VertexSet a{0, 2, 5};
  VertexSet b{2, 3};
  CHECK((a | b) == VertexSet{0, 2, 3, 5});
  CHECK((a & b) == VertexSet{2});
  CHECK((a - b) == VertexSet{0, 5});
  CHECK(a.size() == 3);
  CHECK(a.first() == 0);
  CHECK(VertexSet{}.first() == -1);
  CHECK(VertexSet{2}.subset_of(a));
  CHECK_FALSE(b.subset_of(a));
  CHECK(a.to_vector() == std::vector<int>{0, 2, 5});
  CHECK(VertexSet::range(64).size() == 64);
}

TEST_CASE("adjacency predicates follow theta") {
  Trigraph g(3);
  g.set(0, 1, Adj::Strong);
  g.set(1, 2, Adj::Semi);
  CHECK(g.theta(1, 0) == Adj::Strong);
  CHECK(g.adjacent(1, 2));
  CHECK(g.anti_adjacent(1, 2));
  CHECK(g.semi_adjacent(2, 1));
  CHECK_FALSE(g.strongly_adjacent(1, 2));
  CHECK(g.strongly_anti_adjacent(0, 2));
  CHECK(g.neighbors(1) == VertexSet{0, 2});
  CHECK(g.strong_neighbors(1) == VertexSet{0});
  CHECK(g.semi_pairs() == std::vector<Pair>{{1, 2}});
  CHECK(g.is_clique(VertexSet{1, 2}));
  CHECK_FALSE(g.is_strong_clique(VertexSet{1, 2}));
  CHECK(g.is_stable(VertexSet{1, 2}));
  CHECK_FALSE(g.is_strongly_stable(VertexSet{1, 2}));
  g.set(1, 2, Adj::StrongAnti);
  CHECK(g.neighbors(2).empty());
}

TEST_CASE("invalid construction throws") {
  CHECK_THROWS_AS(Trigraph(65), InputError);
  Trigraph g(3);
  CHECK_THROWS_AS(g.set(1, 1, Adj::Strong), InputError);
  CHECK_THROWS_AS(g.set(0, 3, Adj::Strong), InputError);
  CHECK_THROWS_AS(SimpleGraph(test::from_pairs(2, {}, {{0, 1}})), InputError);
}

TEST_CASE("complement negates theta") {
  Trigraph g = test::from_pairs(4, {{0, 1}, {2, 3}}, {{1, 2}});
  Trigraph c = complement(g);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) CHECK(c.theta(u, v) == negate(g.theta(u, v)));
  CHECK(complement(c) == g);
}

TEST_CASE("realizations enumerate every decision") {
  Trigraph g = test::from_pairs(4, {{0, 1}}, {{1, 2}, {2, 3}, {0, 3}});
  std::vector<int> edge_counts;
  for_each_realization(g, [&](const SimpleGraph& h, std::uint64_t) {
    edge_counts.push_back(h.edge_count());
    return true;
  });
  REQUIRE(edge_counts.size() == 8);
  // one strong edge plus popcount of the decision mask
  for (std::size_t d = 0; d < 8; ++d) CHECK(edge_counts[d] == 1 + std::popcount(d));
  CHECK(full_realization(g).edge_count() == 4);
  CHECK(null_realization(g).edge_count() == 1);
  RealizationStream s(g);
  CHECK(s.total() == 8);
  int seen = 0;
  while (s.next()) ++seen;
  CHECK(seen == 8);
}

TEST_CASE("induced subtrigraph keeps theta") {
  Trigraph g = test::from_pairs(5, {{0, 1}, {1, 4}, {3, 4}}, {{0, 4}});
  Induced sub = induced(g, VertexSet{0, 1, 4});
  CHECK(sub.to_host == std::vector<int>{0, 1, 4});
  CHECK(sub.graph.size() == 3);
  CHECK(sub.graph.theta(0, 2) == Adj::Semi);
  CHECK(sub.graph.theta(1, 2) == Adj::Strong);
  CHECK(delete_vertices(g, VertexSet{2, 3}) == sub.graph);
}

TEST_CASE("components agree with the search oracle") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Trigraph g = random_trigraph(9, 0.12, 0.08, seed);
    std::mt19937_64 rng(seed);
    VertexSet within(rng() & VertexSet::range(9).bits());
    CHECK(is_connected(g, within) == oracle::connected_by_search(g, within));
    VertexSet all;
    for (VertexSet c : components(g, within)) {
      CHECK_FALSE(c.intersects(all));
      CHECK(oracle::connected_by_search(g, c));
      all |= c;
    }
    CHECK(all == within);
  }
}

TEST_CASE("narrow paths") {
  Trigraph p = test::from_pairs(4, {{0, 1}, {2, 3}}, {{1, 2}});
  CHECK(is_narrow_path(p, {0, 1, 2, 3}));
  CHECK(is_narrow_path_trigraph(p));
  p.set(0, 3, Adj::Semi);
  CHECK_FALSE(is_narrow_path(p, {0, 1, 2, 3}));
  CHECK_FALSE(is_narrow_path_trigraph(p));
  Trigraph c = test::cycle(6);
  auto np = find_narrow_path(c, 0, 3);
  REQUIRE(np);
  CHECK(np->length() == 3);
  CHECK(is_narrow_path(c, np->order));
}

TEST_CASE("branches") {
  // theta: 0 and 1 joined by paths of lengths 2, 2, 3
  Trigraph g = test::from_pairs(6, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}});
  BranchStructure bs = branch_structure(g);
  CHECK(bs.branch_vertices == VertexSet{0, 1});
  REQUIRE(bs.branches.size() == 3);
  for (const auto& b : bs.branches) {
    CHECK((b.path.front() == 0 && b.path.back() == 1));
    CHECK(b.flat);
  }
  CHECK(bs.flat_branches().size() == 3);
  // a direct edge 0-1 makes the longer paths non-narrow
  g.set(0, 1, Adj::Strong);
  bs = branch_structure(g);
  REQUIRE(bs.branches.size() == 1);
  CHECK(bs.branches[0].path.order == std::vector<int>{0, 1});
  CHECK(branch_structure(test::cycle(5)).branches.empty());
  // prism: triangle edges are branches but not flat
  Trigraph p = test::from_pairs(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  bs = branch_structure(p);
  CHECK(bs.branch_vertices.size() == 6);
  CHECK(bs.flat_branches().size() == 3);
  CHECK(strong_triangles(p).size() == 2);
}

TEST_CASE("tri round trip") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Trigraph g = random_trigraph(1 + static_cast<int>(seed % 12), 0.3, 0.2, seed);
    CHECK(parse_tri(format_tri(g)) == g);
  }
}

TEST_CASE("tri parsing") {
  Trigraph g = parse_tri("# comment\ntrigraph 3\n0 1 +  # strong\n\n2 1 0\n");
  CHECK(g.theta(0, 1) == Adj::Strong);
  CHECK(g.theta(1, 2) == Adj::Semi);
  CHECK(g.theta(0, 2) == Adj::StrongAnti);
  CHECK(parse_tri("trigraph 0\n").size() == 0);
  CHECK_THROWS_AS(parse_tri(""), InputError);
  CHECK_THROWS_AS(parse_tri("graph 3\n"), InputError);
  CHECK_THROWS_AS(parse_tri("trigraph 3\n0 3 +\n"), InputError);
  CHECK_THROWS_AS(parse_tri("trigraph 3\n1 1 +\n"), InputError);
  CHECK_THROWS_AS(parse_tri("trigraph 3\n0 1 x\n"), InputError);
  CHECK_THROWS_AS(parse_tri("trigraph 3\n0 1 + extra\n"), InputError);
  CHECK_THROWS_AS(parse_tri("trigraph -1\n"), InputError);
  CHECK_THROWS_AS(load_tri("/nonexistent/file.tri"), InputError);
}

}
