#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "tri/generators.hpp"
#include "tri/oracles.hpp"
#include "tri/structure.hpp"

using namespace tri;

namespace {

Trigraph shuffled(const Trigraph& g, std::uint64_t seed) {
  std::vector<int> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permute(g, perm);
}

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("series-parallel against the K4-subgraph oracle") {
  for_each_trigraph(5, true, [](const Trigraph& g) {
    CHECK(is_series_parallel(g) == !oracle::has_K4_subdivision_subgraph(full_realization(g)));
    return true;
  });
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    SimpleGraph h(random_trigraph(8, 0.35, 0.0, seed));
    CHECK(is_series_parallel(h) == !oracle::has_K4_subdivision_subgraph(h));
  }
  CHECK(is_series_parallel(theta_graph(2, 2, 5)));
  CHECK_FALSE(is_series_parallel(k4_subdivision({2, 0, 1, 0, 3, 0})));
}

TEST_CASE("complete bipartite against the split oracle") {
  for_each_trigraph(5, true, [](const Trigraph& g) {
    auto cb = as_complete_bipartite(g);
    auto expected = oracle::brute_force_bipartition(g);
    CHECK(cb.has_value() == expected.exists);
    if (cb) {
      CHECK(cb->thick == expected.thick);
      CHECK((cb->parts.a | cb->parts.b) == g.vertices());
      CHECK(g.is_strongly_stable(cb->parts.a));
      CHECK(g.is_strongly_stable(cb->parts.b));
      CHECK(g.strongly_complete(cb->parts.a, cb->parts.b));
    }
    return true;
  });
  Trigraph k34 = make_family("complete-bipartite", {{3, 4}, {}, {}});
  auto cb = as_complete_bipartite(k34);
  REQUIRE(cb);
  CHECK(cb->thick);
  CHECK(is_strong_K33(make_family("k33", {})));
  CHECK_FALSE(is_strong_K33(k34));
  Trigraph soft = make_family("k33", {{}, {}, {{0, 3}}});
  CHECK_FALSE(as_complete_bipartite(soft));
}

TEST_CASE("prism recognition") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      Trigraph p = shuffled(make_family("prism", {{a, b, 2}, {}, {}}), a * 10 + b);
      auto pieces = as_prism(p);
      REQUIRE(pieces);
      VertexSet all;
      for (VertexSet s : pieces->pieces()) all |= s;
      CHECK(all == p.vertices());
      for (int i = 0; i < 3; ++i) {
        CHECK(pieces->branches[i].front() == pieces->t1[i]);
        CHECK(pieces->branches[i].back() == pieces->t2[i]);
      }
      CHECK(p.is_strong_clique(pieces->pieces()[0]));
      CHECK(p.is_strong_clique(pieces->pieces()[1]));
    }
  CHECK_FALSE(as_prism(test::cycle(6)));
  CHECK_FALSE(as_prism(make_family("k33", {})));
  // a prism inside a larger trigraph
  Trigraph g(8);
  Trigraph p = make_family("prism", {{1, 2, 1}, {}, {}});
  for (int u = 0; u < p.size(); ++u)
    for (int v = u + 1; v < p.size(); ++v) g.set(u, v, p.theta(u, v));
  g.set(6, 7, Adj::Strong);
  g.set(0, 7, Adj::Strong);
  CHECK(as_prism(g, VertexSet::range(7)));
  CHECK_FALSE(as_prism(g));
}

TEST_CASE("line trigraph round trip on random qualified roots") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    SimpleGraph root = random_qualified_root(rng, 3, 16);
    Trigraph lg = shuffled(line_trigraph_of(root), t);
    auto r = as_line_trigraph(lg);
    REQUIRE(r);
    CHECK(verify_root(lg, *r));
    CHECK(isomorphic(line_graph(r->h).graph.trigraph(), full_realization(lg).trigraph()));
    CHECK(r->h.edge_count() == root.edge_count());
    CHECK(qualify_root(r->h).all());
  }
}

TEST_CASE("line graph of a small root") {
  // claw: its line graph is a triangle
  SimpleGraph claw = SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  LineGraph lg = line_graph(claw);
  CHECK(lg.graph.size() == 3);
  CHECK(lg.graph.edge_count() == 3);
  // the claw itself is not a line graph
  CHECK_FALSE(as_line_trigraph(claw.trigraph()));
  // a triangle with a semi-adjacent side is rejected
  Trigraph t = test::complete(3);
  t.set(0, 1, Adj::Semi);
  CHECK_FALSE(as_line_trigraph(t));
  // semi-adjacency outside triangles is allowed
  Trigraph c = test::cycle(5);
  c.set(0, 1, Adj::Semi);
  CHECK(as_line_trigraph(c));
}

TEST_CASE("root qualification") {
  auto q = qualify_root(SimpleGraph(test::complete(4)));
  CHECK_FALSE(q.chordless);
  CHECK(q.cyclically_3_connected);
  CHECK(q.max_degree_3);
  CHECK(qualify_root(k4_subdivision({1, 1, 1, 1, 1, 1})).all());
  q = qualify_root(SimpleGraph(test::complete(5)));
  CHECK_FALSE(q.max_degree_3);
  CHECK_FALSE(q.chordless);
  q = qualify_root(SimpleGraph(test::cycle(6)));
  CHECK_FALSE(q.cyclically_3_connected);
  CHECK(qualify_root(theta_graph(2, 2, 3)).all());
}

TEST_CASE("connectivity predicates") {
  CHECK(is_two_connected(SimpleGraph(test::cycle(5))));
  CHECK_FALSE(is_three_connected(SimpleGraph(test::cycle(5))));
  CHECK(is_three_connected(SimpleGraph(test::complete(4))));
  CHECK(is_three_connected(SimpleGraph(make_family("k33", {}))));
  CHECK(is_theta(theta_graph(2, 3, 3)));
  CHECK_FALSE(is_theta(SimpleGraph(test::cycle(4))));
  CHECK(is_cyclically_3_connected(theta_graph(2, 3, 3)));
  CHECK_FALSE(is_cyclically_3_connected(SimpleGraph(test::cycle(4))));
  CHECK(is_subdivision_of_3connected(k4_subdivision({1, 1, 0, 0, 2, 0})));
  // two squares sharing one vertex
  SimpleGraph bowtie = SimpleGraph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
  CHECK_FALSE(is_two_connected(bowtie));
  CHECK_FALSE(is_cyclically_3_connected(bowtie));
}

TEST_CASE("root JSON") {
  SimpleGraph claw = SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  auto r = as_line_trigraph(line_graph(claw).graph.trigraph());
  REQUIRE(r);
  CHECK(format_root(*r).find("\"vertices\":4") != std::string::npos);
}

}
