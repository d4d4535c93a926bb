#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "tri/generators.hpp"
#include "tri/structure.hpp"

using namespace tri;

TEST_SUITE("generators") {

TEST_CASE("labeled enumeration size") {
  for (int n = 0; n <= 4; ++n) {
    std::uint64_t count = 0;
    for_each_trigraph(n, false, [&](const Trigraph&) {
      ++count;
      return true;
    });
    std::uint64_t expected = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) expected *= 3;
    CHECK(count == expected);
  }
  CHECK_THROWS_AS(for_each_trigraph(kLabeledEnumerationBound + 1, false, [](const Trigraph&) { return true; }),
                  InputError);
}

TEST_CASE("isomorphism classes match the Burnside count") {
  for (int n = 0; n <= 5; ++n) {
    auto classes = trigraph_classes(n);
    CHECK(classes.size() == count_classes_brute_force(n));
    std::set<CanonicalCode> codes;
    for (const auto& g : classes) codes.insert(canonical_code(g));
    CHECK(codes.size() == classes.size());
  }
  // 1, 1, 3, 10, 66, 792
  CHECK(count_classes_brute_force(4) == 66);
}

TEST_CASE("canonical code is invariant under relabelling") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Trigraph g = random_trigraph(8, 0.3, 0.2, seed);
    std::vector<int> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Trigraph h = permute(g, perm);
    CHECK(canonical_code(g) == canonical_code(h));
    CHECK(isomorphic(g, h));
    for (int u = 0; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v) CHECK(h.theta(perm[u], perm[v]) == g.theta(u, v));
  }
  // highly symmetric inputs: line trigraphs of cubic roots with a few semi pairs
  for (int t = 0; t < 60; ++t) {
    Trigraph g = line_trigraph_of(random_qualified_root(rng, 2, 16));
    for (int u = 0; u < g.size(); ++u)
      for (int v : g.neighbors(u))
        if (u < v && rng() % 6 == 0) g.set(u, v, Adj::Semi);
    std::vector<int> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_code(g) == canonical_code(permute(g, perm)));
  }
  CHECK_FALSE(isomorphic(test::cycle(6), make_family("prism", {{1, 1, 1}, {}, {}})));
  Trigraph a = test::cycle(4);
  Trigraph b = test::cycle(4);
  a.set(0, 1, Adj::Semi);
  b.set(0, 2, Adj::Semi);
  CHECK_FALSE(isomorphic(a, b));
}

TEST_CASE("named families") {
  CHECK(make_family("prism", {{2, 1, 3}, {}, {}}).size() == 9);
  CHECK(make_family("theta", {{2, 2, 3}, {}, {}}).size() == 6);
  CHECK(make_family("complete-bipartite", {{2, 5}, {}, {}}).size() == 7);
  CHECK(SimpleGraph(make_family("k4-subdivision", {{0, 0, 0, 0, 0, 0}, {}, {}})).edge_count() == 6);
  CHECK(make_family("line-k4-subdivision", {{1, 1, 1, 1, 1, 1}, {}, {}}).size() == 12);
  CHECK(make_family("cycle", {{7}, {}, {}}) == test::cycle(7));
  CHECK(make_family("complete", {{5}, {}, {}}) == test::complete(5));
  Trigraph p = make_family("path", {{4}, {}, {{1, 2}}});
  CHECK(p.semi_adjacent(1, 2));
  CHECK(is_narrow_path_trigraph(p));
  Trigraph lrs = make_family("long-rich-square", {{1, 2}, {0, 1}, {}});
  // square plus l + 1 vertices per link
  CHECK(lrs.size() == 4 + 2 + 3);
  CHECK_THROWS_AS(make_family("prism", {{1, 1}, {}, {}}), InputError);
  CHECK_THROWS_AS(make_family("theta", {{1, 2, 2}, {}, {}}), InputError);
  CHECK_THROWS_AS(make_family("nonsense", {}), InputError);
  CHECK(family_names().size() == 10);
}

TEST_CASE("subdivision and line trigraph helpers") {
  SimpleGraph k4 = k4_subdivision({1, 0, 2, 0, 0, 0});
  CHECK(k4.size() == 7);
  CHECK(k4.edge_count() == 9);
  SimpleGraph s = subdivide(SimpleGraph(test::cycle(3)), {1, 1, 1});
  CHECK(SimpleGraph(test::cycle(6)).edge_count() == s.edge_count());
  CHECK(isomorphic(s.trigraph(), test::cycle(6)));
  Trigraph lt = line_trigraph_of(SimpleGraph(test::cycle(5)));
  CHECK(isomorphic(lt, test::cycle(5)));
}

TEST_CASE("random generators are seeded") {
  CHECK(random_trigraph(9, 0.3, 0.1, 42) == random_trigraph(9, 0.3, 0.1, 42));
  CHECK_FALSE(random_trigraph(9, 0.3, 0.1, 42) == random_trigraph(9, 0.3, 0.1, 43));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10000; ++i) {
    double u = unit(rng);
    CHECK((u >= 0.0 && u < 1.0));
    int k = uniform_int(rng, -2, 3);
    CHECK((k >= -2 && k <= 3));
  }
}

TEST_CASE("random free trigraphs are free") {
  const std::vector<Pattern> ps{Pattern::ISK4, Pattern::Wheel};
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = random_free_trigraph(8, ps, seed);
    REQUIRE(g);
    CHECK(g->size() == 8);
    CHECK(is_free(*g, ps));
  }
}

TEST_CASE("random qualified roots qualify") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    SimpleGraph h = random_qualified_root(rng, 3, 30);
    CHECK(h.edge_count() <= 30);
    CHECK(qualify_root(h).all());
  }
}

TEST_CASE("grown instances keep the base and stay free") {
  const std::vector<Pattern> ps{Pattern::ISK4, Pattern::Wheel, Pattern::Diamond};
  Trigraph base = make_family("prism", {{2, 3, 2}, {}, {}});
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Trigraph g = grow_free_instance(base, 4, ps, seed);
    CHECK(g.size() >= base.size());
    CHECK(g.size() <= base.size() + 4);
    CHECK(induced(g, VertexSet::range(base.size())).graph == base);
    CHECK(is_free(g, ps));
    CHECK(grow_free_instance(base, 4, ps, seed) == g);
  }
}

}
