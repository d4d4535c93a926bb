#include "doctest.h"
#include "helpers.hpp"
#include "tri/freeness.hpp"
#include "tri/generators.hpp"
#include "tri/oracles.hpp"

using namespace tri;

namespace {

const std::vector<Pattern> kAll{Pattern::ISK4, Pattern::Wheel, Pattern::Diamond, Pattern::K4, Pattern::K33};

// The witness realization restricted to the witness vertices is the pattern.
bool witness_is_valid(const Trigraph& g, const Witness& w, int min_rim) {
  if (w.realization.size() != g.semi_pairs().size()) return false;
  SimpleGraph r = w.realize(g);
  SimpleGraph h(induced(r.trigraph(), VertexSet(w.vertices)).graph);
  const int n = h.size();
  switch (w.kind) {
    case Pattern::ISK4:
      return oracle::induces_K4_subdivision(h);
    case Pattern::Wheel:
      return oracle::is_wheel(h, min_rim);
    case Pattern::Diamond:
      return n == 4 && h.edge_count() == 5;
    case Pattern::K4:
      return n == 4 && h.edge_count() == 6;
    case Pattern::K33: {
      if (n != 6 || h.edge_count() != 9) return false;
      // the only triangle-free cubic graph on six vertices
      for (int v = 0; v < n; ++v)
        if (h.degree(v) != 3) return false;
      for (int v = 0; v < n; ++v)
        for (int u : h.neighbors(v))
          if ((h.neighbors(u) & h.neighbors(v)).size() != 0) return false;
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("freeness") {

TEST_CASE("small named graphs") {
  CHECK(find_ISK4(test::complete(4)));
  CHECK_FALSE(find_ISK4(test::cycle(7)));
  CHECK(find_wheel(test::wheel(4)));
  CHECK(find_wheel(test::wheel(5)));
  CHECK_FALSE(find_wheel(test::complete(4)));
  CHECK(find_wheel(test::complete(4), WheelOptions{3}));
  CHECK(find_diamond(test::wheel(4)));
  CHECK(find_K4(test::complete(5)));
  CHECK_FALSE(find_K4(test::wheel(5)));
  Trigraph prism = make_family("prism", {{1, 1, 1}, {}, {}});
  CHECK_FALSE(find_ISK4(prism));
  CHECK_FALSE(find_wheel(prism));
  Trigraph k33 = make_family("k33", {});
  CHECK(find_K33(k33));
  CHECK_FALSE(find_ISK4(k33));
}

TEST_CASE("semi-adjacent pairs are decided independently") {
  // C4 plus a hub whose spoke to 4 is semi: the wheel needs the spoke present
  Trigraph g = test::wheel(4);
  g.set(0, 4, Adj::Semi);
  auto w = find_wheel(g);
  REQUIRE(w);
  CHECK(witness_is_valid(g, *w, 4));
  // making a rim edge semi too still allows the full realization
  g.set(1, 2, Adj::Semi);
  CHECK(find_wheel(g));
  g.set(1, 2, Adj::StrongAnti);
  CHECK_FALSE(find_wheel(g));
}

TEST_CASE("subdivision of K4 recognizer") {
  CHECK(is_subdivision_of_K4(SimpleGraph(test::complete(4))));
  CHECK(is_subdivision_of_K4(SimpleGraph(line_trigraph_of(SimpleGraph(test::complete(4))))) == false);
  CHECK(is_subdivision_of_K4(k4_subdivision({1, 0, 2, 0, 0, 3})));
  CHECK_FALSE(is_subdivision_of_K4(SimpleGraph(test::cycle(5))));
  CHECK_FALSE(is_subdivision_of_K4(SimpleGraph(test::wheel(4))));
}

TEST_CASE("chordless") {
  CHECK(is_chordless(SimpleGraph(test::cycle(6))));
  CHECK(is_chordless(theta_graph(2, 3, 4)));
  CHECK_FALSE(is_chordless(SimpleGraph(test::complete(4))));
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    SimpleGraph h(random_trigraph(7, 0.3, 0.0, seed));
    CHECK(is_chordless(h) == oracle::chordless_by_cycles(h));
  }
}

TEST_CASE("detectors agree with the realization oracle on n = 5") {
  int mismatches = 0;
  int positives = 0;
  for_each_trigraph(5, true, [&](const Trigraph& g) {
    for (Pattern p : kAll) {
      auto w = trigraph_is_free(g, p);
      bool expected = oracle::contains_pattern(g, p);
      if (w.has_value() != expected || (w && !witness_is_valid(g, *w, 4))) ++mismatches;
      positives += expected;
    }
    return true;
  });
  CHECK(mismatches == 0);
  CHECK(positives > 0);
}

TEST_CASE("detectors agree with the oracle on random 7-vertex trigraphs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Trigraph g = random_trigraph(7, 0.4, 0.1, seed);
    for (Pattern p : {Pattern::ISK4, Pattern::Wheel}) {
      auto w = trigraph_is_free(g, p);
      CHECK(w.has_value() == oracle::contains_pattern(g, p));
      if (w) CHECK(witness_is_valid(g, *w, 4));
    }
  }
}

TEST_CASE("both ISK4 strategies agree") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    SimpleGraph h(random_trigraph(8, 0.3, 0.0, seed));
    auto a = find_ISK4(h, Isk4Strategy::SubsetScan);
    auto b = find_ISK4(h, Isk4Strategy::Backtrack);
    CHECK(a.has_value() == b.has_value());
  }
}

TEST_CASE("restricted search finds only structures through the vertex") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Trigraph g = random_trigraph(7, 0.35, 0.1, seed);
    for (Pattern p : {Pattern::ISK4, Pattern::Wheel}) {
      bool any = false;
      for (int v = 0; v < g.size(); ++v) {
        auto w = find_pattern_through(g, p, v);
        if (!w) continue;
        any = true;
        CHECK(std::find(w->vertices.begin(), w->vertices.end(), v) != w->vertices.end());
        CHECK(witness_is_valid(g, *w, 4));
      }
      CHECK(any == trigraph_is_free(g, p).has_value());
    }
  }
}

TEST_CASE("pattern names") {
  for (Pattern p : kAll) CHECK(parse_pattern(pattern_name(p)) == p);
  CHECK(parse_pattern("isk4") == Pattern::ISK4);
  CHECK_THROWS_AS(parse_pattern("triangle"), InputError);
}

TEST_CASE("witness text record") {
  auto w = find_ISK4(test::complete(4));
  REQUIRE(w);
  std::string s = format_witness(*w);
  CHECK(s.rfind("witness ISK4\nvertices 0 1 2 3\n", 0) == 0);
}

}
