// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tri/generators.hpp"
#include "tri/io.hpp"
#include "tri/oracles.hpp"
#include "tri/structure.hpp"
#include "tri/verifier.hpp"

using namespace tri;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void run(const char* id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = o.ok && secs <= limit_seconds;
  if (!ok) ++failures;
  std::printf("%s %s %s: %s (%.2f s, limit %.0f s)\n", id, ok ? "PASS" : "FAIL", title, o.detail.c_str(), secs,
              limit_seconds);
  std::fflush(stdout);
}

bool has_row(const PropertyReport& r, const std::string& row) {
  return std::find(r.rows.begin(), r.rows.end(), row) != r.rows.end();
}

std::string brief(const PropertyReport& r) {
  std::ostringstream out;
  out << r.instances << " instances, " << r.failures << " counterexamples";
  return out.str();
}

Outcome theorem() {
  // free count on four vertices from the realization oracle
  std::uint64_t oracle_free = 0;
  for_each_trigraph(4, false, [&](const Trigraph& g) {
    oracle_free += !oracle::contains_pattern(g, Pattern::ISK4) && !oracle::contains_pattern(g, Pattern::Wheel);
    return true;
  });
  VerifyOptions o;
  o.n = 5;
  o.modulo_iso = false;
  auto r = verify("theorem", o);
  bool ok = r.pass() && oracle_free == 665 && has_row(r, "n=4 scanned 729 free 665 counterexamples 0") &&
            std::any_of(r.rows.begin(), r.rows.end(), [](const std::string& s) {
              return s.rfind("n=5 scanned 59049 ", 0) == 0 && s.ends_with(" counterexamples 0");
            });
  return {ok, brief(r) + "; n=4 free 665 (oracle " + std::to_string(oracle_free) + ")"};
}

Outcome oracle_agreement() {
  VerifyOptions o;
  o.n = 4;
  auto r = verify("oracle", o);
  int full_rows = 0;
  for (const auto& row : r.rows) {
    if (row.rfind("n=4 ", 0) == 0 && row.find(" instances 729 ") != std::string::npos &&
        row.ends_with(" mismatches 0"))
      ++full_rows;
  }
  // five pattern checks, series-parallel, complete-bipartite
  bool ok = r.pass() && full_rows == 7;
  return {ok, brief(r) + "; " + std::to_string(full_rows) + " checks agree on all 729"};
}

Outcome exhaustive(const std::string& id, int n, bool iso) {
  VerifyOptions o;
  o.n = n;
  o.modulo_iso = iso;
  auto r = verify(id, o);
  return {r.pass() && r.instances > 0, brief(r)};
}

Outcome attachment_lemmas() {
  const std::vector<std::string> ids{"prism-vertex", "prism-conn",  "K4-vertex", "K4-conn",
                                     "max-cyclic3",  "K33-vertex", "K33-comp"};
  const int trials = 1000;
  bool ok = true;
  std::ostringstream detail;
  for (const auto& id : ids) {
    VerifyOptions o;
    o.samples = trials;
    o.seed = 1;
    auto whole = verify(id, o);
    // replay each trial alone from seed + i; statistics must add up
    std::map<std::string, std::uint64_t> replayed;
    bool replay_ok = true;
    for (int i = 0; i < trials; ++i) {
      VerifyOptions one;
      one.samples = 1;
      one.seed = o.seed + i;
      auto r = verify(id, one);
      replay_ok = replay_ok && r.pass() && r.instances == 1;
      for (const auto& [k, v] : r.stats) replayed[k] += v;
    }
    for (const auto& [k, v] : whole.stats) replay_ok = replay_ok && replayed[k] == v;
    bool lemma_ok = whole.pass() && whole.instances == static_cast<std::uint64_t>(trials) && replay_ok;
    ok = ok && lemma_ok;
    detail << id << ' ' << whole.failures << '/' << trials << (replay_ok ? "" : " replay mismatch") << "; ";
  }
  std::string d = detail.str();
  return {ok, "failures " + d.substr(0, d.size() - 2) + ", every trial replayed"};
}

Outcome long_rich_squares() {
  auto r = verify("long-rich-square");
  bool ok = r.pass() && r.instances > 0 && r.stat("witnesses") == r.instances;
  return {ok, std::to_string(r.stat("witnesses")) + "/" + std::to_string(r.instances) + " witnessed"};
}

std::vector<int> degrees(const SimpleGraph& h) {
  std::vector<int> d(h.size());
  for (int v = 0; v < h.size(); ++v) d[v] = h.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

Outcome round_trips() {
  std::mt19937_64 rng(2024);
  int recovered = 0;
  int canon_checked = 0;
  for (int t = 0; t < 100; ++t) {
    SimpleGraph root = random_qualified_root(rng, 4, 30);
    Trigraph lg = line_trigraph_of(root);
    std::vector<int> perm(lg.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Trigraph input = permute(lg, perm);
    auto r = as_line_trigraph(input);
    if (!r) continue;
    // verify_root checks vertex_edge is an isomorphism onto the root's line graph
    bool ok = verify_root(input, *r) && r->h.edge_count() == root.edge_count() &&
              degrees(r->h) == degrees(root);
    if (ok && input.size() <= 16) {
      ok = isomorphic(line_graph(r->h).graph.trigraph(), full_realization(input).trigraph());
      ++canon_checked;
    }
    recovered += ok;
  }
  int identical = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::mt19937_64 pick(seed);
    int n = uniform_int(pick, 0, 40);
    Trigraph g = random_trigraph(n, 0.6 * unit(pick), 0.4 * unit(pick), seed);
    identical += parse_tri(format_tri(g)) == g;
  }
  std::ostringstream d;
  d << "line-trigraph " << recovered << "/100 (" << canon_checked << " also by canonical form), .tri " << identical
    << "/100";
  return {recovered == 100 && identical == 100, d.str()};
}

Outcome decomposition() {
  VerifyOptions o;
  o.samples = 500;
  o.n = kDecompositionMaxN;
  auto r = verify("decomposition", o);
  bool ok = r.pass() && r.instances == 500;
  return {ok, brief(r) + ", " + std::to_string(r.stat("leaves")) + " leaves, " + std::to_string(r.stat("splits")) +
                  " splits"};
}

}  // namespace

int main() {
  run("AC1", "theorem, all labeled trigraphs n<=5", 600, theorem);
  run("AC2", "oracle agreement n=4", 120, oracle_agreement);
  run("AC3", "theta or subdivision of 3-connected, graphs n<=7", 600,
      [] { return exhaustive("lemma45", kLemma45MaxN, false); });
  run("AC4", "delete-three, classes n<=6", 600, [] { return exhaustive("delete-three", kDeleteThreeMaxN, true); });
  run("AC5", "diamond, {K4,wheel}-free n<=5", 300, [] { return exhaustive("diamond", kDiamondMaxN, false); });
  run("AC6", "attachment lemmas, 1000 trials each", 900, attachment_lemmas);
  run("AC7", "long rich squares have wheels", 60, long_rich_squares);
  run("AC8", "round trips", 120, round_trips);
  run("AC9", "decomposition soundness, 500 free instances", 600, decomposition);
  std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
