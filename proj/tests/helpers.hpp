#pragma once

#include <string>
#include <vector>

#include "tri/trigraph.hpp"

namespace test {

inline tri::Trigraph from_pairs(int n, const std::vector<tri::Pair>& strong,
                                const std::vector<tri::Pair>& semi = {}) {
  tri::Trigraph g(n);
  for (auto [u, v] : strong) g.set(u, v, tri::Adj::Strong);
  for (auto [u, v] : semi) g.set(u, v, tri::Adj::Semi);
  return g;
}

inline tri::Trigraph cycle(int n) {
  tri::Trigraph g(n);
  for (int i = 0; i < n; ++i) g.set(i, (i + 1) % n, tri::Adj::Strong);
  return g;
}

inline tri::Trigraph complete(int n) {
  tri::Trigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.set(i, j, tri::Adj::Strong);
  return g;
}

// hub 0, rim 1..k
inline tri::Trigraph wheel(int k) {
  tri::Trigraph g(k + 1);
  for (int i = 0; i < k; ++i) {
    g.set(1 + i, 1 + (i + 1) % k, tri::Adj::Strong);
    g.set(0, 1 + i, tri::Adj::Strong);
  }
  return g;
}

}  // namespace test
