#pragma once

#include <map>
#include <mutex>
#include <random>
#include <vector>

#include "fullerene/fullerene.hpp"
#include "oracles.hpp"

namespace fullerene::testing {

inline const SpiralSequence& buckminster() {
  static const SpiralSequence s(60, {1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32});
  return s;
}

// The two C28 isomers in canonical order: D2 first, then the Td isomer with
// four isolated hexagons.
inline const SpiralSequence& c28_d2() {
  static const SpiralSequence s(28, {1, 2, 3, 4, 5, 7, 10, 12, 13, 14, 15, 16});
  return s;
}
inline const SpiralSequence& c28_td() {
  static const SpiralSequence s(28, {1, 2, 3, 5, 7, 9, 10, 11, 12, 13, 14, 15});
  return s;
}

/// Enumerated and wound isomers, computed once per process.
inline const std::vector<Isomer>& isomers_of(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Isomer>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_and_wind(n)).first;
  return it->second;
}

/// Every isomer with 20 <= n <= limit.
inline std::vector<const Isomer*> isomers_up_to(int limit) {
  std::vector<const Isomer*> out;
  for (int n = 20; n <= limit; n += 2) {
    if (!is_feasible(n)) continue;
    for (const auto& iso : isomers_of(n)) out.push_back(&iso);
  }
  return out;
}

/// A fixed pseudo-random sample of isomer positions (0-based).
inline std::vector<std::size_t> sample_indices(std::size_t population, std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::size_t> all(population);
  for (std::size_t i = 0; i < population; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(count, population));
  std::sort(all.begin(), all.end());
  return all;
}

inline oracle::Adjacency adjacency_of(const FullereneDual& dual) {
  oracle::Adjacency g(dual.face_count());
  for (int f = 0; f < dual.face_count(); ++f) g[f].assign(dual.neighbors(f).begin(), dual.neighbors(f).end());
  return g;
}

inline std::vector<bool> pentagon_flags(const FullereneDual& dual) {
  std::vector<bool> p(dual.face_count());
  for (int f = 0; f < dual.face_count(); ++f) p[f] = dual.is_pentagon(f);
  return p;
}

inline oracle::Adjacency adjacency_of(const FacetSubgraph& g) { return g.adjacency_lists(); }

inline FacetSubgraph edgeless(int vertices) {
  return FacetSubgraph(GraphKind::hexagon, std::vector<std::vector<int>>(vertices));
}

inline FacetSubgraph from_edges(int vertices, const std::vector<std::pair<int, int>>& edges,
                                GraphKind kind = GraphKind::hexagon) {
  std::vector<std::vector<int>> adj(vertices);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return FacetSubgraph(kind, std::move(adj));
}

}  // namespace fullerene::testing
