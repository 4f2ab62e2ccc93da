#pragma once

#include <span>
#include <vector>

#include "fullerene/facetgraph.hpp"
#include "fullerene/parallel.hpp"
#include "fullerene/spectral.hpp"
#include "fullerene/spiral.hpp"

namespace fullerene {

/// One combinatorial isomer: its rank, canonical spiral and wound dual.
struct Isomer {
  int index;
  SpiralSequence spiral;
  FullereneDual dual;
};

inline std::vector<Isomer> wind_all(std::span<const IsomerEntry> entries, int threads = 0) {
  std::vector<std::optional<Isomer>> slots(entries.size());
  parallel_for(entries.size(), threads, [&](std::size_t i) {
    const auto& e = entries[i];
    slots[i].emplace(Isomer{e.index, e.spiral, wind(e.spiral).with_isomer_index(e.index)});
  });
  std::vector<Isomer> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

inline std::vector<Isomer> enumerate_and_wind(int n, EnumerateOptions options = {}) {
  const auto entries = enumerate_isomers(n, options);
  return wind_all(entries, options.threads);
}

/// Newton values of one graph kind for a set of isomers.
struct IsomerNewton {
  int index;
  NewtonVector values;
};

inline std::vector<IsomerNewton> newton_table(std::span<const Isomer> isomers, GraphKind kind, int max_k,
                                              int threads = 0) {
  std::vector<IsomerNewton> out(isomers.size());
  parallel_for(isomers.size(), threads, [&](std::size_t i) {
    const AdjacencyMatrix a(induced_subgraph(isomers[i].dual, kind));
    out[i] = {isomers[i].index, newton_vector(a, max_k)};
  });
  return out;
}

}  // namespace fullerene
