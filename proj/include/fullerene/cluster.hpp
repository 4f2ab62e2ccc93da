#pragma once

// Clustering isomers by exact Newton values, the minimal complete degrees
// k*, and the census of cospectral isomers.

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fullerene/errors.hpp"
#include "fullerene/facetgraph.hpp"
#include "fullerene/integer.hpp"
#include "fullerene/isomers.hpp"
#include "fullerene/spectral.hpp"

namespace fullerene {

/// How a cluster key is formed from an isomer's Newton values.
struct ClusterSchema {
  enum class Kind { single, pair, hierarchical };
  Kind kind = Kind::single;
  int k1 = 2;
  int k2 = 0;  // pair only

  static ClusterSchema single(int k) { return {Kind::single, k, 0}; }
  static ClusterSchema pair(int k1, int k2) { return {Kind::pair, k1, k2}; }
  /// Key (N(2), N(4), ..., N(k)).
  static ClusterSchema hierarchical(int k) { return {Kind::hierarchical, k, 0}; }

  std::vector<int> degrees() const {
    switch (kind) {
      case Kind::single: return {k1};
      case Kind::pair: return {k1, k2};
      case Kind::hierarchical: {
        std::vector<int> out;
        for (int k = 2; k <= k1; k += 2) out.push_back(k);
        return out;
      }
    }
    return {};
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::single: return "single(" + std::to_string(k1) + ")";
      case Kind::pair: return "pair(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
      case Kind::hierarchical: return "hierarchical(" + std::to_string(k1) + ")";
    }
    return "?";
  }
};

/// Parses "single:K", "pair:K1,K2" or "hierarchical:K".
inline ClusterSchema parse_cluster_schema(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("schema must look like single:K, pair:K1,K2 or hierarchical:K");
  const std::string name = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);
  try {
    if (name == "single") return ClusterSchema::single(std::stoi(args));
    if (name == "hierarchical") return ClusterSchema::hierarchical(std::stoi(args));
    if (name == "pair") {
      const auto comma = args.find(',');
      if (comma == std::string::npos) throw InputError("pair schema needs two degrees");
      return ClusterSchema::pair(std::stoi(args.substr(0, comma)), std::stoi(args.substr(comma + 1)));
    }
  } catch (const std::logic_error&) {
    throw InputError("malformed schema degrees in '" + text + "'");
  }
  throw InputError("unknown schema '" + name + "'");
}

struct Clusterization {
  int n = 0;
  GraphKind graph_kind = GraphKind::hexagon;
  ClusterSchema schema;
  std::map<std::vector<BigInt>, std::vector<int>> clusters;  // key -> sorted isomer indices

  std::size_t cluster_count() const { return clusters.size(); }
  std::size_t singleton_count() const {
    return static_cast<std::size_t>(
        std::count_if(clusters.begin(), clusters.end(), [](const auto& c) { return c.second.size() == 1; }));
  }
  bool complete() const { return singleton_count() == cluster_count(); }
};

inline Clusterization clusterize(int n, GraphKind kind, std::span<const IsomerNewton> isomers, ClusterSchema schema,
                                 bool allow_odd = false) {
  if (isomers.empty()) throw InputError("clusterization needs at least one isomer");
  const auto degrees = schema.degrees();
  if (degrees.empty()) throw InputError("schema selects no Newton degree");
  for (int k : degrees) {
    if (k < 1) throw InputError("Newton degrees must be positive");
    if (k % 2 && !allow_odd)
      throw OddDegreeRejected("odd degree " + std::to_string(k) + " does not separate isomers; pass the override to use it");
  }
  if (schema.kind == ClusterSchema::Kind::pair && schema.k1 >= schema.k2)
    throw InputError("pair schema needs k1 < k2");
  Clusterization out{n, kind, schema, {}};
  for (const auto& iso : isomers) {
    std::vector<BigInt> key;
    key.reserve(degrees.size());
    for (int k : degrees) {
      if (k > iso.values.max_degree())
        throw InputError("Newton values for isomer " + std::to_string(iso.index) + " stop below degree " +
                         std::to_string(k));
      key.push_back(iso.values[k]);
    }
    out.clusters[std::move(key)].push_back(iso.index);
  }
  for (auto& [key, members] : out.clusters) std::sort(members.begin(), members.end());
  return out;
}

struct KStarReport {
  int n = 0;
  GraphKind graph_kind = GraphKind::hexagon;
  int k_single = 0;
  int k_pair = 0;
  std::vector<std::pair<int, int>> pair_tuples;  // every complete (k1, k2) with k2 < k_single
  int k_hierarchical = 0;
};

namespace detail {

inline bool injective(std::span<const IsomerNewton> isomers, std::span<const int> degrees,
                      std::pair<int, int>* collision = nullptr) {
  std::map<std::vector<BigInt>, int> seen;
  for (const auto& iso : isomers) {
    std::vector<BigInt> key;
    for (int k : degrees) key.push_back(iso.values[k]);
    auto [it, inserted] = seen.emplace(std::move(key), iso.index);
    if (!inserted) {
      if (collision) *collision = {it->second, iso.index};
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Minimal even degrees giving a complete clusterization. The isomers' Newton
/// values must reach degree m (vertex count of the graph kind). When a single
/// degree 2 already completes, k_pair is reported as 2 as well.
inline KStarReport k_star(int n, GraphKind kind, std::span<const IsomerNewton> isomers, int vertex_count) {
  if (isomers.empty()) throw InputError("k* needs at least one isomer");
  const int m = std::max(vertex_count, 2);
  for (const auto& iso : isomers) {
    if (iso.values.max_degree() < m)
      throw InputError("k* needs Newton values up to degree " + std::to_string(m));
  }
  std::vector<int> all(m);
  for (int k = 1; k <= m; ++k) all[k - 1] = k;
  std::pair<int, int> witness;
  if (!detail::injective(isomers, all, &witness))
    throw NoCompleteClusterization("isomers " + std::to_string(witness.first) + " and " +
                                       std::to_string(witness.second) + " are cospectral",
                                   witness);

  KStarReport out{n, kind, 0, 0, {}, 0};
  for (int k = 2; k <= m && out.k_single == 0; k += 2) {
    const int d[] = {k};
    if (detail::injective(isomers, d, &witness)) out.k_single = k;
  }
  if (out.k_single == 0)
    throw NoCompleteClusterization("no single even degree up to " + std::to_string(m) + " separates isomers " +
                                       std::to_string(witness.first) + " and " + std::to_string(witness.second),
                                   witness);
  out.k_pair = out.k_single;
  for (int k2 = 4; k2 < out.k_single; k2 += 2) {
    for (int k1 = 2; k1 < k2; k1 += 2) {
      const int d[] = {k1, k2};
      if (detail::injective(isomers, d)) {
        out.pair_tuples.emplace_back(k1, k2);
        out.k_pair = std::min(out.k_pair, k2);
      }
    }
  }
  std::vector<int> prefix;
  for (int k = 2; k <= out.k_single; k += 2) {
    prefix.push_back(k);
    if (detail::injective(isomers, prefix)) {
      out.k_hierarchical = k;
      break;
    }
  }
  return out;
}

struct CospectralGroup {
  std::vector<int> isomers;  // sorted indices sharing one spectrum
  int isomorphism_classes = 1;
  bool all_isomorphic() const { return isomorphism_classes == 1; }
};

/// Per graph kind: the groups of isomers sharing a spectrum, with three
/// counting conventions for "non-unique spectra".
struct CensusRow {
  GraphKind kind = GraphKind::full;
  std::vector<CospectralGroup> groups;

  int shared_spectra() const { return static_cast<int>(groups.size()); }
  int isomers_involved() const {
    int total = 0;
    for (const auto& g : groups) total += static_cast<int>(g.isomers.size());
    return total;
  }
  long cospectral_pairs() const {
    long total = 0;
    for (const auto& g : groups) {
      const long s = static_cast<long>(g.isomers.size());
      total += s * (s - 1) / 2;
    }
    return total;
  }
};

struct CospectralCensus {
  int n = 0;
  int isomer_count = 0;
  std::vector<CensusRow> rows;
};

inline CensusRow cospectral_groups(std::span<const Isomer> isomers, GraphKind kind, int threads = 0) {
  std::vector<std::optional<CharPoly>> polys(isomers.size());
  parallel_for(isomers.size(), threads, [&](std::size_t i) {
    polys[i].emplace(char_poly(AdjacencyMatrix(induced_subgraph(isomers[i].dual, kind))));
  });
  std::map<std::vector<BigInt>, std::vector<std::size_t>> by_poly;
  for (std::size_t i = 0; i < isomers.size(); ++i) by_poly[polys[i]->coefficients()].push_back(i);

  CensusRow row;
  row.kind = kind;
  for (const auto& [poly, members] : by_poly) {
    if (members.size() < 2) continue;
    CospectralGroup group;
    std::vector<FacetSubgraph> representatives;
    for (std::size_t i : members) {
      group.isomers.push_back(isomers[i].index);
      FacetSubgraph g = induced_subgraph(isomers[i].dual, kind);
      const bool known = std::any_of(representatives.begin(), representatives.end(),
                                     [&](const FacetSubgraph& r) { return is_isomorphic(r, g); });
      if (!known) representatives.push_back(std::move(g));
    }
    std::sort(group.isomers.begin(), group.isomers.end());
    group.isomorphism_classes = static_cast<int>(representatives.size());
    row.groups.push_back(std::move(group));
  }
  std::sort(row.groups.begin(), row.groups.end(),
            [](const CospectralGroup& a, const CospectralGroup& b) { return a.isomers < b.isomers; });
  return row;
}

inline CospectralCensus cospectral_census(int n, std::span<const Isomer> isomers, std::span<const GraphKind> kinds,
                                          int threads = 0) {
  CospectralCensus out{n, static_cast<int>(isomers.size()), {}};
  for (GraphKind kind : kinds) out.rows.push_back(cospectral_groups(isomers, kind, threads));
  return out;
}

inline CospectralCensus cospectral_census(int n, std::span<const GraphKind> kinds, int threads = 0) {
  EnumerateOptions options;
  options.threads = threads;
  const auto isomers = enumerate_and_wind(n, options);
  return cospectral_census(n, isomers, kinds, threads);
}

}  // namespace fullerene
