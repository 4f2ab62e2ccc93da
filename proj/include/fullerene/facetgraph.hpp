#pragma once

// Induced facet subgraphs of a fullerene dual and structural predicates on
// them: degrees, cycles, bipartiteness and isomorphism.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "fullerene/errors.hpp"
#include "fullerene/spiral.hpp"

namespace fullerene {

using Fraction = boost::rational<long long>;

enum class GraphKind { full, pentagon, hexagon };

/// CLI spelling: t, t5, t6.
inline std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::full: return "t";
    case GraphKind::pentagon: return "t5";
    case GraphKind::hexagon: return "t6";
  }
  return "?";
}

inline GraphKind parse_graph_kind(std::string_view text) {
  if (text == "t") return GraphKind::full;
  if (text == "t5") return GraphKind::pentagon;
  if (text == "t6") return GraphKind::hexagon;
  throw InputError("unknown graph kind '" + std::string(text) + "' (expected t, t5 or t6)");
}

/// Simple undirected graph on a subset of a dual's faces.
class FacetSubgraph {
 public:
  FacetSubgraph(GraphKind kind, std::vector<std::vector<int>> neighbors, std::vector<int> parent_faces = {})
      : kind_(kind), neighbors_(std::move(neighbors)), parent_faces_(std::move(parent_faces)) {
    const int n = vertex_count();
    if (parent_faces_.empty()) {
      parent_faces_.resize(n);
      std::iota(parent_faces_.begin(), parent_faces_.end(), 0);
    }
    if (static_cast<int>(parent_faces_.size()) != n) throw InputError("parent face list size mismatch");
    long degree_sum = 0;
    for (int v = 0; v < n; ++v) {
      auto& row = neighbors_[v];
      std::sort(row.begin(), row.end());
      if (std::adjacent_find(row.begin(), row.end()) != row.end()) throw InputError("graph has a multi-edge");
      for (int u : row) {
        if (u < 0 || u >= n || u == v) throw InputError("graph has a loop or invalid vertex id");
      }
      degree_sum += static_cast<long>(row.size());
    }
    for (int v = 0; v < n; ++v) {
      for (int u : neighbors_[v]) {
        if (!std::binary_search(neighbors_[u].begin(), neighbors_[u].end(), v))
          throw InputError("graph adjacency is not symmetric");
      }
    }
    edge_count_ = static_cast<int>(degree_sum / 2);
  }

  GraphKind kind() const noexcept { return kind_; }
  int vertex_count() const noexcept { return static_cast<int>(neighbors_.size()); }
  int edge_count() const noexcept { return edge_count_; }
  std::span<const int> neighbors(int v) const { return neighbors_[v]; }
  int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }
  bool adjacent(int a, int b) const {
    const auto& row = neighbors_[a];
    return std::binary_search(row.begin(), row.end(), b);
  }
  /// Zero-based face id in the parent dual.
  int parent_face(int v) const { return parent_faces_[v]; }
  const std::vector<std::vector<int>>& adjacency_lists() const noexcept { return neighbors_; }

 private:
  GraphKind kind_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<int> parent_faces_;
  int edge_count_ = 0;
};

inline FacetSubgraph induced_subgraph(const FullereneDual& dual, GraphKind kind) {
  const int m = dual.face_count();
  std::vector<int> local(m, -1);
  std::vector<int> parents;
  for (int f = 0; f < m; ++f) {
    const bool keep = kind == GraphKind::full || (kind == GraphKind::pentagon) == dual.is_pentagon(f);
    if (keep) {
      local[f] = static_cast<int>(parents.size());
      parents.push_back(f);
    }
  }
  std::vector<std::vector<int>> neighbors(parents.size());
  for (std::size_t v = 0; v < parents.size(); ++v) {
    for (int g : dual.neighbors(parents[v])) {
      if (local[g] >= 0) neighbors[v].push_back(local[g]);
    }
  }
  return FacetSubgraph(kind, std::move(neighbors), std::move(parents));
}

struct EdgeRelation {
  int pentagon_edges;
  int hexagon_edges;
  bool holds;
};

/// Hexagon-hexagon edges exceed pentagon-pentagon edges by exactly 3n/2 - 60.
inline EdgeRelation edge_relation_check(const FullereneDual& dual) {
  int e5 = 0;
  int e6 = 0;
  for (int f = 0; f < dual.face_count(); ++f) {
    for (int g : dual.neighbors(f)) {
      if (g < f) continue;
      if (dual.is_pentagon(f) && dual.is_pentagon(g)) ++e5;
      if (!dual.is_pentagon(f) && !dual.is_pentagon(g)) ++e6;
    }
  }
  return {e5, e6, e6 == e5 + 3 * dual.atom_count() / 2 - 60};
}

namespace detail {

inline bool extend_cycle(const FacetSubgraph& g, int start, int current, int length, int target,
                         std::vector<char>& on_path, int second) {
  if (length == target) return second < current && g.adjacent(current, start);
  for (int next : g.neighbors(current)) {
    if (next <= start || on_path[next]) continue;
    on_path[next] = 1;
    const bool found = extend_cycle(g, start, next, length + 1, target, on_path, length == 1 ? next : second);
    on_path[next] = 0;
    if (found) return true;
  }
  return false;
}

}  // namespace detail

/// Whether g contains a simple cycle with exactly k vertices (k >= 3).
inline bool has_simple_cycle_of_length(const FacetSubgraph& g, int k) {
  if (k < 3) throw InputError("cycle length must be at least 3");
  if (k > g.vertex_count()) return false;
  std::vector<char> on_path(g.vertex_count(), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    on_path[s] = 1;
    const bool found = detail::extend_cycle(g, s, s, 1, k, on_path, -1);
    on_path[s] = 0;
    if (found) return true;
  }
  return false;
}

namespace detail {

inline bool extend_chordless(const FacetSubgraph& g, std::vector<int>& path, int target) {
  const int current = path.back();
  const int start = path.front();
  if (static_cast<int>(path.size()) == target) return path[1] < current && g.adjacent(current, start);
  for (int next : g.neighbors(current)) {
    if (next <= start || std::find(path.begin(), path.end(), next) != path.end()) continue;
    // Only the predecessor may touch `next`, except that the closing vertex
    // must also touch the start.
    bool chord = false;
    const bool closing = static_cast<int>(path.size()) + 1 == target;
    for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i) {
      if (i == 0 && closing) continue;
      chord = g.adjacent(path[i], next);
    }
    if (chord) continue;
    path.push_back(next);
    const bool found = extend_chordless(g, path, target);
    path.pop_back();
    if (found) return true;
  }
  return false;
}

}  // namespace detail

/// Whether g contains an induced (chordless) cycle with exactly k vertices.
/// Fullerene facet graphs have none for k = 4; plain 4-cycles are everywhere
/// in a triangulation.
inline bool has_chordless_cycle_of_length(const FacetSubgraph& g, int k) {
  if (k < 3) throw InputError("cycle length must be at least 3");
  if (k > g.vertex_count()) return false;
  std::vector<int> path;
  for (int s = 0; s < g.vertex_count(); ++s) {
    path.assign(1, s);
    if (detail::extend_chordless(g, path, k)) return true;
  }
  return false;
}

inline bool is_bipartite(const FacetSubgraph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int v = queue[i];
      for (int u : g.neighbors(v)) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

struct DegreeSummary {
  std::vector<int> histogram;  // histogram[d] = number of vertices of degree d
  Fraction mean;
  int max = 0;
  Fraction theta;  // max - mean, the asymmetry coefficient

  double mean_value() const { return boost::rational_cast<double>(mean); }
  double theta_value() const { return boost::rational_cast<double>(theta); }
};

inline DegreeSummary degree_summary(const FacetSubgraph& g) {
  DegreeSummary out;
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) out.max = std::max(out.max, g.degree(v));
  out.histogram.assign(out.max + 1, 0);
  for (int v = 0; v < n; ++v) ++out.histogram[g.degree(v)];
  out.mean = n == 0 ? Fraction(0) : Fraction(2LL * g.edge_count(), n);
  out.theta = Fraction(out.max) - out.mean;
  return out;
}

/// Edge list "u v" per line, 1-based, u < v, sorted.
inline void write_edge_list(std::ostream& out, const FacetSubgraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int u : g.neighbors(v)) {
      if (u > v) out << v + 1 << ' ' << u + 1 << '\n';
    }
  }
}

namespace detail {

// Color refinement on the disjoint union of two graphs. Colors are renumbered
// from sorted signatures, so equal colors mean the same thing on both sides.
class JointRefiner {
 public:
  JointRefiner(const FacetSubgraph& g, const FacetSubgraph& h) : n_(g.vertex_count()) {
    adj_.reserve(2 * n_);
    for (int v = 0; v < n_; ++v) adj_.emplace_back(g.neighbors(v).begin(), g.neighbors(v).end());
    for (int v = 0; v < n_; ++v) {
      adj_.emplace_back();
      for (int u : h.neighbors(v)) adj_.back().push_back(u + n_);
    }
  }

  bool isomorphic() {
    std::vector<int> colors(2 * n_);
    for (int v = 0; v < 2 * n_; ++v) colors[v] = static_cast<int>(adj_[v].size());
    return search(colors);
  }

 private:
  // Refines to a stable partition; false if the two halves' color
  // histograms differ.
  bool refine(std::vector<int>& colors) const {
    int classes = -1;
    std::vector<std::pair<std::vector<int>, int>> sigs(2 * n_);
    while (true) {
      for (int v = 0; v < 2 * n_; ++v) {
        auto& sig = sigs[v].first;
        sig.clear();
        sig.push_back(colors[v]);
        for (int u : adj_[v]) sig.push_back(colors[u]);
        std::sort(sig.begin() + 1, sig.end());
        sigs[v].second = v;
      }
      std::vector<int> order(2 * n_);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sigs[a].first < sigs[b].first; });
      int next = 0;
      for (int i = 0; i < 2 * n_; ++i) {
        if (i > 0 && sigs[order[i]].first != sigs[order[i - 1]].first) ++next;
        colors[order[i]] = next;
      }
      const int count = 2 * n_ == 0 ? 0 : next + 1;
      if (count == classes) break;
      classes = count;
    }
    std::vector<int> balance(classes, 0);
    for (int v = 0; v < n_; ++v) ++balance[colors[v]];
    for (int v = n_; v < 2 * n_; ++v) --balance[colors[v]];
    return std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; });
  }

  bool search(std::vector<int> colors) const {
    if (!refine(colors)) return false;
    std::vector<int> size(2 * n_ + 1, 0);
    for (int v = 0; v < n_; ++v) ++size[colors[v]];
    int pick = -1;
    for (int v = 0; v < n_; ++v) {
      if (size[colors[v]] > 1) {
        pick = v;
        break;
      }
    }
    if (pick < 0) return verify(colors);
    const int fresh = 2 * n_ + 1;
    for (int w = n_; w < 2 * n_; ++w) {
      if (colors[w] != colors[pick]) continue;
      std::vector<int> trial = colors;
      trial[pick] = fresh;
      trial[w] = fresh;
      if (search(std::move(trial))) return true;
    }
    return false;
  }

  bool verify(const std::vector<int>& colors) const {
    std::vector<int> image(2 * n_ + 1, -1);
    for (int w = n_; w < 2 * n_; ++w) image[colors[w]] = w - n_;
    std::vector<int> map(n_);
    for (int v = 0; v < n_; ++v) map[v] = image[colors[v]];
    for (int v = 0; v < n_; ++v) {
      std::vector<int> mapped;
      for (int u : adj_[v]) mapped.push_back(map[u] + n_);
      std::sort(mapped.begin(), mapped.end());
      std::vector<int> target = adj_[map[v] + n_];
      std::sort(target.begin(), target.end());
      if (mapped != target) return false;
    }
    return true;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace detail

inline constexpr int kDefaultIsomorphismVertexBound = 128;

/// Exact isomorphism test by color refinement with individualization.
inline bool is_isomorphic(const FacetSubgraph& g, const FacetSubgraph& h,
                          int vertex_bound = kDefaultIsomorphismVertexBound) {
  if (g.vertex_count() > vertex_bound || h.vertex_count() > vertex_bound)
    throw ResourceLimit("isomorphism test limited to " + std::to_string(vertex_bound) + " vertices");
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  return detail::JointRefiner(g, h).isomorphic();
}

}  // namespace fullerene
