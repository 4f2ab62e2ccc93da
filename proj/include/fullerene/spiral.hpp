#pragma once

// Face spirals: parsing, winding into the dual triangulation, unwinding back
// into canonical form, and enumeration of all isomers of a given size.

#include <algorithm>
#include <array>
#include <atomic>
#include <compare>
#include <cstdint>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fullerene/errors.hpp"
#include "fullerene/parallel.hpp"

namespace fullerene {

enum class FaceKind : std::uint8_t { pentagon = 5, hexagon = 6 };

constexpr int valency(FaceKind kind) noexcept { return static_cast<int>(kind); }

constexpr bool is_feasible(int n) noexcept { return n == 20 || (n >= 24 && n % 2 == 0); }

constexpr int face_count_for(int n) noexcept { return n / 2 + 2; }

constexpr int hexagon_count_for(int n) noexcept { return n / 2 - 10; }

inline constexpr int kPentagonCount = 12;

/// The 12 one-based pentagon positions of a face spiral on n atoms.
class SpiralSequence {
 public:
  using Positions = std::array<int, kPentagonCount>;

  SpiralSequence(int n, const Positions& positions) : n_(n), positions_(positions) {
    if (!is_feasible(n)) throw InfeasibleN(n);
    const int m = face_count_for(n);
    for (int i = 0; i < kPentagonCount; ++i) {
      if (positions_[i] < 1 || positions_[i] > m)
        throw InputError("pentagon position " + std::to_string(positions_[i]) +
                         " outside [1, " + std::to_string(m) + "]");
      if (i > 0 && positions_[i] <= positions_[i - 1])
        throw InputError("pentagon positions must be strictly increasing");
    }
  }

  static SpiralSequence from_face_kinds(int n, std::span<const FaceKind> kinds) {
    if (!is_feasible(n)) throw InfeasibleN(n);
    if (static_cast<int>(kinds.size()) != face_count_for(n))
      throw InputError("face sequence length does not match n");
    Positions pos{};
    int count = 0;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      if (kinds[i] != FaceKind::pentagon) continue;
      if (count == kPentagonCount) throw InputError("more than 12 pentagons in face sequence");
      pos[count++] = static_cast<int>(i) + 1;
    }
    if (count != kPentagonCount) throw InputError("fewer than 12 pentagons in face sequence");
    return SpiralSequence(n, pos);
  }

  int n() const noexcept { return n_; }
  int face_count() const noexcept { return face_count_for(n_); }
  const Positions& positions() const noexcept { return positions_; }

  std::vector<FaceKind> face_kinds() const {
    std::vector<FaceKind> kinds(face_count(), FaceKind::hexagon);
    for (int p : positions_) kinds[p - 1] = FaceKind::pentagon;
    return kinds;
  }

  /// "n p1 ... p12", the spiral file line format.
  std::string to_string() const {
    std::ostringstream out;
    out << n_;
    for (int p : positions_) out << ' ' << p;
    return out.str();
  }

  auto operator<=>(const SpiralSequence&) const = default;

 private:
  int n_;
  Positions positions_;
};

/// Dual facet graph of a fullerene: one vertex per face, triangulated.
/// Neighbor lists are sorted ascending. Face ids are zero-based and follow the
/// spiral the dual was wound from.
class FullereneDual {
 public:
  FullereneDual(int n, std::vector<FaceKind> kinds, std::vector<std::vector<int>> adjacency,
                std::optional<int> isomer_index = std::nullopt)
      : n_(n), kinds_(std::move(kinds)), adjacency_(std::move(adjacency)), isomer_index_(isomer_index) {
    validate();
  }

  int atom_count() const noexcept { return n_; }
  int face_count() const noexcept { return static_cast<int>(kinds_.size()); }
  int edge_count() const noexcept { return 3 * n_ / 2; }
  FaceKind kind(int face) const { return kinds_[face]; }
  bool is_pentagon(int face) const { return kinds_[face] == FaceKind::pentagon; }
  std::span<const int> neighbors(int face) const { return adjacency_[face]; }
  int degree(int face) const { return static_cast<int>(adjacency_[face].size()); }
  int neighbor(int face, int i) const { return adjacency_[face][i]; }
  bool adjacent(int a, int b) const {
    const auto& row = adjacency_[a];
    return std::binary_search(row.begin(), row.end(), b);
  }
  std::optional<int> isomer_index() const noexcept { return isomer_index_; }

  FullereneDual with_isomer_index(int index) const {
    FullereneDual copy = *this;
    copy.isomer_index_ = index;
    return copy;
  }

 private:
  void validate() {
    if (!is_feasible(n_)) throw InfeasibleN(n_);
    const int m = face_count_for(n_);
    if (face_count() != m || static_cast<int>(adjacency_.size()) != m)
      throw InputError("dual must have n/2+2 faces");
    int pentagons = 0;
    long degree_sum = 0;
    for (int f = 0; f < m; ++f) {
      auto& row = adjacency_[f];
      std::sort(row.begin(), row.end());
      if (std::adjacent_find(row.begin(), row.end()) != row.end())
        throw InputError("dual has a multi-edge at face " + std::to_string(f + 1));
      if (static_cast<int>(row.size()) != valency(kinds_[f]))
        throw InputError("face " + std::to_string(f + 1) + " degree does not match its label");
      for (int g : row) {
        if (g < 0 || g >= m || g == f) throw InputError("dual has an invalid neighbor id");
      }
      if (kinds_[f] == FaceKind::pentagon) ++pentagons;
      degree_sum += static_cast<long>(row.size());
    }
    for (int f = 0; f < m; ++f) {
      for (int g : adjacency_[f]) {
        if (!std::binary_search(adjacency_[g].begin(), adjacency_[g].end(), f))
          throw InputError("dual adjacency is not symmetric");
      }
    }
    if (pentagons != kPentagonCount) throw InputError("dual must have exactly 12 pentagons");
    if (degree_sum != 3L * n_) throw InputError("dual edge count must be 3n/2");
    std::vector<char> seen(m, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int g : adjacency_[f]) {
        if (!seen[g]) {
          seen[g] = 1;
          ++reached;
          stack.push_back(g);
        }
      }
    }
    if (reached != m) throw InputError("dual is disconnected");
  }

  int n_;
  std::vector<FaceKind> kinds_;
  std::vector<std::vector<int>> adjacency_;
  std::optional<int> isomer_index_;
};

namespace detail {

enum class WindFailure : std::uint8_t {
  none,
  boundary_exhausted,
  valency_exceeded,
  multi_edge,
  premature_closure,
  closure_mismatch,
  adjacent_pentagons,
};

inline const char* describe(WindFailure failure) {
  switch (failure) {
    case WindFailure::none: return "ok";
    case WindFailure::boundary_exhausted: return "open boundary exhausted";
    case WindFailure::valency_exceeded: return "a face would exceed its valency";
    case WindFailure::multi_edge: return "winding would create a multi-edge";
    case WindFailure::premature_closure: return "face closed before the last position";
    case WindFailure::closure_mismatch: return "last face does not close the boundary";
    case WindFailure::adjacent_pentagons: return "adjacent pentagons";
  }
  return "unknown";
}

// Partially wound triangulation: a disk whose open boundary is a ring of faces
// with unused valency, oldest at the front. All fields live in one flat buffer
// so copying a state for backtracking is a single memcpy.
class WindState {
 public:
  explicit WindState(int faces = 0) { reset(faces); }

  void reset(int faces) {
    faces_ = faces;
    buffer_.assign(static_cast<std::size_t>(faces) * 10, 0);
    head_ = tail_ = 0;
  }

  int faces() const noexcept { return faces_; }
  int valency_of(int f) const { return buffer_[f]; }
  int degree(int f) const { return buffer_[2 * faces_ + f]; }
  int neighbor(int f, int i) const { return buffer_[3 * faces_ + 6 * f + i]; }
  int ring_size() const noexcept { return tail_ - head_; }

  // Attach face k with the given valency. Faces 0..k-1 must already be placed.
  WindFailure place(int k, int face_valency, bool last, bool forbid_adjacent_pentagons) {
    buffer_[k] = static_cast<std::int16_t>(face_valency);
    rem(k) = static_cast<std::int16_t>(face_valency);
    forbid_pentagons_ = forbid_adjacent_pentagons;
    if (k == 0) {
      push(0);
      return WindFailure::none;
    }
    if (k == 1) {
      if (auto f = connect(0, 1); f != WindFailure::none) return f;
      push(1);
      return WindFailure::none;
    }
    if (last) {
      if (ring_size() != face_valency) return WindFailure::closure_mismatch;
      for (int i = head_; i < tail_; ++i) {
        if (rem(ring(i)) != 1) return WindFailure::closure_mismatch;
      }
      for (int i = head_; i < tail_; ++i) {
        if (auto f = connect(k, ring(i)); f != WindFailure::none) return f;
      }
      head_ = tail_;
      return WindFailure::none;
    }
    if (auto f = connect(k, back()); f != WindFailure::none) return f;
    if (auto f = connect(k, front()); f != WindFailure::none) return f;
    while (rem(back()) == 0) {
      --tail_;
      if (ring_size() == 0) return WindFailure::boundary_exhausted;
      if (auto f = connect(k, back()); f != WindFailure::none) return f;
    }
    while (rem(front()) == 0) {
      ++head_;
      if (ring_size() == 0) return WindFailure::boundary_exhausted;
      if (auto f = connect(k, front()); f != WindFailure::none) return f;
    }
    if (rem(k) <= 0) return WindFailure::premature_closure;
    push(k);
    return WindFailure::none;
  }

 private:
  std::int16_t& rem(int f) { return buffer_[faces_ + f]; }
  std::int16_t& deg(int f) { return buffer_[2 * faces_ + f]; }
  std::int16_t& adj(int f, int i) { return buffer_[3 * faces_ + 6 * f + i]; }
  std::int16_t& ring(int i) { return buffer_[9 * faces_ + i]; }
  int front() { return ring(head_); }
  int back() { return ring(tail_ - 1); }
  void push(int f) { ring(tail_++) = static_cast<std::int16_t>(f); }

  WindFailure connect(int a, int b) {
    if (rem(a) <= 0 || rem(b) <= 0) return WindFailure::valency_exceeded;
    for (int i = 0; i < deg(a); ++i) {
      if (adj(a, i) == b) return WindFailure::multi_edge;
    }
    if (forbid_pentagons_ && buffer_[a] == 5 && buffer_[b] == 5) return WindFailure::adjacent_pentagons;
    adj(a, deg(a)++) = static_cast<std::int16_t>(b);
    adj(b, deg(b)++) = static_cast<std::int16_t>(a);
    --rem(a);
    --rem(b);
    return WindFailure::none;
  }

  int faces_ = 0;
  int head_ = 0;
  int tail_ = 0;
  bool forbid_pentagons_ = false;
  // [valency | remaining | degree | 6 neighbor slots per face | ring]
  std::vector<std::int16_t> buffer_;
};

// Re-derives face spirals from a finished triangulation. A spiral is fixed by
// its first face, second face and the third face (one of the two common
// neighbors of the first two), which selects the orientation. Each later face
// is the unplaced common neighbor of the newest and oldest open faces. The
// bookkeeping mirrors WindState::place, so a successful unwinding winds back
// into the same graph.
class Unwinder {
 public:
  // Outcome of comparing an unwinding against a reference sequence.
  enum class Order { less, equal, greater_or_failed };

  template <class Graph>
  Order compare(const Graph& g, int f1, int f2, int f3, std::span<const std::uint8_t> bound,
                std::vector<std::uint8_t>& out) {
    const int m = static_cast<int>(bound.size());
    prepare(g, m);
    out.resize(m);
    bool decided_less = false;
    auto emit = [&](int k, int face) {
      const auto t = static_cast<std::uint8_t>(g.degree(face));
      out[k] = t;
      if (!decided_less) {
        if (t > bound[k]) return false;
        if (t < bound[k]) decided_less = true;
      }
      return true;
    };

    if (!emit(0, f1)) return Order::greater_or_failed;
    place(f1);
    if (!emit(1, f2)) return Order::greater_or_failed;
    place(f2);
    --rem_[f1];
    --rem_[f2];
    for (int k = 2; k < m; ++k) {
      int x = -1;
      if (k == 2) {
        x = f3;
      } else {
        const int a = ring_[tail_ - 1];
        const int b = ring_[head_];
        for (int i = 0; i < g.degree(a); ++i) {
          const int c = g.neighbor(a, i);
          if (!placed_[c] && is_neighbor(g, b, c)) {
            x = c;
            break;
          }
        }
        if (x < 0) return Order::greater_or_failed;
      }
      if (!emit(k, x)) return Order::greater_or_failed;
      if (!attach(g, x, k == m - 1)) return Order::greater_or_failed;
    }
    return decided_less ? Order::less : Order::equal;
  }

 private:
  template <class Graph>
  void prepare(const Graph& g, int m) {
    placed_.assign(m, 0);
    rem_.resize(m);
    for (int f = 0; f < m; ++f) rem_[f] = g.degree(f);
    ring_.resize(m);
    head_ = tail_ = 0;
  }

  void place(int f) {
    placed_[f] = 1;
    ring_[tail_++] = f;
  }

  template <class Graph>
  static bool is_neighbor(const Graph& g, int a, int b) {
    for (int i = 0; i < g.degree(a); ++i) {
      if (g.neighbor(a, i) == b) return true;
    }
    return false;
  }

  template <class Graph>
  bool attach(const Graph& g, int x, bool last) {
    int placed_neighbors = 0;
    for (int i = 0; i < g.degree(x); ++i) placed_neighbors += placed_[g.neighbor(x, i)];
    int connections = 0;
    int linked[6];
    auto link = [&](int y) {
      if (rem_[y] <= 0 || rem_[x] <= 0 || !is_neighbor(g, x, y)) return false;
      for (int i = 0; i < connections; ++i) {
        if (linked[i] == y) return false;
      }
      if (connections == 6) return false;
      linked[connections++] = y;
      --rem_[y];
      --rem_[x];
      return true;
    };
    if (last) {
      if (tail_ - head_ != g.degree(x)) return false;
      for (int i = head_; i < tail_; ++i) {
        if (rem_[ring_[i]] != 1 || !link(ring_[i])) return false;
      }
      return connections == placed_neighbors;
    }
    if (!link(ring_[tail_ - 1]) || !link(ring_[head_])) return false;
    while (rem_[ring_[tail_ - 1]] == 0) {
      if (--tail_ == head_ || !link(ring_[tail_ - 1])) return false;
    }
    while (rem_[ring_[head_]] == 0) {
      if (++head_ == tail_ || !link(ring_[head_])) return false;
    }
    if (rem_[x] <= 0 || connections != placed_neighbors) return false;
    place(x);
    return true;
  }

  std::vector<char> placed_;
  std::vector<int> rem_;
  std::vector<int> ring_;
  int head_ = 0;
  int tail_ = 0;
};

template <class Graph>
std::vector<int> pentagon_faces(const Graph& g, int m) {
  std::vector<int> out;
  for (int f = 0; f < m; ++f) {
    if (g.degree(f) == 5) out.push_back(f);
  }
  return out;
}

// Lexicographically smallest face-degree sequence over all unwindings, or an
// empty vector when no unwinding closes.
template <class Graph>
std::vector<std::uint8_t> smallest_spiral(const Graph& g, int m, Unwinder& unwinder) {
  std::vector<std::uint8_t> best(m, 7);
  std::vector<std::uint8_t> scratch;
  bool found = false;
  for (int pass = 0; pass < 2 && !found; ++pass) {
    for (int f1 = 0; f1 < m; ++f1) {
      if ((g.degree(f1) == 5) != (pass == 0)) continue;
      for (int i = 0; i < g.degree(f1); ++i) {
        const int f2 = g.neighbor(f1, i);
        for (int j = 0; j < g.degree(f2); ++j) {
          const int f3 = g.neighbor(f2, j);
          bool common = false;
          for (int l = 0; l < g.degree(f1); ++l) common |= g.neighbor(f1, l) == f3;
          if (!common) continue;
          if (unwinder.compare(g, f1, f2, f3, best, scratch) == Unwinder::Order::less) {
            best = scratch;
            found = true;
          }
        }
      }
    }
  }
  if (!found) best.clear();
  return best;
}

// True when no unwinding of g is lexicographically smaller than `sequence`.
template <class Graph>
bool is_canonical(const Graph& g, std::span<const std::uint8_t> sequence, Unwinder& unwinder,
                  std::vector<std::uint8_t>& scratch) {
  const int m = static_cast<int>(sequence.size());
  const bool pentagon_first = sequence[0] == 5;
  for (int f1 = 0; f1 < m; ++f1) {
    if (pentagon_first && g.degree(f1) != 5) continue;
    for (int i = 0; i < g.degree(f1); ++i) {
      const int f2 = g.neighbor(f1, i);
      for (int j = 0; j < g.degree(f2); ++j) {
        const int f3 = g.neighbor(f2, j);
        bool common = false;
        for (int l = 0; l < g.degree(f1); ++l) common |= g.neighbor(f1, l) == f3;
        if (!common) continue;
        if (unwinder.compare(g, f1, f2, f3, sequence, scratch) == Unwinder::Order::less) return false;
      }
    }
  }
  return true;
}

inline std::vector<std::uint8_t> degree_sequence(const SpiralSequence& spiral) {
  std::vector<std::uint8_t> seq(spiral.face_count(), 6);
  for (int p : spiral.positions()) seq[p - 1] = 5;
  return seq;
}

inline SpiralSequence spiral_from_degrees(int n, std::span<const std::uint8_t> seq) {
  SpiralSequence::Positions pos{};
  int count = 0;
  for (std::size_t i = 0; i < seq.size() && count < kPentagonCount; ++i) {
    if (seq[i] == 5) pos[count++] = static_cast<int>(i) + 1;
  }
  return SpiralSequence(n, pos);
}

}  // namespace detail

/// Winds a spiral into its dual; returns nullopt and the failing 1-based face
/// position when the spiral does not describe a fullerene.
inline std::optional<FullereneDual> try_wind(const SpiralSequence& spiral, int* failed_step = nullptr,
                                             std::string* reason = nullptr) {
  const int m = spiral.face_count();
  const auto seq = detail::degree_sequence(spiral);
  detail::WindState state(m);
  for (int k = 0; k < m; ++k) {
    const auto failure = state.place(k, seq[k], k == m - 1, false);
    if (failure != detail::WindFailure::none) {
      if (failed_step) *failed_step = k + 1;
      if (reason) *reason = detail::describe(failure);
      return std::nullopt;
    }
  }
  std::vector<FaceKind> kinds = spiral.face_kinds();
  std::vector<std::vector<int>> adjacency(m);
  for (int f = 0; f < m; ++f) {
    for (int i = 0; i < state.degree(f); ++i) adjacency[f].push_back(state.neighbor(f, i));
  }
  return FullereneDual(spiral.n(), std::move(kinds), std::move(adjacency));
}

/// Winds a spiral into its dual or throws InvalidSpiral.
inline FullereneDual wind(const SpiralSequence& spiral) {
  int step = 0;
  std::string reason;
  auto dual = try_wind(spiral, &step, &reason);
  if (!dual) throw InvalidSpiral(step, reason);
  return std::move(*dual);
}

/// Lexicographically smallest pentagon-position vector over every unwinding
/// (each start face, each second face, both orientations).
inline SpiralSequence canonical_spiral(const FullereneDual& dual) {
  detail::Unwinder unwinder;
  const auto best = detail::smallest_spiral(dual, dual.face_count(), unwinder);
  if (best.empty()) throw NotSpiralable("no face spiral of this dual closes");
  return detail::spiral_from_degrees(dual.atom_count(), best);
}

struct IsomerEntry {
  int index;  // 1-based rank in lexicographic order of canonical spirals
  SpiralSequence spiral;
};

struct EnumerateOptions {
  bool ipr_only = false;
  int threads = 0;  // 0 selects the hardware concurrency
  // Canonical spirals of every fullerene handled here start at a pentagon;
  // set to also search hexagon-first sequences (about 2.7x slower).
  bool hexagon_starts = false;
};

namespace detail {

class SpiralSearch {
 public:
  SpiralSearch(int n, const EnumerateOptions& options)
      : n_(n), m_(face_count_for(n)), options_(options), states_(m_ + 1, WindState(m_)), seq_(m_) {}

  // Depth-first search below a fixed prefix of face degrees.
  void run_from(std::span<const std::uint8_t> prefix, std::vector<std::vector<std::uint8_t>>& found) {
    found_ = &found;
    states_[0].reset(m_);
    int pentagons = 0;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      states_[k + 1] = states_[k];
      const int face = static_cast<int>(k);
      if (states_[k + 1].place(face, prefix[k], face == m_ - 1, options_.ipr_only) != WindFailure::none) return;
      seq_[k] = prefix[k];
      pentagons += prefix[k] == 5;
    }
    descend(static_cast<int>(prefix.size()), pentagons, m_);
  }

  // Every surviving prefix of the given depth.
  void collect_prefixes(int depth, std::vector<std::vector<std::uint8_t>>& prefixes) {
    prefixes_ = &prefixes;
    found_ = nullptr;
    states_[0].reset(m_);
    descend(0, 0, depth);
    prefixes_ = nullptr;
  }

 private:
  void descend(int k, int pentagons, int stop) {
    if (k == stop) {
      if (stop < m_) {
        prefixes_->emplace_back(seq_.begin(), seq_.begin() + k);
      } else if (is_canonical(states_[k], std::span<const std::uint8_t>(seq_), unwinder_, scratch_)) {
        found_->push_back(seq_);
      }
      return;
    }
    const bool last = k == m_ - 1;
    for (std::uint8_t t : {std::uint8_t{5}, std::uint8_t{6}}) {
      if (t == 5 && pentagons == kPentagonCount) continue;
      if (t == 6 && kPentagonCount - pentagons > m_ - k - 1) continue;
      if (k == 0 && t == 6 && !options_.hexagon_starts) continue;
      states_[k + 1] = states_[k];
      if (states_[k + 1].place(k, t, last, options_.ipr_only) != WindFailure::none) continue;
      seq_[k] = t;
      descend(k + 1, pentagons + (t == 5), stop);
    }
  }

  int n_;
  int m_;
  EnumerateOptions options_;
  std::vector<WindState> states_;
  std::vector<std::uint8_t> seq_;
  Unwinder unwinder_;
  std::vector<std::uint8_t> scratch_;
  std::vector<std::vector<std::uint8_t>>* found_ = nullptr;
  std::vector<std::vector<std::uint8_t>>* prefixes_ = nullptr;
};

}  // namespace detail

/// All combinatorial isomers on n atoms, sorted by canonical spiral and
/// numbered from 1. The result does not depend on the thread count.
inline std::vector<IsomerEntry> enumerate_isomers(int n, const EnumerateOptions& options = {}) {
  if (!is_feasible(n)) throw InfeasibleN(n);
  const int m = face_count_for(n);
  const int split_depth = std::min(m - 1, 14);

  std::vector<std::vector<std::uint8_t>> prefixes;
  detail::SpiralSearch(n, options).collect_prefixes(split_depth, prefixes);

  std::vector<std::vector<std::uint8_t>> found;
  std::mutex merge_mutex;
  std::atomic<std::size_t> next{0};
  run_workers(options.threads, [&](int) {
    detail::SpiralSearch search(n, options);
    std::vector<std::vector<std::uint8_t>> local;
    for (std::size_t i = next++; i < prefixes.size(); i = next++) search.run_from(prefixes[i], local);
    std::lock_guard lock(merge_mutex);
    for (auto& s : local) found.push_back(std::move(s));
  });

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<IsomerEntry> out;
  out.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    out.push_back({static_cast<int>(i) + 1, detail::spiral_from_degrees(n, found[i])});
  }
  return out;
}

/// Spiral file: one isomer per line, n followed by the 12 positions; lines
/// starting with '#' are comments.
inline std::vector<SpiralSequence> read_spiral_file(std::istream& in) {
  std::vector<SpiralSequence> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    int n = 0;
    SpiralSequence::Positions pos{};
    if (!(fields >> n)) throw ParseError("spiral file line " + std::to_string(line_no) + ": expected n");
    for (int& p : pos) {
      if (!(fields >> p))
        throw ParseError("spiral file line " + std::to_string(line_no) + ": expected 12 positions");
    }
    std::string rest;
    if (fields >> rest) throw ParseError("spiral file line " + std::to_string(line_no) + ": trailing data");
    try {
      out.emplace_back(n, pos);
    } catch (const InputError& e) {
      throw ParseError("spiral file line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

inline void write_spiral_file(std::ostream& out, std::span<const SpiralSequence> spirals) {
  for (const auto& s : spirals) out << s.to_string() << '\n';
}

}  // namespace fullerene
