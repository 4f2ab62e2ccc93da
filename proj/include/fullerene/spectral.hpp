#pragma once

// Spectral invariants of adjacency matrices. Everything that decides a
// mathematical question (Newton values, characteristic polynomials,
// cospectrality) is computed in exact integer arithmetic; eigenvalues are
// floating-point diagnostics.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "fullerene/errors.hpp"
#include "fullerene/facetgraph.hpp"
#include "fullerene/integer.hpp"

namespace fullerene {

/// Symmetric 0/1 matrix with zero diagonal, stored as neighbor lists.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(const FacetSubgraph& g) : neighbors_(g.adjacency_lists()) { finish(); }

  explicit AdjacencyMatrix(std::vector<std::vector<int>> neighbors) : neighbors_(std::move(neighbors)) {
    FacetSubgraph(GraphKind::full, neighbors_);  // validates simple and symmetric
    finish();
  }

  /// Builds from a dense row-major matrix; rejects asymmetric or nonzero-diagonal input.
  static AdjacencyMatrix from_dense(int order, std::span<const int> entries) {
    if (static_cast<long>(entries.size()) != static_cast<long>(order) * order)
      throw InputError("dense matrix size does not match its order");
    std::vector<std::vector<int>> nbrs(order);
    for (int i = 0; i < order; ++i) {
      for (int j = 0; j < order; ++j) {
        const int a = entries[i * order + j];
        if (a != 0 && a != 1) throw InputError("adjacency entries must be 0 or 1");
        if (a != entries[j * order + i]) throw InputError("adjacency matrix must be symmetric");
        if (i == j && a != 0) throw InputError("adjacency matrix must have a zero diagonal");
        if (a) nbrs[i].push_back(j);
      }
    }
    return AdjacencyMatrix(std::move(nbrs));
  }

  int order() const noexcept { return static_cast<int>(neighbors_.size()); }
  int entry(int i, int j) const { return std::binary_search(neighbors_[i].begin(), neighbors_[i].end(), j); }
  std::span<const int> neighbors(int i) const { return neighbors_[i]; }
  int degree(int i) const { return static_cast<int>(neighbors_[i].size()); }
  int edge_count() const noexcept { return edges_; }
  int max_degree() const noexcept { return max_degree_; }

 private:
  void finish() {
    long sum = 0;
    for (auto& row : neighbors_) {
      std::sort(row.begin(), row.end());
      sum += static_cast<long>(row.size());
      max_degree_ = std::max(max_degree_, static_cast<int>(row.size()));
    }
    edges_ = static_cast<int>(sum / 2);
  }

  std::vector<std::vector<int>> neighbors_;
  int edges_ = 0;
  int max_degree_ = 0;
};

/// Exact traces N(A,k) = tr(A^k) for k = 1..K.
class NewtonVector {
 public:
  NewtonVector() = default;
  explicit NewtonVector(std::vector<BigInt> values) : values_(std::move(values)) {}

  int max_degree() const noexcept { return static_cast<int>(values_.size()); }
  const BigInt& operator[](int k) const { return values_.at(k - 1); }
  const std::vector<BigInt>& values() const noexcept { return values_; }

  bool operator==(const NewtonVector&) const = default;

 private:
  std::vector<BigInt> values_;
};

inline constexpr long kDefaultNewtonBudget = 1L << 22;

namespace detail {

// Traces of A^2..A^K by repeated multiplication with the sparse A; each step
// costs order^2 * max_degree additions.
template <class Int>
std::vector<Int> trace_powers(const AdjacencyMatrix& a, int max_k) {
  const int m = a.order();
  std::vector<Int> traces(max_k, Int(0));
  if (m == 0) return traces;
  std::vector<Int> current(static_cast<std::size_t>(m) * m, Int(0));
  std::vector<Int> next(current.size(), Int(0));
  for (int i = 0; i < m; ++i) {
    for (int j : a.neighbors(i)) current[i * m + j] = 1;
  }
  for (int k = 2; k <= max_k; ++k) {
    Int trace = 0;
    for (int i = 0; i < m; ++i) {
      const Int* row = &current[static_cast<std::size_t>(i) * m];
      Int* out = &next[static_cast<std::size_t>(i) * m];
      for (int j = 0; j < m; ++j) {
        Int sum = 0;
        for (int l : a.neighbors(j)) sum += row[l];
        out[j] = sum;
      }
      trace += out[i];
    }
    traces[k - 1] = trace;
    std::swap(current, next);
  }
  return traces;
}

}  // namespace detail

/// N(A,1..K) in exact arithmetic. Uses 128-bit integers when m * maxdeg^K is
/// provably representable and arbitrary precision otherwise.
inline NewtonVector newton_vector(const AdjacencyMatrix& a, int max_k, long budget = kDefaultNewtonBudget) {
  if (max_k < 1) throw InputError("Newton degree K must be at least 1");
  if (static_cast<long>(a.order()) * max_k > budget)
    throw ResourceLimit("Newton vector of order " + std::to_string(a.order()) + " up to K=" +
                        std::to_string(max_k) + " exceeds the work budget");
  const double log2_bound =
      std::log2(std::max(1, a.order())) + max_k * std::log2(std::max(1, a.max_degree())) + 1.0;
  std::vector<BigInt> values;
  values.reserve(max_k);
  if (log2_bound < 124.0) {
    for (const auto& t : detail::trace_powers<__int128>(a, max_k)) values.push_back(to_big(t));
  } else {
    values = detail::trace_powers<BigInt>(a, max_k);
  }
  return NewtonVector(std::move(values));
}

inline constexpr int kSachsVertexBound = 14;

namespace detail {

// Enumerates linear subgraphs (vertex-disjoint unions of edges and simple
// cycles) and accumulates (-1)^(components) * 2^(cycles) per vertex count.
class LinearSubgraphSum {
 public:
  LinearSubgraphSum(const AdjacencyMatrix& a, int up_to) : a_(a), up_to_(up_to), sums_(up_to + 1, 0) {}

  std::vector<long long> run() {
    covered_.assign(a_.order(), 0);
    visit(0, 0, 0, 0);
    return sums_;
  }

 private:
  void visit(int v, int size, int components, int cycles) {
    while (v < a_.order() && covered_[v]) ++v;
    if (v == a_.order()) {
      long long term = 1LL << cycles;
      if (components % 2) term = -term;
      sums_[size] += term;
      return;
    }
    visit(v + 1, size, components, cycles);
    if (size + 2 > up_to_) return;
    covered_[v] = 1;
    for (int u : a_.neighbors(v)) {
      if (u < v || covered_[u]) continue;
      covered_[u] = 1;
      visit(v + 1, size + 2, components + 1, cycles);
      covered_[u] = 0;
    }
    std::vector<int> path{v};
    grow_cycle(path, size, components, cycles);
    covered_[v] = 0;
  }

  // Extends a path starting at its smallest vertex `start`; each cycle is
  // closed once by requiring path[1] < path.back().
  void grow_cycle(std::vector<int>& path, int size, int components, int cycles) {
    const int start = path.front();
    const int tip = path.back();
    const int length = static_cast<int>(path.size());
    if (length >= 3 && path[1] < tip && a_.entry(tip, start))
      visit(start + 1, size + length, components + 1, cycles + 1);
    if (size + length + 1 > up_to_) return;
    for (int u : a_.neighbors(tip)) {
      if (u <= start || covered_[u]) continue;
      covered_[u] = 1;
      path.push_back(u);
      grow_cycle(path, size, components, cycles);
      path.pop_back();
      covered_[u] = 0;
    }
  }

  const AdjacencyMatrix& a_;
  int up_to_;
  std::vector<long long> sums_;
  std::vector<char> covered_;
};

inline void check_sachs_bounds(const AdjacencyMatrix& a, int up_to) {
  if (a.order() > kSachsVertexBound)
    throw ResourceLimit("linear-subgraph enumeration is limited to " + std::to_string(kSachsVertexBound) +
                        " vertices");
  if (up_to < 1 || up_to > a.order()) throw InputError("Sachs degree must lie in [1, m]");
}

}  // namespace detail

/// Elementary symmetric polynomials S_1..S_up_to of the eigenvalues, from the
/// signed count of linear subgraphs on j vertices.
inline std::vector<BigInt> sachs_coefficients(const AdjacencyMatrix& a, int up_to) {
  detail::check_sachs_bounds(a, up_to);
  const auto sums = detail::LinearSubgraphSum(a, up_to).run();
  std::vector<BigInt> s(up_to);
  for (int j = 1; j <= up_to; ++j) s[j - 1] = (j % 2 ? -1 : 1) * BigInt(sums[j]);
  return s;
}

/// N(A,k) from linear-subgraph counts alone via Newton's identities:
/// N(k) = -k c_k - sum_{j=2}^{k-2} c_j N(k-j), c_j = (-1)^j S_j.
inline BigInt newton_recursive(const AdjacencyMatrix& a, int k) {
  if (k < 2) throw InputError("recursive Newton value needs k >= 2");
  detail::check_sachs_bounds(a, k);
  const auto c = detail::LinearSubgraphSum(a, k).run();
  std::vector<BigInt> n(k + 1, 0);
  for (int d = 2; d <= k; ++d) {
    BigInt value = -BigInt(d) * c[d];
    for (int j = 2; j <= d - 2; ++j) value -= BigInt(c[j]) * n[d - j];
    n[d] = value;
  }
  return n[k];
}

/// det(xI - A), coefficients stored high to low: coefficients()[j] multiplies x^(m-j).
class CharPoly {
 public:
  explicit CharPoly(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {}

  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  const BigInt& coefficient_of_power(int p) const { return coefficients_.at(degree() - p); }

  bool operator==(const CharPoly&) const = default;

 private:
  std::vector<BigInt> coefficients_;
};

/// Characteristic polynomial from N(A,1..m) through the recursion
/// S_k = (-1)^(k-1) N(k)/k - (1/k) sum_{i=1}^{k-1} (-1)^i S_{k-i} N(i).
inline CharPoly char_poly(const AdjacencyMatrix& a) {
  const int m = a.order();
  if (m == 0) return CharPoly({BigInt(1)});
  const auto n = newton_vector(a, m);
  std::vector<BigInt> s(m + 1);
  s[0] = 1;
  for (int k = 1; k <= m; ++k) {
    BigInt acc = (k % 2 ? 1 : -1) * n[k];
    for (int i = 1; i < k; ++i) {
      if (i % 2)
        acc += s[k - i] * n[i];
      else
        acc -= s[k - i] * n[i];
    }
    if (acc % k != 0) throw std::logic_error("inexact division in Newton identity at k=" + std::to_string(k));
    s[k] = acc / k;
  }
  std::vector<BigInt> coeffs(m + 1);
  for (int j = 0; j <= m; ++j) coeffs[j] = j % 2 ? BigInt(-s[j]) : s[j];
  return CharPoly(std::move(coeffs));
}

inline bool cospectral(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
  if (a.order() != b.order())
    throw OrderMismatch("cospectrality needs equal orders (" + std::to_string(a.order()) + " vs " +
                        std::to_string(b.order()) + ")");
  if (a.edge_count() != b.edge_count()) return false;
  return char_poly(a) == char_poly(b);
}

struct Spectrum {
  std::vector<double> values;  // descending
  double tolerance = 0.0;
  int sweeps = 0;

  double lambda_max() const { return values.empty() ? 0.0 : values.front(); }
};

inline constexpr double kDefaultJacobiTolerance = 1e-10;
inline constexpr int kDefaultJacobiSweeps = 100;

/// All eigenvalues by cyclic Jacobi rotations, sorted descending.
inline Spectrum eigenvalues(const AdjacencyMatrix& a, double tol = kDefaultJacobiTolerance,
                            int max_sweeps = kDefaultJacobiSweeps) {
  const int m = a.order();
  std::vector<double> w(static_cast<std::size_t>(m) * m, 0.0);
  auto at = [&](int i, int j) -> double& { return w[static_cast<std::size_t>(i) * m + j]; };
  for (int i = 0; i < m; ++i) {
    for (int j : a.neighbors(i)) at(i, j) = 1.0;
  }
  auto off_norm = [&] {
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) sum += 2.0 * at(i, j) * at(i, j);
    }
    return std::sqrt(sum);
  };
  Spectrum out;
  out.tolerance = tol;
  while (off_norm() > tol) {
    if (out.sweeps == max_sweeps)
      throw NoConvergence("Jacobi iteration did not converge in " + std::to_string(max_sweeps) + " sweeps");
    ++out.sweeps;
    for (int p = 0; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < std::numeric_limits<double>::min()) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < m; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < m; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }
  out.values.resize(m);
  for (int i = 0; i < m; ++i) out.values[i] = at(i, i);
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

struct LambdaMaxBounds {
  double lower_mean;  // mean degree; a lower bound only for connected graphs
  double lower_rms;   // sqrt(sum of squared degrees / m)
  double upper;       // max degree
};

inline LambdaMaxBounds lambda_max_bounds(const FacetSubgraph& g) {
  const int m = g.vertex_count();
  if (m == 0) return {0.0, 0.0, 0.0};
  double squares = 0.0;
  int max_degree = 0;
  for (int v = 0; v < m; ++v) {
    squares += static_cast<double>(g.degree(v)) * g.degree(v);
    max_degree = std::max(max_degree, g.degree(v));
  }
  return {2.0 * g.edge_count() / m, std::sqrt(squares / m), static_cast<double>(max_degree)};
}

struct AbsoluteSpectrum {
  std::vector<double> values;        // |lambda| descending
  std::vector<double> below_one;     // part in [0, 1)
  std::vector<double> at_least_one;  // part in [1, inf)
};

/// |lambda| values split at 1; values within the spectrum tolerance of 1 count as 1.
inline AbsoluteSpectrum absolute_spectrum(const Spectrum& s) {
  AbsoluteSpectrum out;
  const double slack = std::max(s.tolerance, 1e-12) * 100.0;
  for (double v : s.values) out.values.push_back(std::abs(v));
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  for (double v : out.values) (v >= 1.0 - slack ? out.at_least_one : out.below_one).push_back(v);
  return out;
}

}  // namespace fullerene
