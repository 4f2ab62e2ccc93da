#pragma once

// Per-isomer stability descriptors: pentagon indices and signature,
// asymmetry of the hexagon graph, IPR flag and selected Newton values.

#include <array>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fullerene/errors.hpp"
#include "fullerene/facetgraph.hpp"
#include "fullerene/integer.hpp"
#include "fullerene/isomers.hpp"
#include "fullerene/parallel.hpp"
#include "fullerene/spectral.hpp"

namespace fullerene {

/// p[i-1] = number of pentagons with exactly i pentagon neighbours.
using PentagonIndices = std::array<int, 5>;

inline PentagonIndices pentagon_indices(const FullereneDual& dual) {
  PentagonIndices p{};
  for (int f = 0; f < dual.face_count(); ++f) {
    if (!dual.is_pentagon(f)) continue;
    int touching = 0;
    for (int g : dual.neighbors(f)) touching += dual.is_pentagon(g);
    if (touching > 0) ++p[touching - 1];
  }
  return p;
}

enum class SignatureRoute { direct, via_newton };

/// Pentagon signature P1, the number of pentagon-pentagon edges. The direct
/// route halves the weighted index sum; via_newton uses
/// P1 = N(A6, 2)/2 - 3n/2 + 60.
inline int pentagon_signature(const FullereneDual& dual, SignatureRoute route = SignatureRoute::direct) {
  if (route == SignatureRoute::direct) {
    const auto p = pentagon_indices(dual);
    int weighted = 0;
    for (int i = 1; i <= 5; ++i) weighted += i * p[i - 1];
    return weighted / 2;
  }
  const AdjacencyMatrix a6(induced_subgraph(dual, GraphKind::hexagon));
  const BigInt n2 = newton_vector(a6, 2)[2];
  return static_cast<int>(n2 / 2) - 3 * dual.atom_count() / 2 + 60;
}

/// Asymmetry coefficient of the hexagon graph, exact.
inline Fraction asymmetry(const FullereneDual& dual) {
  return degree_summary(induced_subgraph(dual, GraphKind::hexagon)).theta;
}

/// Decimal rendering of a fraction, rounded half away from zero.
inline std::string format_fraction(const Fraction& value, int places = 6) {
  long long scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = value < 0;
  const Fraction magnitude = negative ? -value : value;
  const __int128 scaled_num = static_cast<__int128>(magnitude.numerator()) * scale;
  const __int128 den = magnitude.denominator();
  const __int128 rounded = (2 * scaled_num + den) / (2 * den);
  const long long whole = static_cast<long long>(rounded / scale);
  const long long frac = static_cast<long long>(rounded % scale);
  std::string out = (negative && rounded != 0 ? "-" : "") + std::to_string(whole);
  if (places > 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, static_cast<std::size_t>(places) - digits.size(), '0');
    out += "." + digits;
  }
  return out;
}

struct DescriptorRecord {
  int n = 0;
  int isomer_index = 0;
  PentagonIndices p{};
  int P1 = 0;
  Fraction theta;
  bool ipr = false;
  double lambda_max = 0.0;  // of the hexagon graph
  std::vector<int> newton_degrees;
  std::vector<BigInt> newton_values;  // N(A6, k) for each configured degree
};

struct DescriptorConfig {
  std::vector<int> newton_degrees{2};
  int threads = 0;
};

inline DescriptorRecord describe_isomer(const Isomer& isomer, const DescriptorConfig& config) {
  DescriptorRecord r;
  r.n = isomer.spiral.n();
  r.isomer_index = isomer.index;
  r.p = pentagon_indices(isomer.dual);
  r.P1 = pentagon_signature(isomer.dual, SignatureRoute::direct);
  const FacetSubgraph hexagons = induced_subgraph(isomer.dual, GraphKind::hexagon);
  r.theta = degree_summary(hexagons).theta;
  r.ipr = r.P1 == 0;
  const AdjacencyMatrix a6(hexagons);
  r.lambda_max = eigenvalues(a6).lambda_max();
  r.newton_degrees = config.newton_degrees;
  int top = 0;
  for (int k : config.newton_degrees) {
    if (k < 1) throw InputError("Newton degrees must be positive");
    top = std::max(top, k);
  }
  if (top > 0) {
    const NewtonVector nv = newton_vector(a6, top);
    for (int k : config.newton_degrees) r.newton_values.push_back(nv[k]);
  }
  return r;
}

/// One record per isomer, in input order.
inline std::vector<DescriptorRecord> descriptor_table(std::span<const Isomer> isomers, const DescriptorConfig& config = {}) {
  std::vector<DescriptorRecord> out(isomers.size());
  parallel_for(isomers.size(), config.threads, [&](std::size_t i) { out[i] = describe_isomer(isomers[i], config); });
  return out;
}

}  // namespace fullerene
