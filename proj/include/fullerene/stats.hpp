#pragma once

// Relative-energy ingestion and descriptor/energy regressions.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fullerene/errors.hpp"

namespace fullerene {

/// Relative energies (kcal/mol) keyed by isomer index.
struct EnergyTable {
  int n = 0;
  std::map<int, double> energies;

  std::size_t size() const noexcept { return energies.size(); }
  bool contains(int index) const { return energies.count(index) != 0; }
  double at(int index) const {
    const auto it = energies.find(index);
    if (it == energies.end()) throw IndexOutOfRange("no energy for isomer " + std::to_string(index));
    return it->second;
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

/// CSV with header "isomer_index,relative_energy". isomer_count bounds the
/// admissible indices.
inline EnergyTable parse_energies(std::istream& in, int n, int isomer_count) {
  EnergyTable table;
  table.n = n;
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = detail::trim(line);
    if (text.empty() || text[0] == '#') continue;
    if (!header) {
      std::string compact;
      for (char c : text) {
        if (c != ' ' && c != '\t') compact += c;
      }
      if (compact != "isomer_index,relative_energy")
        throw ParseError("energy file line " + std::to_string(line_no) +
                         ": expected header isomer_index,relative_energy");
      header = true;
      continue;
    }
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("energy file line " + std::to_string(line_no) + ": expected two fields");
    const std::string index_text = detail::trim(text.substr(0, comma));
    const std::string energy_text = detail::trim(text.substr(comma + 1));
    std::size_t used_index = 0;
    std::size_t used_energy = 0;
    int index = 0;
    double energy = 0.0;
    try {
      index = std::stoi(index_text, &used_index);
      energy = std::stod(energy_text, &used_energy);
    } catch (const std::logic_error&) {
      throw ParseError("energy file line " + std::to_string(line_no) + ": malformed number");
    }
    if (used_index != index_text.size() || used_energy != energy_text.size() || !std::isfinite(energy))
      throw ParseError("energy file line " + std::to_string(line_no) + ": malformed number");
    if (index < 1 || index > isomer_count)
      throw IndexOutOfRange("energy file line " + std::to_string(line_no) + ": isomer " + std::to_string(index) +
                            " does not exist for n=" + std::to_string(n) + " (" + std::to_string(isomer_count) +
                            " isomers)");
    if (energy < 0) throw NegativeEnergy("energy file line " + std::to_string(line_no) + ": negative relative energy");
    if (!table.energies.emplace(index, energy).second)
      throw ParseError("energy file line " + std::to_string(line_no) + ": duplicate isomer " + std::to_string(index));
  }
  if (!header) throw ParseError("energy file is empty");
  return table;
}

inline EnergyTable load_energies(const std::string& path, int n, int isomer_count) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open energy file '" + path + "'");
  return parse_energies(in, n, isomer_count);
}

enum class Transform { identity, log };

inline std::string to_string(Transform t) { return t == Transform::log ? "log" : "identity"; }

inline Transform parse_transform(const std::string& text) {
  if (text == "identity") return Transform::identity;
  if (text == "log") return Transform::log;
  throw InputError("unknown transform '" + text + "' (expected identity or log)");
}

struct RegressionResult {
  double rho = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  int samples = 0;
  Transform transform = Transform::identity;
};

/// Least squares of energy on the (transformed) predictor over the isomers
/// present in both inputs. Natural logarithm for Transform::log.
inline RegressionResult regress(const std::map<int, double>& predictor, const EnergyTable& energies,
                                Transform transform = Transform::identity) {
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& [index, value] : predictor) {
    const auto it = energies.energies.find(index);
    if (it == energies.energies.end()) continue;
    if (transform == Transform::log) {
      if (!(value > 0)) throw DomainError("log transform of nonpositive value for isomer " + std::to_string(index));
      x.push_back(std::log(value));
    } else {
      x.push_back(value);
    }
    y.push_back(it->second);
  }
  if (x.size() < 2) throw DegenerateInput("regression needs at least two paired samples");
  const double count = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx <= 0.0) throw DegenerateInput("predictor is constant");
  RegressionResult r;
  r.samples = static_cast<int>(x.size());
  r.transform = transform;
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  r.rho = syy > 0.0 ? std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0) : 0.0;
  return r;
}

struct SubsetRegression {
  int signature = 0;  // pentagon signature shared by the subset
  int size = 0;
  std::optional<RegressionResult> fit;  // empty when the subset is too small or constant
  bool consistent = true;
};

struct StabilityReport {
  std::vector<int> most_stable;   // lowest energies, ascending
  std::vector<int> least_stable;  // highest energies, ascending
  bool ordering_ok = false;
  RegressionResult global;
  bool correlation_ok = false;
  std::vector<SubsetRegression> subsets;
  bool subsets_ok = false;

  bool passes() const { return ordering_ok && correlation_ok && subsets_ok; }
};

inline constexpr double kStabilityMinCorrelation = 0.6;
inline constexpr int kStabilitySubsetFirst = 4;
inline constexpr int kStabilitySubsetLast = 14;

/// Whether a descriptor qualifies as a stability criterion. `descriptor`
/// and `signature` (pentagon signature) are keyed by isomer index and must
/// cover every isomer, as must the energies. A good descriptor puts the two
/// lowest-energy isomers first and the three highest-energy isomers last, in
/// energetic order and strictly separated from the rest, correlates with
/// the energy above 0.6, and keeps the sign of its slope and correlation on
/// every subset of equal pentagon signature 4..14.
inline StabilityReport stability_criterion_check(const std::map<int, double>& descriptor,
                                                 const std::map<int, int>& signature, const EnergyTable& energies,
                                                 Transform transform = Transform::identity) {
  for (const auto& [index, value] : descriptor) {
    if (!energies.contains(index))
      throw IncompleteEnergies("energies do not cover isomer " + std::to_string(index));
  }
  if (descriptor.size() < 5) throw DegenerateInput("stability check needs at least five isomers");

  StabilityReport report;
  std::vector<int> by_energy;
  for (const auto& [index, value] : descriptor) by_energy.push_back(index);
  std::stable_sort(by_energy.begin(), by_energy.end(),
                   [&](int a, int b) { return energies.at(a) < energies.at(b); });
  report.most_stable.assign(by_energy.begin(), by_energy.begin() + 2);
  report.least_stable.assign(by_energy.end() - 3, by_energy.end());

  auto value_of = [&](int index) {
    const double v = descriptor.at(index);
    return transform == Transform::log ? std::log(v) : v;
  };
  std::vector<int> by_descriptor = by_energy;
  std::stable_sort(by_descriptor.begin(), by_descriptor.end(),
                   [&](int a, int b) { return value_of(a) < value_of(b); });
  const std::size_t last = by_descriptor.size() - 1;
  const bool head_order = by_descriptor[0] == report.most_stable[0] && by_descriptor[1] == report.most_stable[1] &&
                          value_of(by_descriptor[0]) < value_of(by_descriptor[1]) &&
                          value_of(by_descriptor[1]) < value_of(by_descriptor[2]);
  const bool tail_order = by_descriptor[last - 2] == report.least_stable[0] &&
                          by_descriptor[last - 1] == report.least_stable[1] &&
                          by_descriptor[last] == report.least_stable[2] &&
                          value_of(by_descriptor[last - 3]) < value_of(by_descriptor[last - 2]) &&
                          value_of(by_descriptor[last - 2]) < value_of(by_descriptor[last - 1]) &&
                          value_of(by_descriptor[last - 1]) < value_of(by_descriptor[last]);
  report.ordering_ok = head_order && tail_order;

  report.global = regress(descriptor, energies, transform);
  report.correlation_ok = report.global.rho > kStabilityMinCorrelation;

  report.subsets_ok = true;
  const bool rising = report.global.rho > 0;
  for (int s = kStabilitySubsetFirst; s <= kStabilitySubsetLast; ++s) {
    SubsetRegression sub;
    sub.signature = s;
    std::map<int, double> members;
    for (const auto& [index, value] : descriptor) {
      const auto it = signature.find(index);
      if (it == signature.end()) throw InputError("no pentagon signature for isomer " + std::to_string(index));
      if (it->second == s) members.emplace(index, value);
    }
    sub.size = static_cast<int>(members.size());
    if (sub.size >= 3) {
      try {
        sub.fit = regress(members, energies, transform);
      } catch (const DegenerateInput&) {
        sub.fit.reset();
      }
    }
    if (sub.fit) {
      sub.consistent = (sub.fit->rho > 0) == rising && (sub.fit->slope > 0) == rising;
      report.subsets_ok = report.subsets_ok && sub.consistent;
    }
    report.subsets.push_back(sub);
  }
  return report;
}

}  // namespace fullerene
