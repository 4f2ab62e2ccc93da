// Command-line front end: enumerate, wind and analyse fullerene isomers.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fullerene/fullerene.hpp"
#include "report.hpp"

namespace fullerene::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;
constexpr int kExitResource = 4;
constexpr int kExitInternal = 1;

constexpr int kSoftMaxN = 60;

// Where isomers come from: an enumeration, a spiral file or spirals given
// inline. File and inline spirals are numbered by their position.
struct Source {
  int n = 0;
  std::string spirals_path;
  std::vector<std::string> inline_spirals;
  bool ipr = false;

  void attach(CLI::App* cmd, bool allow_enumeration = true) {
    if (allow_enumeration) {
      cmd->add_option("--n", n, "atom count; enumerate every isomer");
      cmd->add_flag("--ipr", ipr, "with --n: isolated-pentagon isomers only");
    }
    cmd->add_option("--spirals", spirals_path, "spiral file (n and 12 pentagon positions per line)");
    cmd->add_option("--spiral", inline_spirals, "one spiral as \"n p1 ... p12\" (repeatable)");
  }
};

Json spiral_json(const SpiralSequence& s) { return Json(s.positions()); }

std::vector<SpiralSequence> parse_inline_spirals(const std::vector<std::string>& texts) {
  std::string joined;
  for (auto text : texts) {
    for (char& c : text) {
      if (c == ',') c = ' ';
    }
    joined += text + '\n';
  }
  std::istringstream in(joined);
  return read_spiral_file(in);
}

std::vector<Isomer> wind_numbered(const std::vector<SpiralSequence>& spirals, const std::string& origin) {
  std::vector<Isomer> out;
  out.reserve(spirals.size());
  for (std::size_t i = 0; i < spirals.size(); ++i) {
    const int index = static_cast<int>(i) + 1;
    int step = 0;
    std::string why;
    auto dual = try_wind(spirals[i], &step, &why);
    if (!dual)
      throw InvalidSpiral(step, origin + " spiral " + std::to_string(index) + " (" + spirals[i].to_string() +
                                    ") does not wind: " + why);
    out.push_back({index, spirals[i], dual->with_isomer_index(index)});
  }
  return out;
}

void check_n(const Context& ctx, int n) {
  if (!is_feasible(n)) throw InfeasibleN(n);
  if (n > kSoftMaxN)
    progress(ctx, "warning: n=" + std::to_string(n) + " is beyond the tested range; enumeration may take very long");
}

std::vector<Isomer> enumerate_for(const Context& ctx, int n, bool ipr) {
  check_n(ctx, n);
  progress(ctx, "enumerating C" + std::to_string(n) + (ipr ? " IPR" : "") + " isomers");
  const auto start = std::chrono::steady_clock::now();
  EnumerateOptions options;
  options.ipr_only = ipr;
  options.threads = ctx.threads;
  auto isomers = enumerate_and_wind(n, options);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  progress(ctx, std::to_string(isomers.size()) + (isomers.size() == 1 ? " isomer" : " isomers") + " (" +
                    format_double(std::round(seconds * 100) / 100) + " s)");
  return isomers;
}

std::vector<Isomer> load(const Context& ctx, const Source& src) {
  const int given = (src.n != 0) + !src.spirals_path.empty() + !src.inline_spirals.empty();
  if (given != 1) throw InputError("give exactly one of --n, --spirals or --spiral");
  if (src.n != 0) return enumerate_for(ctx, src.n, src.ipr);
  if (!src.inline_spirals.empty()) return wind_numbered(parse_inline_spirals(src.inline_spirals), "inline");
  std::ifstream in(src.spirals_path);
  if (!in) throw IoError("cannot open spiral file '" + src.spirals_path + "'");
  auto spirals = read_spiral_file(in);
  if (spirals.empty()) throw InputError("spiral file '" + src.spirals_path + "' contains no spirals");
  return wind_numbered(spirals, "'" + src.spirals_path + "'");
}

int common_n(const std::vector<Isomer>& isomers) {
  const int n = isomers.front().spiral.n();
  for (const auto& iso : isomers) {
    if (iso.spiral.n() != n) throw InputError("all isomers must have the same n for this command");
  }
  return n;
}

/// "2,4,8", "2..12" or a mix such as "2..6,10".
std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream items(text);
  std::string item;
  try {
    while (std::getline(items, item, ',')) {
      const auto dots = item.find("..");
      std::size_t used = 0;
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
        continue;
      }
      const std::string lo_text = item.substr(0, dots);
      const std::string hi_text = item.substr(dots + 2);
      const int lo = std::stoi(lo_text, &used);
      if (used != lo_text.size()) throw std::invalid_argument(item);
      const int hi = std::stoi(hi_text, &used);
      if (used != hi_text.size() || hi < lo || hi - lo > 100000) throw std::invalid_argument(item);
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
  } catch (const std::logic_error&) {
    throw InputError("malformed " + what + " list '" + text + "'");
  }
  if (out.empty()) throw InputError("empty " + what + " list");
  return out;
}

std::vector<int> parse_degrees(const std::string& text) {
  auto ks = parse_int_list(text, "degree");
  for (int k : ks) {
    if (k < 1) throw InputError("Newton degree must be at least 1 (got " + std::to_string(k) + ")");
  }
  return ks;
}

std::vector<GraphKind> parse_graph_kinds(const std::string& text) {
  if (text == "all") return {GraphKind::full, GraphKind::pentagon, GraphKind::hexagon};
  return {parse_graph_kind(text)};
}

std::string str(const BigInt& v) { return to_decimal(v); }
std::string str(int v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

// ---------------------------------------------------------------- enumerate

void cmd_enumerate(const Context& ctx, int n, bool ipr, const std::string& spiral_out) {
  check_n(ctx, n);
  progress(ctx, "enumerating C" + std::to_string(n) + (ipr ? " IPR" : "") + " isomers");
  EnumerateOptions options;
  options.ipr_only = ipr;
  options.threads = ctx.threads;
  const auto entries = enumerate_isomers(n, options);
  progress(ctx, std::to_string(entries.size()) + (entries.size() == 1 ? " isomer" : " isomers"));

  Json body{{"n", n}, {"ipr_only", ipr}, {"isomer_count", entries.size()}};
  CsvTable table;
  if (!spiral_out.empty()) {
    std::ofstream file(spiral_out);
    if (!file) throw IoError("cannot open spiral output '" + spiral_out + "'");
    file << "# fullerene " << kVersion << '\n' << "# invocation: " << ctx.invocation << '\n';
    file << "# " << entries.size() << " isomers of C" << n << (ipr ? " (IPR only)" : "")
         << ", line order is the isomer index\n";
    for (const auto& e : entries) file << e.spiral.to_string() << '\n';
    if (!file) throw IoError("failed writing spiral output '" + spiral_out + "'");
    body["spiral_file"] = spiral_out;
    table.header = {"n", "ipr_only", "isomer_count", "spiral_file"};
    table.rows.push_back({str(n), str(ipr), std::to_string(entries.size()), spiral_out});
  } else {
    Json list = Json::array();
    table.header = {"isomer_index", "n", "p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8", "p9", "p10", "p11", "p12"};
    for (const auto& e : entries) {
      list.push_back({{"index", e.index}, {"spiral", spiral_json(e.spiral)}});
      std::vector<std::string> row{str(e.index), str(n)};
      for (int p : e.spiral.positions()) row.push_back(str(p));
      table.rows.push_back(std::move(row));
    }
    body["isomers"] = std::move(list);
  }
  emit(ctx, body, {table});
}

// --------------------------------------------------------------------- wind

void cmd_wind(const Context& ctx, const Source& src, const std::string& emit_what, const std::string& graph) {
  if (emit_what != "summary" && emit_what != "edges") throw InputError("--emit must be summary or edges");
  const GraphKind kind = parse_graph_kind(graph);
  const auto isomers = load(ctx, src);
  Json list = Json::array();
  CsvTable summary{{"isomer_index", "n", "spiral", "canonical_spiral", "faces", "edges", "t5_edges", "t6_edges",
                    "edge_relation_holds", "ipr"},
                   {}};
  CsvTable edges{{"isomer_index", "graph_kind", "u", "v"}, {}};
  for (const auto& iso : isomers) {
    const auto relation = edge_relation_check(iso.dual);
    const auto canonical = canonical_spiral(iso.dual);
    Json item{{"index", iso.index},
              {"n", iso.spiral.n()},
              {"spiral", spiral_json(iso.spiral)},
              {"canonical_spiral", spiral_json(canonical)},
              {"faces", iso.dual.face_count()},
              {"edges", iso.dual.edge_count()},
              {"t5_edges", relation.pentagon_edges},
              {"t6_edges", relation.hexagon_edges},
              {"edge_relation_holds", relation.holds},
              {"ipr", relation.pentagon_edges == 0}};
    summary.rows.push_back({str(iso.index), str(iso.spiral.n()), iso.spiral.to_string(), canonical.to_string(),
                            str(iso.dual.face_count()), str(iso.dual.edge_count()), str(relation.pentagon_edges),
                            str(relation.hexagon_edges), str(relation.holds), str(relation.pentagon_edges == 0)});
    if (emit_what == "edges") {
      const auto g = induced_subgraph(iso.dual, kind);
      Json pairs = Json::array();
      for (int v = 0; v < g.vertex_count(); ++v) {
        for (int u : g.neighbors(v)) {
          if (u <= v) continue;
          pairs.push_back({v + 1, u + 1});
          edges.rows.push_back({str(iso.index), std::string(to_string(kind)), str(v + 1), str(u + 1)});
        }
      }
      item["graph_kind"] = std::string(to_string(kind));
      item["edge_list"] = std::move(pairs);
    }
    list.push_back(std::move(item));
  }
  emit(ctx, Json{{"isomers", list}}, {emit_what == "edges" ? edges : summary});
}

// ------------------------------------------------------------------- newton

void cmd_newton(const Context& ctx, const Source& src, const std::string& graph, const std::string& degrees) {
  const GraphKind kind = parse_graph_kind(graph);
  const auto ks = parse_degrees(degrees);
  const auto isomers = load(ctx, src);
  const int top = *std::max_element(ks.begin(), ks.end());
  const auto table = newton_table(isomers, kind, top, ctx.threads);
  Json rows = Json::array();
  CsvTable csv{{"n", "isomer_index", "graph_kind", "k", "value"}, {}};
  for (std::size_t i = 0; i < isomers.size(); ++i) {
    for (int k : ks) {
      const std::string value = str(table[i].values[k]);
      rows.push_back({{"n", isomers[i].spiral.n()},
                      {"isomer_index", isomers[i].index},
                      {"graph_kind", std::string(to_string(kind))},
                      {"k", k},
                      {"value", value}});
      csv.rows.push_back({str(isomers[i].spiral.n()), str(isomers[i].index), std::string(to_string(kind)), str(k),
                          value});
    }
  }
  emit(ctx, Json{{"rows", rows}}, {csv});
}

// ----------------------------------------------------------------- spectrum

void cmd_spectrum(const Context& ctx, const Source& src, const std::string& graph, double tol) {
  const GraphKind kind = parse_graph_kind(graph);
  if (!(tol > 0)) throw InputError("--tol must be positive");
  const auto isomers = load(ctx, src);
  std::vector<Spectrum> spectra(isomers.size());
  parallel_for(isomers.size(), ctx.threads, [&](std::size_t i) {
    spectra[i] = eigenvalues(AdjacencyMatrix(induced_subgraph(isomers[i].dual, kind)), tol);
  });
  Json list = Json::array();
  CsvTable csv{{"n", "isomer_index", "graph_kind", "lambda_max", "lower_mean", "lower_rms", "upper", "eigenvalues"},
               {}};
  for (std::size_t i = 0; i < isomers.size(); ++i) {
    const auto g = induced_subgraph(isomers[i].dual, kind);
    const auto bounds = lambda_max_bounds(g);
    const auto abs = absolute_spectrum(spectra[i]);
    std::vector<std::string> values;
    for (double v : spectra[i].values) values.push_back(format_double(v));
    list.push_back({{"n", isomers[i].spiral.n()},
                    {"isomer_index", isomers[i].index},
                    {"graph_kind", std::string(to_string(kind))},
                    {"eigenvalues", spectra[i].values},
                    {"lambda_max", spectra[i].lambda_max()},
                    {"bounds", {{"lower_mean", bounds.lower_mean}, {"lower_rms", bounds.lower_rms}, {"upper", bounds.upper}}},
                    {"absolute_spectrum",
                     {{"values", abs.values}, {"below_one", abs.below_one}, {"at_least_one", abs.at_least_one}}},
                    {"sweeps", spectra[i].sweeps},
                    {"tolerance", spectra[i].tolerance}});
    csv.rows.push_back({str(isomers[i].spiral.n()), str(isomers[i].index), std::string(to_string(kind)),
                        format_double(spectra[i].lambda_max()), format_double(bounds.lower_mean),
                        format_double(bounds.lower_rms), format_double(bounds.upper), join(values, " ")});
  }
  emit(ctx, Json{{"spectra", list}}, {csv});
}

// ----------------------------------------------------------------- charpoly

void cmd_charpoly(const Context& ctx, const Source& src, const std::string& graph) {
  const GraphKind kind = parse_graph_kind(graph);
  const auto isomers = load(ctx, src);
  std::vector<std::optional<CharPoly>> polys(isomers.size());
  parallel_for(isomers.size(), ctx.threads, [&](std::size_t i) {
    polys[i].emplace(char_poly(AdjacencyMatrix(induced_subgraph(isomers[i].dual, kind))));
  });
  Json list = Json::array();
  CsvTable csv{{"n", "isomer_index", "graph_kind", "degree", "coefficients"}, {}};
  for (std::size_t i = 0; i < isomers.size(); ++i) {
    std::vector<std::string> coefficients;
    for (const auto& c : polys[i]->coefficients()) coefficients.push_back(str(c));
    list.push_back({{"n", isomers[i].spiral.n()},
                    {"isomer_index", isomers[i].index},
                    {"graph_kind", std::string(to_string(kind))},
                    {"degree", polys[i]->degree()},
                    {"coefficients", coefficients}});
    csv.rows.push_back({str(isomers[i].spiral.n()), str(isomers[i].index), std::string(to_string(kind)),
                        str(polys[i]->degree()), join(coefficients, " ")});
  }
  emit(ctx, Json{{"polynomials", list}}, {csv});
}

// ------------------------------------------------------------------ cluster

void cmd_cluster(const Context& ctx, const Source& src, const std::string& graph,
                 const std::vector<std::string>& schema_texts, bool summary, bool allow_odd) {
  const GraphKind kind = parse_graph_kind(graph);
  if (schema_texts.empty()) throw InputError("give at least one --schema");
  if (schema_texts.size() > 1 && !summary) throw InputError("several --schema values need --summary");
  std::vector<ClusterSchema> schemas;
  int top = 1;
  for (const auto& text : schema_texts) {
    schemas.push_back(parse_cluster_schema(text));
    for (int k : schemas.back().degrees()) top = std::max(top, k);
  }
  const auto isomers = load(ctx, src);
  const int n = common_n(isomers);
  const auto table = newton_table(isomers, kind, top, ctx.threads);

  Json results = Json::array();
  CsvTable summary_csv{{"schema", "cluster_count", "singleton_count", "complete"}, {}};
  CsvTable listing;
  for (const auto& schema : schemas) {
    const auto c = clusterize(n, kind, table, schema, allow_odd);
    Json item{{"schema", schema.to_string()},
              {"degrees", schema.degrees()},
              {"cluster_count", c.cluster_count()},
              {"singleton_count", c.singleton_count()},
              {"complete", c.complete()}};
    summary_csv.rows.push_back(
        {schema.to_string(), std::to_string(c.cluster_count()), std::to_string(c.singleton_count()), str(c.complete())});
    if (!summary) {
      Json clusters = Json::array();
      for (int k : schema.degrees()) listing.header.push_back("N" + std::to_string(k));
      listing.header.push_back("cluster_size");
      listing.header.push_back("isomer_indices");
      for (const auto& [key, members] : c.clusters) {
        std::vector<std::string> keys;
        for (const auto& v : key) keys.push_back(str(v));
        std::vector<std::string> ids;
        for (int m : members) ids.push_back(str(m));
        clusters.push_back({{"key", keys}, {"size", members.size()}, {"isomers", members}});
        auto row = keys;
        row.push_back(std::to_string(members.size()));
        row.push_back(join(ids, "|"));
        listing.rows.push_back(std::move(row));
      }
      item["clusters"] = std::move(clusters);
    }
    results.push_back(std::move(item));
  }
  Json body{{"n", n}, {"graph_kind", std::string(to_string(kind))}, {"isomer_count", isomers.size()},
            {"results", results}};
  emit(ctx, body, {summary ? summary_csv : listing});
}

// -------------------------------------------------------------------- kstar

void cmd_kstar(const Context& ctx, const Source& src, const std::string& graph) {
  const GraphKind kind = parse_graph_kind(graph);
  const auto isomers = load(ctx, src);
  const int n = common_n(isomers);
  const int m = induced_subgraph(isomers.front().dual, kind).vertex_count();
  const auto table = newton_table(isomers, kind, std::max(m, 2), ctx.threads);
  const auto r = k_star(n, kind, table, m);
  Json tuples = Json::array();
  std::vector<std::string> tuple_text;
  for (auto [k1, k2] : r.pair_tuples) {
    tuples.push_back({k1, k2});
    tuple_text.push_back("(" + str(k1) + "," + str(k2) + ")");
  }
  Json body{{"n", n},
            {"graph_kind", std::string(to_string(kind))},
            {"isomer_count", isomers.size()},
            {"k_single", r.k_single},
            {"k_pair", r.k_pair},
            {"pair_tuples", tuples},
            {"k_hierarchical", r.k_hierarchical}};
  CsvTable csv{{"n", "graph_kind", "isomer_count", "k_single", "k_pair", "pair_tuples", "k_hierarchical"},
               {{str(n), std::string(to_string(kind)), std::to_string(isomers.size()), str(r.k_single),
                 str(r.k_pair), join(tuple_text, " "), str(r.k_hierarchical)}}};
  emit(ctx, body, {csv});
}

// --------------------------------------------------------------- cospectral

void cmd_cospectral(const Context& ctx, const std::string& n_list, const Source& src, const std::string& graph) {
  const auto kinds = parse_graph_kinds(graph);
  std::vector<std::vector<Isomer>> batches;
  if (!n_list.empty()) {
    if (!src.spirals_path.empty() || !src.inline_spirals.empty())
      throw InputError("give either --n or --spirals/--spiral");
    for (int n : parse_int_list(n_list, "n")) {
      if (n % 2) continue;  // ranges such as 32..60 mean the even values
      batches.push_back(enumerate_for(ctx, n, src.ipr));
    }
    if (batches.empty()) {
      const int n = parse_int_list(n_list, "n").front();
      throw InfeasibleN(n);
    }
  } else {
    batches.push_back(load(ctx, src));
  }

  Json census = Json::array();
  CsvTable counts{{"n", "isomer_count", "graph_kind", "shared_spectra", "isomers_involved", "cospectral_pairs",
                   "non_isomorphic_groups"},
                  {}};
  CsvTable groups{{"n", "graph_kind", "group", "isomer_index", "spiral", "isomorphism_classes"}, {}};
  for (const auto& isomers : batches) {
    const int n = common_n(isomers);
    std::map<int, const Isomer*> by_index;
    for (const auto& iso : isomers) by_index[iso.index] = &iso;
    progress(ctx, "cospectral census for C" + std::to_string(n));
    const auto result = cospectral_census(n, isomers, kinds, ctx.threads);
    Json rows = Json::array();
    for (const auto& row : result.rows) {
      const std::string kind(to_string(row.kind));
      int non_isomorphic = 0;
      Json group_list = Json::array();
      for (std::size_t g = 0; g < row.groups.size(); ++g) {
        const auto& group = row.groups[g];
        non_isomorphic += !group.all_isomorphic();
        Json members = Json::array();
        for (int idx : group.isomers) {
          members.push_back({{"index", idx}, {"spiral", spiral_json(by_index.at(idx)->spiral)}});
          groups.rows.push_back({str(n), kind, std::to_string(g + 1), str(idx), by_index.at(idx)->spiral.to_string(),
                                 str(group.isomorphism_classes)});
        }
        group_list.push_back({{"isomers", members},
                              {"isomorphism_classes", group.isomorphism_classes},
                              {"all_isomorphic", group.all_isomorphic()}});
      }
      rows.push_back({{"graph_kind", kind},
                      {"shared_spectra", row.shared_spectra()},
                      {"isomers_involved", row.isomers_involved()},
                      {"cospectral_pairs", row.cospectral_pairs()},
                      {"non_isomorphic_groups", non_isomorphic},
                      {"groups", group_list}});
      counts.rows.push_back({str(n), std::to_string(isomers.size()), kind, str(row.shared_spectra()),
                             str(row.isomers_involved()), std::to_string(row.cospectral_pairs()), str(non_isomorphic)});
    }
    census.push_back({{"n", n}, {"isomer_count", isomers.size()}, {"rows", rows}});
  }
  emit(ctx, Json{{"census", census}}, {counts, groups});
}

// -------------------------------------------------------------- descriptors

Json descriptor_json(const DescriptorRecord& r) {
  Json newton = Json::object();
  for (std::size_t i = 0; i < r.newton_degrees.size(); ++i)
    newton[std::to_string(r.newton_degrees[i])] = str(r.newton_values[i]);
  return {{"n", r.n},
          {"isomer_index", r.isomer_index},
          {"pentagon_indices", r.p},
          {"P1", r.P1},
          {"theta", format_fraction(r.theta)},
          {"theta_exact", std::to_string(r.theta.numerator()) + "/" + std::to_string(r.theta.denominator())},
          {"ipr", r.ipr},
          {"lambda_max", r.lambda_max},
          {"newton_t6", newton}};
}

void cmd_descriptors(const Context& ctx, const Source& src, const std::string& degrees) {
  DescriptorConfig config;
  config.newton_degrees = parse_degrees(degrees);
  config.threads = ctx.threads;
  const auto isomers = load(ctx, src);
  const auto records = descriptor_table(isomers, config);
  CsvTable csv{{"n", "isomer_index", "p1", "p2", "p3", "p4", "p5", "P1", "theta", "ipr", "lambda_max"}, {}};
  for (int k : config.newton_degrees) csv.header.push_back("N6_" + std::to_string(k));
  Json list = Json::array();
  for (const auto& r : records) {
    std::vector<std::string> row{str(r.n), str(r.isomer_index)};
    for (int p : r.p) row.push_back(str(p));
    row.push_back(str(r.P1));
    row.push_back(format_fraction(r.theta));
    row.push_back(str(r.ipr));
    row.push_back(format_double(r.lambda_max));
    for (const auto& v : r.newton_values) row.push_back(str(v));
    csv.rows.push_back(std::move(row));
    list.push_back(descriptor_json(r));
  }
  emit(ctx, Json{{"descriptors", list}}, {csv});
}

// ---------------------------------------------------------------- correlate

// Descriptor names: newton:K (N(A6,K)), P1, theta, lambda_max.
std::map<int, double> descriptor_values(const std::vector<Isomer>& isomers, const std::string& name, int threads) {
  DescriptorConfig config;
  config.threads = threads;
  config.newton_degrees.clear();
  int newton_k = 0;
  if (name.rfind("newton:", 0) == 0) {
    try {
      std::size_t used = 0;
      newton_k = std::stoi(name.substr(7), &used);
      if (used != name.size() - 7) throw std::invalid_argument(name);
    } catch (const std::logic_error&) {
      throw InputError("malformed descriptor '" + name + "'");
    }
    if (newton_k < 1) throw InputError("Newton degree must be at least 1");
    config.newton_degrees.push_back(newton_k);
  } else if (name != "P1" && name != "theta" && name != "lambda_max") {
    throw InputError("unknown descriptor '" + name + "' (expected newton:K, P1, theta or lambda_max)");
  }
  std::map<int, double> out;
  for (const auto& r : descriptor_table(isomers, config)) {
    double v = 0.0;
    if (newton_k) v = to_double(r.newton_values.front());
    else if (name == "P1") v = r.P1;
    else if (name == "theta") v = boost::rational_cast<double>(r.theta);
    else v = r.lambda_max;
    out[r.isomer_index] = v;
  }
  return out;
}

Json regression_json(const RegressionResult& r) {
  return {{"rho", r.rho}, {"slope", r.slope}, {"intercept", r.intercept}, {"samples", r.samples},
          {"transform", to_string(r.transform)}};
}

void cmd_correlate(const Context& ctx, const Source& src, const std::string& energies_path,
                   const std::string& descriptor, const std::string& transform_text, bool stability) {
  const Transform transform = parse_transform(transform_text);
  const auto isomers = load(ctx, src);
  const int n = common_n(isomers);
  // Reading the energies first turns a missing file into an I/O error before
  // any heavy work.
  const auto energies = load_energies(energies_path, n, static_cast<int>(isomers.size()));
  const auto values = descriptor_values(isomers, descriptor, ctx.threads);
  const auto fit = regress(values, energies, transform);

  Json body{{"n", n}, {"descriptor", descriptor}, {"energy_rows", energies.size()}, {"regression", regression_json(fit)}};
  CsvTable main{{"n", "descriptor", "transform", "samples", "rho", "slope", "intercept"},
                {{str(n), descriptor, to_string(transform), str(fit.samples), format_double(fit.rho),
                  format_double(fit.slope), format_double(fit.intercept)}}};
  std::vector<CsvTable> tables{main};
  if (stability) {
    std::map<int, int> signature;
    for (const auto& iso : isomers) signature[iso.index] = pentagon_signature(iso.dual);
    const auto report = stability_criterion_check(values, signature, energies, transform);
    Json subsets = Json::array();
    CsvTable sub_csv{{"signature", "size", "rho", "slope", "intercept", "consistent"}, {}};
    for (const auto& s : report.subsets) {
      subsets.push_back({{"signature", s.signature},
                         {"size", s.size},
                         {"regression", s.fit ? regression_json(*s.fit) : Json(nullptr)},
                         {"consistent", s.consistent}});
      sub_csv.rows.push_back({str(s.signature), str(s.size), s.fit ? format_double(s.fit->rho) : "",
                              s.fit ? format_double(s.fit->slope) : "", s.fit ? format_double(s.fit->intercept) : "",
                              str(s.consistent)});
    }
    body["stability"] = {{"most_stable", report.most_stable},
                         {"least_stable", report.least_stable},
                         {"ordering_ok", report.ordering_ok},
                         {"correlation_ok", report.correlation_ok},
                         {"subsets_ok", report.subsets_ok},
                         {"passes", report.passes()},
                         {"subsets", subsets}};
    std::vector<std::string> best;
    std::vector<std::string> worst;
    for (int i : report.most_stable) best.push_back(str(i));
    for (int i : report.least_stable) worst.push_back(str(i));
    tables.push_back({{"most_stable", "least_stable", "ordering_ok", "correlation_ok", "subsets_ok", "passes"},
                      {{join(best, "|"), join(worst, "|"), str(report.ordering_ok), str(report.correlation_ok),
                        str(report.subsets_ok), str(report.passes())}}});
    tables.push_back(sub_csv);
  }
  emit(ctx, body, tables);
}

std::string invocation_of(int argc, char** argv) {
  std::vector<std::string> parts;
  for (int i = 0; i < argc; ++i) parts.push_back(quote_argument(argv[i]));
  return join(parts, " ");
}

int run(int argc, char** argv) {
  CLI::App app{"Fullerene face spirals, facet graphs and exact spectral invariants", "fullerene"};
  app.set_version_flag("--version", std::string("fullerene ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  ctx.invocation = invocation_of(argc, argv);
  std::string format = "csv";
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", ctx.threads, "worker threads (default: all cores)")->check(CLI::PositiveNumber);
  app.add_option("--out", ctx.out_path, "write the report to this file instead of stdout");
  app.add_flag("--quiet", ctx.quiet, "no progress messages on stderr");

  int n_enum = 0;
  bool ipr_enum = false;
  std::string spiral_out;
  auto* enumerate = app.add_subcommand("enumerate", "list every isomer by canonical spiral");
  enumerate->add_option("--n", n_enum, "atom count")->required();
  enumerate->add_flag("--ipr", ipr_enum, "isolated-pentagon isomers only");
  enumerate->add_option("--spiral-out", spiral_out, "also write a spiral file");

  Source wind_src;
  std::string wind_emit = "summary";
  std::string wind_graph = "t";
  auto* wind = app.add_subcommand("wind", "wind spirals into duals and summarise them");
  wind_src.attach(wind);
  wind->add_option("--emit", wind_emit, "summary or edges");
  wind->add_option("--graph", wind_graph, "graph for --emit edges: t, t5 or t6");

  Source newton_src;
  std::string newton_graph = "t6";
  std::string newton_k = "2";
  auto* newton = app.add_subcommand("newton", "exact Newton values N(A,k) = trace(A^k)");
  newton_src.attach(newton);
  newton->add_option("--graph", newton_graph, "t, t5 or t6");
  newton->add_option("--k", newton_k, "degrees, e.g. 2,4 or 2..12");

  Source spectrum_src;
  std::string spectrum_graph = "t6";
  double spectrum_tol = kDefaultJacobiTolerance;
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues (floating point, diagnostic)");
  spectrum_src.attach(spectrum);
  spectrum->add_option("--graph", spectrum_graph, "t, t5 or t6");
  spectrum->add_option("--tol", spectrum_tol, "Jacobi off-diagonal tolerance");

  Source charpoly_src;
  std::string charpoly_graph = "t6";
  auto* charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial coefficients");
  charpoly_src.attach(charpoly);
  charpoly->add_option("--graph", charpoly_graph, "t, t5 or t6");

  Source cluster_src;
  std::string cluster_graph = "t6";
  std::vector<std::string> cluster_schemas;
  bool cluster_summary = false;
  bool cluster_odd = false;
  auto* cluster = app.add_subcommand("cluster", "group isomers by exact Newton values");
  cluster_src.attach(cluster);
  cluster->add_option("--graph", cluster_graph, "t, t5 or t6");
  cluster->add_option("--schema", cluster_schemas, "single:K, pair:K1,K2 or hierarchical:K (repeatable)");
  cluster->add_flag("--summary", cluster_summary, "only cluster and singleton counts per schema");
  cluster->add_flag("--allow-odd", cluster_odd, "permit odd Newton degrees");

  Source kstar_src;
  std::string kstar_graph = "t6";
  auto* kstar = app.add_subcommand("kstar", "minimal degrees for a complete clusterization");
  kstar_src.attach(kstar);
  kstar->add_option("--graph", kstar_graph, "t, t5 or t6");

  Source cospectral_src;
  std::string cospectral_n;
  std::string cospectral_graph = "all";
  auto* cospectral_cmd = app.add_subcommand("cospectral", "census of isomers sharing a spectrum");
  cospectral_src.attach(cospectral_cmd, false);
  cospectral_cmd->add_option("--n", cospectral_n, "atom count, list or range such as 32..60");
  cospectral_cmd->add_flag("--ipr", cospectral_src.ipr, "isolated-pentagon isomers only");
  cospectral_cmd->add_option("--graph", cospectral_graph, "t, t5, t6 or all");

  Source descriptors_src;
  std::string descriptor_k = "2";
  auto* descriptors = app.add_subcommand("descriptors", "pentagon indices, signature, asymmetry and Newton values");
  descriptors_src.attach(descriptors);
  descriptors->add_option("--k", descriptor_k, "Newton degrees of the hexagon graph");

  Source correlate_src;
  std::string energies_path;
  std::string descriptor = "newton:2";
  std::string transform = "identity";
  bool stability = false;
  auto* correlate = app.add_subcommand("correlate", "regress relative energies on a descriptor");
  correlate_src.attach(correlate);
  correlate->add_option("--energies", energies_path, "CSV isomer_index,relative_energy")->required();
  correlate->add_option("--descriptor", descriptor, "newton:K, P1, theta or lambda_max");
  correlate->add_option("--transform", transform, "identity or log (natural)");
  correlate->add_flag("--stability", stability, "also run the stability-criterion check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  ctx.format = format == "json" ? Format::json : Format::csv;
  try {
    ctx.command = app.get_subcommands().front()->get_name();
    if (*enumerate) {
      cmd_enumerate(ctx, n_enum, ipr_enum, spiral_out);
    } else if (*wind) {
      cmd_wind(ctx, wind_src, wind_emit, wind_graph);
    } else if (*newton) {
      cmd_newton(ctx, newton_src, newton_graph, newton_k);
    } else if (*spectrum) {
      cmd_spectrum(ctx, spectrum_src, spectrum_graph, spectrum_tol);
    } else if (*charpoly) {
      cmd_charpoly(ctx, charpoly_src, charpoly_graph);
    } else if (*cluster) {
      cmd_cluster(ctx, cluster_src, cluster_graph, cluster_schemas, cluster_summary, cluster_odd);
    } else if (*kstar) {
      cmd_kstar(ctx, kstar_src, kstar_graph);
    } else if (*cospectral_cmd) {
      cmd_cospectral(ctx, cospectral_n, cospectral_src, cospectral_graph);
    } else if (*descriptors) {
      cmd_descriptors(ctx, descriptors_src, descriptor_k);
    } else if (*correlate) {
      cmd_correlate(ctx, correlate_src, energies_path, descriptor, transform, stability);
    }
  } catch (const IoError& e) {
    std::cerr << "fullerene: I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ResourceLimit& e) {
    std::cerr << "fullerene: resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "fullerene: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "fullerene: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace
}  // namespace fullerene::cli

int main(int argc, char** argv) { return fullerene::cli::run(argc, argv); }
