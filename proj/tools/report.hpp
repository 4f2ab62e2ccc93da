#pragma once

// Output plumbing for the command-line tool: CSV tables, JSON documents and
// the reproducibility header both carry.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fullerene/errors.hpp"
#include "fullerene/version.hpp"

namespace fullerene::cli {

using Json = nlohmann::ordered_json;

enum class Format { csv, json };

struct Context {
  Format format = Format::csv;
  int threads = 0;
  std::string out_path;  // empty: stdout
  bool quiet = false;
  std::string command;
  std::string invocation;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  std::string out = buffer;
  return out == "-0" ? "0" : out;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::string quote_argument(const std::string& arg) {
  if (!arg.empty() && arg.find_first_of(" \t\"'") == std::string::npos) return arg;
  std::string out = "'";
  for (char c : arg) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

inline void progress(const Context& ctx, const std::string& message) {
  if (!ctx.quiet) std::cerr << "[fullerene] " << message << std::endl;
}

/// Writes the report to --out or stdout. JSON gets a "_meta" object first;
/// CSV gets "# " comment lines, then the tables separated by blank lines.
inline void emit(const Context& ctx, const Json& body, const std::vector<CsvTable>& tables) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!ctx.out_path.empty()) {
    file.open(ctx.out_path);
    if (!file) throw IoError("cannot open output file '" + ctx.out_path + "'");
    out = &file;
  }
  if (ctx.format == Format::json) {
    Json doc;
    doc["_meta"] = {{"tool", "fullerene"}, {"version", kVersion}, {"command", ctx.command},
                    {"invocation", ctx.invocation}};
    for (const auto& [key, value] : body.items()) doc[key] = value;
    *out << doc.dump(2) << '\n';
  } else {
    *out << "# fullerene " << kVersion << '\n' << "# invocation: " << ctx.invocation << '\n';
    for (std::size_t t = 0; t < tables.size(); ++t) {
      if (t) *out << '\n';
      std::vector<std::string> fields;
      for (const auto& h : tables[t].header) fields.push_back(csv_field(h));
      *out << join(fields, ",") << '\n';
      for (const auto& row : tables[t].rows) {
        fields.clear();
        for (const auto& f : row) fields.push_back(csv_field(f));
        *out << join(fields, ",") << '\n';
      }
    }
  }
  out->flush();
  if (!*out) throw IoError("failed writing report");
}

}  // namespace fullerene::cli
