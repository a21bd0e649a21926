#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "deptree/detail/parallel.hpp"
#include "deptree/error.hpp"
#include "deptree/features.hpp"
#include "deptree/graphs.hpp"
#include "deptree/io/treebank.hpp"
#include "deptree/numeric.hpp"

namespace deptree {

struct ProcessOptions {
  ErrorPolicy policy = ErrorPolicy::skip_and_report;
  unsigned threads = 0;         // 0 = default_thread_count()
  bool exact_rationals = false; // "p/q" instead of six-digit decimals
  std::size_t batch_size = 4096;
};

struct ProcessingReport {
  std::filesystem::path input;
  std::filesystem::path output;
  std::size_t processed = 0;
  std::vector<SkippedLine> skipped;
  double elapsed_seconds = 0;
};

struct CollectionReport {
  std::vector<ProcessingReport> treebanks;
  /// List entries that could not be opened (skip_and_report only).
  std::vector<std::filesystem::path> missing;
};

/// Renders one feature value for CSV: integers as digits, other values as
/// six-digit decimals or exact fractions, undefined values as nothing.
inline std::string render_value(const Feature& f, const std::optional<Rational>& v, bool exact) {
  if (!v) return {};
  if (f.integer || exact) return to_exact_string(*v);
  return to_decimal_string(*v, 6);
}

/// Columns after sentence_id: "n" first, then the remaining features in
/// the order given.
inline std::vector<const Feature*> csv_columns(const FeatureSpec& spec) {
  std::vector<const Feature*> cols{&find_feature("n")};
  for (const Feature* f : spec.features()) {
    if (f->name != "n") cols.push_back(f);
  }
  return cols;
}

inline std::string csv_header(const FeatureSpec& spec, bool with_treebank = false) {
  std::string h = with_treebank ? "treebank,sentence_id" : "sentence_id";
  for (const Feature* f : csv_columns(spec)) h += "," + f->name;
  return h + "\n";
}

/// CSV row (without sentence id) for a tree in the given word order.
inline std::string csv_row(const RootedTree& t, const Arrangement& a, const std::vector<const Feature*>& cols,
                           bool exact) {
  std::string row;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) row += ',';
    row += render_value(*cols[i], cols[i]->compute(t, a), exact);
  }
  return row;
}

namespace detail {

inline std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::WriteError, "cannot write '" + path.string() + "'");
  return out;
}

inline void check_written(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::WriteError, "failed writing '" + path.string() + "'");
}

/// Reads `input` batch by batch, computes rows in parallel and appends them
/// to `out` in input order, each prefixed by `prefix`.
inline ProcessingReport process_stream(const std::filesystem::path& input, std::ostream& out,
                                       const FeatureSpec& spec, const ProcessOptions& options,
                                       const std::string& prefix) {
  const auto start = std::chrono::steady_clock::now();
  ProcessingReport report;
  report.input = input;
  TreebankReader reader(input, options.policy);
  const auto cols = csv_columns(spec);

  std::vector<TreebankRecord> batch;
  std::vector<std::string> rows;
  bool more = true;
  while (more) {
    batch.clear();
    TreebankRecord r;
    while (batch.size() < options.batch_size && (more = reader.next(r))) batch.push_back(std::move(r));
    rows.assign(batch.size(), {});
    parallel_for(batch.size(), options.threads, [&](std::size_t i) {
      const auto& rec = batch[i];
      if (!rec.heads) return;
      const RootedTree t = RootedTree::from_head_vector(*rec.heads);
      rows[i] = prefix + std::to_string(rec.sentence) + "," +
                csv_row(t, Arrangement::identity(t.num_vertices()), cols, options.exact_rationals) + "\n";
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (batch[i].heads) {
        out << rows[i];
        ++report.processed;
      } else {
        const Error& e = *batch[i].error;
        report.skipped.push_back({batch[i].line, e.code(), e.what()});
      }
    }
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace detail

/// Writes one CSV row per valid sentence of a head-vector file. Every
/// sentence is measured in its own word order (word i at position i).
inline ProcessingReport process_treebank(const std::filesystem::path& input, const std::filesystem::path& output,
                                         const FeatureSpec& spec = {}, const ProcessOptions& options = {}) {
  if (!std::filesystem::is_regular_file(input)) {
    throw Error(ErrorCode::FileNotFound, "cannot open '" + input.string() + "'");
  }
  auto out = detail::open_output(output);
  out << csv_header(spec);
  ProcessingReport report;
  try {
    report = detail::process_stream(input, out, spec, options, "");
  } catch (...) {
    out.close();
    std::filesystem::remove(output);
    throw;
  }
  detail::check_written(out, output);
  report.output = output;
  return report;
}

/// Paths listed in a collection file, resolved against the file's directory.
/// Blank lines and lines starting with '#' are ignored.
inline std::vector<std::filesystem::path> read_collection_list(const std::filesystem::path& list_path) {
  std::ifstream in(list_path, std::ios::binary);
  if (!in || std::filesystem::is_directory(list_path)) {
    throw Error(ErrorCode::FileNotFound, "cannot open '" + list_path.string() + "'");
  }
  const auto base = list_path.parent_path();
  std::vector<std::filesystem::path> paths;
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto e = line.find_last_not_of(" \t\r");
    std::filesystem::path p(line.substr(b, e - b + 1));
    paths.push_back(p.is_relative() ? base / p : p);
  }
  return paths;
}

struct CollectionOptions : ProcessOptions {
  /// Write a single CSV at `output` with a leading treebank column instead
  /// of one CSV per treebank inside the `output` directory.
  bool merge = false;
};

/// Processes every treebank named in a list file. Per-treebank outputs are
/// named `<stem>.csv`; in merged mode the treebank column holds the file
/// name of each member.
inline CollectionReport process_collection(const std::filesystem::path& list_path,
                                           const std::filesystem::path& output, const FeatureSpec& spec = {},
                                           const CollectionOptions& options = {}) {
  const auto members = read_collection_list(list_path);
  CollectionReport report;

  std::vector<std::filesystem::path> present;
  for (const auto& m : members) {
    if (std::filesystem::is_regular_file(m)) {
      present.push_back(m);
    } else if (options.policy == ErrorPolicy::fail_fast) {
      throw Error(ErrorCode::FileNotFound, "collection member '" + m.string() + "' not found");
    } else {
      report.missing.push_back(m);
    }
  }

  if (options.merge) {
    auto out = detail::open_output(output);
    out << csv_header(spec, true);
    for (const auto& m : present) {
      auto r = detail::process_stream(m, out, spec, options, m.filename().string() + ",");
      r.output = output;
      report.treebanks.push_back(std::move(r));
    }
    detail::check_written(out, output);
    return report;
  }

  std::error_code ec;
  std::filesystem::create_directories(output, ec);
  if (!std::filesystem::is_directory(output)) {
    throw Error(ErrorCode::WriteError, "cannot create directory '" + output.string() + "'");
  }
  std::set<std::string> stems;
  for (const auto& m : present) {
    if (!stems.insert(m.stem().string()).second) {
      throw Error(ErrorCode::InvalidArgument, "two collection members share the name '" + m.stem().string() + "'");
    }
  }
  for (const auto& m : present) {
    report.treebanks.push_back(process_treebank(m, output / (m.stem().string() + ".csv"), spec, options));
  }
  return report;
}

}  // namespace deptree
