#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "deptree/error.hpp"
#include "deptree/graphs.hpp"

namespace deptree {

enum class ErrorPolicy { fail_fast, skip_and_report };

struct SkippedLine {
  std::size_t line = 0;
  ErrorCode code = ErrorCode::MalformedHeadVector;
  std::string message;
};

/// One non-blank line of a head-vector file.
struct TreebankRecord {
  std::size_t line = 0;
  std::size_t sentence = 0;  // 1-based index among non-blank lines
  std::optional<HeadVector> heads;
  std::optional<Error> error;
};

inline bool is_blank(std::string_view s) {
  for (char c : s) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

/// Streams the sentences of a head-vector file in file order. Blank lines
/// are ignored; every other line is one sentence.
class TreebankReader {
public:
  explicit TreebankReader(const std::filesystem::path& path, ErrorPolicy policy = ErrorPolicy::skip_and_report)
      : path_(path), policy_(policy), in_(path, std::ios::binary) {
    if (!in_ || std::filesystem::is_directory(path)) {
      throw Error(ErrorCode::FileNotFound, "cannot open '" + path.string() + "'");
    }
  }

  const std::filesystem::path& path() const noexcept { return path_; }

  /// Reads the next sentence. Under fail_fast an invalid line throws, with
  /// the line number attached; otherwise the record carries the error.
  bool next(TreebankRecord& record) {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      if (is_blank(text)) continue;
      record = {};
      record.line = line_;
      record.sentence = ++sentence_;
      try {
        record.heads = HeadVector::parse(text);
      } catch (const Error& e) {
        if (policy_ == ErrorPolicy::fail_fast) throw e.at_line(line_);
        record.error = e.at_line(line_);
      }
      return true;
    }
    return false;
  }

  /// Every remaining record; under skip_and_report invalid lines are kept
  /// with their errors.
  std::vector<TreebankRecord> read_all() {
    std::vector<TreebankRecord> out;
    TreebankRecord r;
    while (next(r)) out.push_back(std::move(r));
    return out;
  }

private:
  std::filesystem::path path_;
  ErrorPolicy policy_;
  std::ifstream in_;
  std::size_t line_ = 0;
  std::size_t sentence_ = 0;
};

inline TreebankReader read_head_vectors(const std::filesystem::path& path,
                                        ErrorPolicy policy = ErrorPolicy::skip_and_report) {
  return TreebankReader(path, policy);
}

}  // namespace deptree
