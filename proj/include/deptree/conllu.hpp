#pragma once

#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "deptree/detail/parallel.hpp"
#include "deptree/error.hpp"
#include "deptree/graphs.hpp"
#include "deptree/io/treebank.hpp"

namespace deptree {

struct ConlluToken {
  std::size_t id = 0;
  std::string form;
  std::string upos;
  std::size_t head = 0;  // 0 = root
  std::string deprel;
};

struct ConlluSentence {
  std::size_t first_line = 0;  // line number of the first token line
  std::vector<ConlluToken> tokens;
};

namespace detail {

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    cols.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return cols;
}

inline std::optional<std::size_t> parse_index(std::string_view s) {
  std::size_t v = 0;
  if (s.empty()) return std::nullopt;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

/// Streams sentences from a CoNLL-U file. Sentences are separated by blank
/// lines; comment lines, multiword-token ranges ("3-4") and empty nodes
/// ("3.1") are skipped. Token lines need exactly 10 tab-separated columns.
class ConlluReader {
public:
  explicit ConlluReader(const std::filesystem::path& path) : path_(path), in_(path, std::ios::binary) {
    if (!in_ || std::filesystem::is_directory(path)) {
      throw Error(ErrorCode::FileNotFound, "cannot open '" + path.string() + "'");
    }
  }

  /// Reads the next sentence. A malformed sentence throws; the reader stays
  /// usable and continues after the offending sentence.
  bool next(ConlluSentence& sentence) {
    while (true) {
      sentence = {};
      std::vector<std::pair<std::size_t, std::string>> block;
      std::string line;
      while (std::getline(in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
          if (block.empty()) continue;
          break;
        }
        block.emplace_back(line_, line);
      }
      if (block.empty()) return false;
      parse_block(block, sentence);
      if (!sentence.tokens.empty()) return true;  // comment-only blocks are not sentences
    }
  }

  std::vector<ConlluSentence> read_all() {
    std::vector<ConlluSentence> out;
    ConlluSentence s;
    while (next(s)) out.push_back(std::move(s));
    return out;
  }

private:
  static void parse_block(const std::vector<std::pair<std::size_t, std::string>>& block, ConlluSentence& s) {
    for (const auto& [number, text] : block) {
      if (text[0] == '#') continue;
      const auto cols = detail::split_tabs(text);
      if (cols.size() != 10) {
        throw Error(ErrorCode::MalformedLine, "expected 10 tab-separated columns, found " + std::to_string(cols.size()),
                    number);
      }
      const std::string_view id = cols[0];
      if (id.find('-') != std::string_view::npos || id.find('.') != std::string_view::npos) continue;
      const auto parsed_id = detail::parse_index(id);
      const auto parsed_head = detail::parse_index(cols[6]);
      if (!parsed_id || *parsed_id == 0) throw Error(ErrorCode::MalformedLine, "invalid token id", number);
      if (!parsed_head) throw Error(ErrorCode::MalformedLine, "invalid head", number);
      if (*parsed_id != s.tokens.size() + 1) {
        throw Error(ErrorCode::NonContiguousIds,
                    "expected id " + std::to_string(s.tokens.size() + 1) + ", found " + std::string(id), number);
      }
      if (s.tokens.empty()) s.first_line = number;
      s.tokens.push_back({*parsed_id, std::string(cols[1]), std::string(cols[3]), *parsed_head, std::string(cols[7])});
    }
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (s.tokens[i].head > s.tokens.size()) {
        throw Error(ErrorCode::HeadOutOfRange,
                    "head " + std::to_string(s.tokens[i].head) + " of token " + std::to_string(i + 1) +
                        " exceeds sentence length " + std::to_string(s.tokens.size()),
                    block.front().first);
      }
    }
  }

  std::filesystem::path path_;
  std::ifstream in_;
  std::size_t line_ = 0;
};

inline std::vector<ConlluSentence> parse_conllu(const std::filesystem::path& path) {
  return ConlluReader(path).read_all();
}

/// Universal POS tags treated as function words by default.
inline std::set<std::string> default_function_words() {
  return {"ADP", "AUX", "CCONJ", "DET", "PART", "PRON", "SCONJ"};
}

struct PreprocessOptions {
  bool remove_punct = false;
  bool remove_function_words = false;
  std::set<std::string> function_words = default_function_words();
  std::optional<std::size_t> min_len;
  std::optional<std::size_t> max_len;

  void validate() const {
    if (min_len && max_len && *min_len > *max_len) {
      throw Error(ErrorCode::InvalidArgument, "minimum length exceeds maximum length");
    }
  }
};

/// Head vector of the sentence as annotated, without any removal.
inline HeadVector head_projection(const ConlluSentence& s) {
  std::vector<Vertex> heads;
  heads.reserve(s.tokens.size());
  for (const auto& t : s.tokens) heads.push_back(static_cast<Vertex>(t.head));
  return HeadVector(std::move(heads));
}

/// Removes the requested tokens and returns the head vector of what is
/// left, or nothing when the sentence is filtered out by length (or
/// nothing remains). Dependents of a removed token are attached to its
/// nearest retained ancestor; if the root is removed, the leftmost retained
/// token left without a head becomes the root and the others attach to it.
inline std::optional<HeadVector> preprocess(const ConlluSentence& s, const PreprocessOptions& opts) {
  opts.validate();
  const HeadVector original = head_projection(s);
  const auto n = s.tokens.size();
  std::vector<bool> keep(n + 1, true);
  std::vector<Vertex> new_id(n + 1, 0);
  Vertex kept = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& upos = s.tokens[i - 1].upos;
    if ((opts.remove_punct && upos == "PUNCT") ||
        (opts.remove_function_words && opts.function_words.count(upos) > 0)) {
      keep[i] = false;
    } else {
      new_id[i] = ++kept;
    }
  }
  if (kept == 0) return std::nullopt;
  if ((opts.min_len && kept < *opts.min_len) || (opts.max_len && kept > *opts.max_len)) return std::nullopt;

  std::vector<Vertex> heads;
  heads.reserve(kept);
  Vertex root = 0;
  for (Vertex i = 1; i <= n; ++i) {
    if (!keep[i]) continue;
    Vertex h = original.head(i);
    while (h != 0 && !keep[h]) h = original.head(h);
    if (h == 0) {
      if (root == 0) {
        root = new_id[i];
        heads.push_back(0);
      } else {
        heads.push_back(root);
      }
    } else {
      heads.push_back(new_id[h]);
    }
  }
  return HeadVector(std::move(heads));
}

struct ConvertReport {
  std::filesystem::path input;
  std::filesystem::path output;
  std::size_t sentences = 0;  // sentences read, including errored ones
  std::size_t written = 0;
  std::size_t filtered = 0;
  std::vector<SkippedLine> errors;
  double elapsed_seconds = 0;
};

/// Converts a CoNLL-U file into a head-vector file, one line per retained
/// sentence in input order.
inline ConvertReport convert(const std::filesystem::path& input, const std::filesystem::path& output,
                             const PreprocessOptions& opts = {}, ErrorPolicy policy = ErrorPolicy::skip_and_report,
                             unsigned threads = 0) {
  opts.validate();
  const auto start = std::chrono::steady_clock::now();
  ConlluReader reader(input);
  ConvertReport report;
  report.input = input;
  report.output = output;

  std::ofstream out(output, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::WriteError, "cannot write '" + output.string() + "'");

  constexpr std::size_t batch_size = 4096;
  struct Item {
    ConlluSentence sentence;
    std::optional<Error> error;
    std::optional<HeadVector> heads;
  };
  std::vector<Item> batch;
  bool more = true;
  try {
    while (more) {
      batch.clear();
      while (batch.size() < batch_size) {
        Item item;
        try {
          more = reader.next(item.sentence);
        } catch (const Error& e) {
          if (policy == ErrorPolicy::fail_fast) throw;
          item.error = e;
          more = true;
        }
        if (!more) break;
        batch.push_back(std::move(item));
      }
      detail::parallel_for(batch.size(), threads, [&](std::size_t i) {
        Item& item = batch[i];
        if (item.error) return;
        try {
          item.heads = preprocess(item.sentence, opts);
        } catch (const Error& e) {
          item.error = e.line() ? e : e.at_line(item.sentence.first_line);
        }
      });
      for (Item& item : batch) {
        ++report.sentences;
        if (item.error) {
          if (policy == ErrorPolicy::fail_fast) throw *item.error;
          report.errors.push_back({item.error->line().value_or(0), item.error->code(), item.error->what()});
        } else if (!item.heads) {
          ++report.filtered;
        } else {
          out << item.heads->to_string() << '\n';
          ++report.written;
        }
      }
    }
  } catch (...) {
    out.close();
    std::filesystem::remove(output);
    throw;
  }
  out.flush();
  if (!out) throw Error(ErrorCode::WriteError, "failed writing '" + output.string() + "'");
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace deptree
