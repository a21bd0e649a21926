#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "deptree/error.hpp"
#include "deptree/graphs/types.hpp"

namespace deptree {

/// Sequence h_1..h_n where h_i is the position of the head of word i and 0
/// marks the root. Construction validates that the sequence encodes a tree.
class HeadVector {
public:
  explicit HeadVector(std::vector<Vertex> heads) : heads_(std::move(heads)) { validate(); }

  /// Parses whitespace-separated (space or tab) base-10 integers. A trailing
  /// carriage return is accepted so CRLF files read the same as LF files.
  static HeadVector parse(std::string_view text) {
    std::vector<Vertex> heads;
    std::size_t i = 0;
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    while (i < text.size()) {
      const char c = text[i];
      if (c == ' ' || c == '\t') {
        ++i;
        continue;
      }
      if (c < '0' || c > '9') {
        throw Error(ErrorCode::MalformedHeadVector,
                    "unexpected character '" + std::string(1, c) + "'");
      }
      std::uint64_t value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > std::numeric_limits<Vertex>::max()) {
          throw Error(ErrorCode::OutOfRange, "head value too large");
        }
        ++i;
      }
      if (i < text.size() && text[i] != ' ' && text[i] != '\t') {
        throw Error(ErrorCode::MalformedHeadVector,
                    "unexpected character '" + std::string(1, text[i]) + "'");
      }
      heads.push_back(static_cast<Vertex>(value));
    }
    return HeadVector(std::move(heads));
  }

  std::size_t size() const noexcept { return heads_.size(); }
  /// Head of word `i` (1-based); 0 for the root.
  Vertex head(Vertex i) const { return heads_.at(i - 1); }
  Vertex root() const noexcept { return root_; }
  const std::vector<Vertex>& values() const noexcept { return heads_; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < heads_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(heads_[i]);
    }
    return s;
  }

  friend bool operator==(const HeadVector& a, const HeadVector& b) { return a.heads_ == b.heads_; }

private:
  void validate() {
    const auto n = heads_.size();
    if (n == 0) throw Error(ErrorCode::MalformedHeadVector, "empty head vector");
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex h = heads_[i];
      if (h > n) {
        throw Error(ErrorCode::OutOfRange, "head " + std::to_string(h) + " of word " +
                                               std::to_string(i + 1) + " exceeds n = " +
                                               std::to_string(n));
      }
      if (h == i + 1) throw Error(ErrorCode::SelfHead, "word " + std::to_string(i + 1) + " heads itself");
      if (h == 0) {
        ++zeros;
        root_ = static_cast<Vertex>(i + 1);
      }
    }
    if (zeros == 0) throw Error(ErrorCode::NoRoot, "no entry equals 0");
    if (zeros > 1) throw Error(ErrorCode::MultipleRoots, std::to_string(zeros) + " entries equal 0");

    // With exactly one root and n-1 head links, the links form a tree iff
    // following heads from every word reaches the root.
    std::vector<std::uint8_t> state(n + 1, 0);  // 0 unseen, 1 on current path, 2 reaches root
    state[root_] = 2;
    std::vector<Vertex> path;
    for (Vertex start = 1; start <= n; ++start) {
      Vertex v = start;
      path.clear();
      while (state[v] == 0) {
        state[v] = 1;
        path.push_back(v);
        v = heads_[v - 1];
      }
      if (state[v] == 1) {
        throw Error(ErrorCode::Cycle, "head links of word " + std::to_string(v) + " form a cycle");
      }
      for (Vertex u : path) state[u] = 2;
    }
  }

  std::vector<Vertex> heads_;
  Vertex root_ = 0;
};

}  // namespace deptree
