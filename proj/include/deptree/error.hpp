#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace deptree {

enum class ErrorCode {
  // graphs
  NoRoot,
  MultipleRoots,
  SelfHead,
  OutOfRange,
  Cycle,
  NotATree,
  DuplicateEdge,
  SelfLoop,
  MalformedHeadVector,
  // linarr / properties
  SizeMismatch,
  NoEdges,
  TooSmall,
  SizeLimitExceeded,
  // baselines
  EnsembleTooLarge,
  UnknownMetric,
  KindMismatch,
  // io / conllu
  FileNotFound,
  WriteError,
  MalformedLine,
  NonContiguousIds,
  HeadOutOfRange,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::MultipleRoots: return "MultipleRoots";
    case ErrorCode::SelfHead: return "SelfHead";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Cycle: return "Cycle";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::MalformedHeadVector: return "MalformedHeadVector";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::EnsembleTooLarge: return "EnsembleTooLarge";
    case ErrorCode::UnknownMetric: return "UnknownMetric";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::WriteError: return "WriteError";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::NonContiguousIds: return "NonContiguousIds";
    case ErrorCode::HeadOutOfRange: return "HeadOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Exception type thrown by every validating operation of the library.
/// Carries a machine-readable code and, for file input, the 1-based line.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(compose(code, message, line)), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

  /// Same error, attributed to a line of an input file.
  Error at_line(std::size_t line) const {
    return Error(code_, detail_message(), line);
  }

private:
  static std::string compose(ErrorCode code, const std::string& message,
                             std::optional<std::size_t> line) {
    std::string s(to_string(code));
    if (line) s += " at line " + std::to_string(*line);
    if (!message.empty()) s += ": " + message;
    return s;
  }

  std::string detail_message() const {
    const std::string full = what();
    const auto pos = full.find(": ");
    return pos == std::string::npos ? std::string{} : full.substr(pos + 2);
  }

  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace deptree
