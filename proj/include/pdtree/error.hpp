#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdtree {

enum class ErrorCode {
  CycleDetected,
  MultipleRoots,
  DanglingParentRank,
  RootNotFirst,
  EmptyTree,
  SequenceEntryOutOfRange,
  InvalidPrefix,
  WrongTotal,
  MalformedHeader,
  TokenCount,
  SingleVertex,
  NotCanonical,
  TooLarge,
  InvalidDistribution,
  RejectionTimeout,
  DomainError,
  NoConvergence,
  InsufficientReps,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::MultipleRoots: return "MultipleRoots";
    case ErrorCode::DanglingParentRank: return "DanglingParentRank";
    case ErrorCode::RootNotFirst: return "RootNotFirst";
    case ErrorCode::EmptyTree: return "EmptyTree";
    case ErrorCode::SequenceEntryOutOfRange: return "SequenceEntryOutOfRange";
    case ErrorCode::InvalidPrefix: return "InvalidPrefix";
    case ErrorCode::WrongTotal: return "WrongTotal";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TokenCount: return "TokenCount";
    case ErrorCode::SingleVertex: return "SingleVertex";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::RejectionTimeout: return "RejectionTimeout";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InsufficientReps: return "InsufficientReps";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pdtree
