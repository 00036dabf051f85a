#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace genome {

enum class ErrorCode {
  InvalidGroup,
  GroupTooLarge,
  EnumerationTooLarge,
  UnsupportedPrime,
  NotPGroup,
  OddPrimesOnly,
  NotSubgroup,
  NotNormal,
  NotIsomorphism,
  InvalidBiset,
  GroupMismatch,
  NotLeftFree,
  NotGenetic,
  NotGeneticBasis,
  DescriptorMismatch,
  ParseError,
  InvalidArgument,
  InvariantViolation,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries a machine-readable code. Parse
// errors additionally carry the byte offset of the offending token.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Error(ErrorCode code, const std::string& message, std::size_t offset)
      : std::runtime_error(message), code_(code), offset_(offset), has_offset_(true) {}

  ErrorCode code() const noexcept { return code_; }
  bool has_offset() const noexcept { return has_offset_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::size_t offset_ = 0;
  bool has_offset_ = false;
};

// Raised when a theorem-backed self-check fails. Seeing one means a bug.
[[noreturn]] void invariant_failure(const std::string& what);

inline void check_invariant(bool condition, const char* what) {
  if (!condition) invariant_failure(what);
}

}  // namespace genome
