#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modlab {

enum class ErrorCode {
  NonAssociative,
  NoIdentity,
  IllFormedConstants,
  IllFormedAction,
  SizeLimitExceeded,
  RingMismatch,
  NotSubmodule,
  ParentMismatch,
  NotHomomorphism,
  IdempotentSearchExceeded,
  InvalidInput,
};

const char* to_string(ErrorCode code);

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Size bounds applied by constructors and enumerators. Defaults follow the
// desk-scale regime the workbench is meant for.
struct Limits {
  std::size_t max_ring_size = 4096;
  std::size_t max_module_size = 4096;
  std::size_t max_end_size = 1u << 16;
  // Upper bound on candidate tuples tried by the hom enumerator.
  std::size_t max_hom_candidates = 1u << 24;
};

const Limits& default_limits();

}  // namespace modlab
