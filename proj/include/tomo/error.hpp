#pragma once

#include <stdexcept>
#include <string>

namespace tomo {

/// Error categories; the CLI maps these onto exit codes.
enum class ErrorKind {
  parse,          ///< malformed state spec or run configuration
  domain,         ///< parameter outside its admissible range
  dimension,      ///< mismatched array/grid sizes
  near_singular,  ///< transform parameters inside the singular guard band
  coverage,       ///< grid does not cover the essential support
  normalization,  ///< density defect too large to trust downstream results
  numeric,        ///< internal numeric failure
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace tomo
