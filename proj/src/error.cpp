#include "tomo/error.hpp"

namespace tomo {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
      return "parse";
    case ErrorKind::domain:
      return "domain";
    case ErrorKind::dimension:
      return "dimension";
    case ErrorKind::near_singular:
      return "near_singular";
    case ErrorKind::coverage:
      return "coverage";
    case ErrorKind::normalization:
      return "normalization";
    case ErrorKind::numeric:
      return "numeric";
  }
  return "unknown";
}

}  // namespace tomo
