#include "fcomplex/error.hpp"

namespace fcomplex {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kCapExceeded: return "cap-exceeded";
    case ErrorKind::kOutOfRange: return "out-of-range";
    case ErrorKind::kSelfLoop: return "self-loop";
    case ErrorKind::kMalformed: return "malformed";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kGuardExceeded: return "guard-exceeded";
    case ErrorKind::kDisconnected: return "disconnected";
    case ErrorKind::kDegenerate: return "degenerate";
    case ErrorKind::kRejectionLimit: return "rejection-limit";
  }
  return "unknown";
}

}  // namespace fcomplex
