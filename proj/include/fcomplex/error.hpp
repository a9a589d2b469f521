#pragma once

#include <stdexcept>
#include <string>

namespace fcomplex {

enum class ErrorKind {
  kCapExceeded,      // more than 64 vertices
  kOutOfRange,       // vertex id, size or scale outside its domain
  kSelfLoop,
  kMalformed,        // text input that does not follow a documented format
  kIo,
  kInvalidArgument,  // parameter combination rejected by a precondition
  kGuardExceeded,    // exhaustive search refused for a too-large input
  kDisconnected,     // metric undefined on a disconnected graph
  kDegenerate,       // zero variance or collinear predictors
  kRejectionLimit,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fcomplex
