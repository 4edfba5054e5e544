#pragma once

#include <stdexcept>
#include <string>

namespace moduli {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  DegeneratePattern,
  UnsupportedShape,
  SearchExhausted,
};

/// Library-wide exception. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace moduli
