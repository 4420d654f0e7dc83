#pragma once

#include <stdexcept>
#include <string>

namespace fairdiff {

enum class ErrorKind {
  usage,    // bad arguments or shapes
  config,   // invalid configuration or schema
  data,     // malformed or unusable input data
  numeric,  // non-finite values or divergence
};

/// Process exit code for an error kind: 2 usage/config, 3 data, 4 numeric.
int exit_code(ErrorKind kind);
const char* kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) throw Error(kind, what);
}

}  // namespace fairdiff
