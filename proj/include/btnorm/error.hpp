#pragma once

#include <stdexcept>
#include <string>

namespace btnorm {

// Numeric values are part of the C API contract (see btnorm.h).
enum class Errc {
  malformed = 1,
  dimension_mismatch = 2,
  singular = 3,
  config_mismatch = 4,
  precondition = 5,
  internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace btnorm
