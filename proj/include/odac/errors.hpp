#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace odac {

/// Error with a stable machine-readable code (used verbatim by the CLI,
/// e.g. "even-characteristic", "non-unit", "unsupported-size").
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& msg) {
  throw Error(std::move(code), msg);
}

}  // namespace odac
