#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nliart {

// Raised by every text-format loader. line() is 1-based; 0 means the error
// is not tied to a particular line (e.g. a count mismatch at end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " +
                                           message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace nliart
