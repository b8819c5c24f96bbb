#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homnalg {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed the configured operation budget.
class ResourceLimitError : public Error {
public:
  ResourceLimitError(const std::string& what, std::uint64_t needed, std::uint64_t cap)
      : Error(what + " (needs ~" + std::to_string(needed) + " basic evaluations, cap " +
              std::to_string(cap) + "; raise HOMNALG_MAX_OPS to override)") {}
};

/// Lexical, syntactic or semantic error in a .hna document.
class ParseError : public Error {
public:
  ParseError(const std::string& file, int line, int col, const std::string& msg)
      : Error(file + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

}  // namespace homnalg
