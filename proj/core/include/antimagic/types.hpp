#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace antimagic {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Edge labels lie in [1, m], but vertex sums grow up to m(m+1)/2, so all
// label arithmetic is done in 64 bits.
using Label = std::int64_t;

// Malformed or inconsistent input text. line() == 0 when the error has no
// single line to blame (e.g. a disconnected edge set).
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Input is a valid tree but outside the accepted domain.
class not_a_caterpillar : public std::runtime_error {
 public:
  explicit not_a_caterpillar(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural guarantee of the construction failed at runtime.
class invariant_error : public std::logic_error {
 public:
  explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

// Exhaustive search ran past its node-expansion budget.
class search_budget_exceeded : public std::runtime_error {
 public:
  explicit search_budget_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace antimagic
