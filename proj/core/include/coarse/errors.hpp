#pragma once

#include <stdexcept>
#include <string>

namespace coarse {

// Raised when an operation's documented precondition does not hold
// (e.g. a map that is not coarsely surjective handed to the Rips builder).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed JSON input. `pointer()` is the JSON pointer of the offending node.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string pointer, const std::string& what)
      : std::runtime_error(pointer + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace coarse
