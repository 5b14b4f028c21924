#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromagraph {

enum class ErrorCode {
  kParse = 1,
  kInvalidArgument = 2,
  kDomain = 3,
  kLimit = 4,
  kNoConvergence = 5,
  kDisconnected = 6,
  kInternal = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Position is a byte offset for graph6 input and a 1-based line number for
// edge lists.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::kParse, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace chromagraph
