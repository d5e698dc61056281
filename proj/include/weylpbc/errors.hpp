#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wpbc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when vector/matrix/word lengths disagree with the ambient rank.
struct BadLength : Error {
  using Error::Error;
};

struct MissingZero : Error {
  using Error::Error;
};

struct NotGenerating : Error {
  using Error::Error;
};

// A vector whose mod-2 class is not in the datum. `index` is the offending
// letter position when raised from word evaluation, npos otherwise.
struct NotARoot : Error {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  explicit NotARoot(const std::string& msg, std::size_t index = npos)
      : Error(msg), index(index) {}
  std::size_t index;
};

struct IsIndependent : Error {
  using Error::Error;
};

struct InvalidWitness : Error {
  using Error::Error;
};

struct RankTooLarge : Error {
  using Error::Error;
};

// Input-text diagnostics; line and col are 1-based (line 0 = command-line argument).
struct ParseError : Error {
  ParseError(std::size_t line, std::size_t col, const std::string& msg)
      : Error("parse error at line " + std::to_string(line) + ", col " +
              std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  std::size_t line;
  std::size_t col;
};

}  // namespace wpbc
