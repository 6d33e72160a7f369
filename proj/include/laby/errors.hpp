#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace laby {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyPattern : Error {
  EmptyPattern() : Error("pattern has no white cell") {}
};

struct BadAddress : Error {
  BadAddress(std::int32_t col, std::int32_t row, std::int32_t width)
      : Error("cell (" + std::to_string(col) + "," + std::to_string(row) +
              ") outside " + std::to_string(width) + "x" + std::to_string(width) + " grid") {}
};

struct TooLarge : Error {
  TooLarge(std::int64_t requested, std::int64_t cap)
      : Error("materialized width " + std::to_string(requested) +
              " exceeds cap " + std::to_string(cap)) {}
};

struct ParseError : Error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& what_)
      : Error("parse error at line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + what_),
        line(line_), column(column_) {}
};

struct MissingExits : Error {
  MissingExits(int vertical, int horizontal)
      : Error("expected exactly one exit pair per direction, found " +
              std::to_string(vertical) + " vertical / " +
              std::to_string(horizontal) + " horizontal") {}
};

struct NotLabyrinth : Error {
  explicit NotLabyrinth(const std::string& why) : Error("not a labyrinth pattern: " + why) {}
};

struct NotTree : Error {
  explicit NotTree(const std::string& why) : Error("pattern graph is not a tree: " + why) {}
};

struct NotWhite : Error {
  NotWhite(std::int32_t col, std::int32_t row)
      : Error("cell (" + std::to_string(col) + "," + std::to_string(row) + ") is not white") {}
};

struct Unreachable : Error {
  Unreachable() : Error("cells lie in different components") {}
};

struct BadParameter : Error {
  using Error::Error;
};

struct PreconditionViolated : Error {
  using Error::Error;
};

}  // namespace laby
