#pragma once

#include <stdexcept>
#include <string>

namespace entailkit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroVectorError : Error {
  ZeroVectorError() : Error("all-zero vector where a non-zero vector is required") {}
};

struct DimMismatchError : Error {
  DimMismatchError(std::size_t a, std::size_t b)
      : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct EmptyInputError : Error {
  EmptyInputError() : Error("empty input list") {}
};

struct EmptyCorpusError : Error {
  EmptyCorpusError() : Error("corpus is empty after tokenization") {}
};

struct InsufficientContextsError : Error {
  InsufficientContextsError(std::size_t have, std::size_t want)
      : Error("only " + std::to_string(have) + " context words observed, need " +
              std::to_string(want)) {}
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_number(line) {}
  std::size_t line_number;
};

struct IoError : Error {
  explicit IoError(const std::string& path) : Error("cannot open " + path) {}
};

struct UnknownVerbError : Error {
  explicit UnknownVerbError(const std::string& verb) : Error("unknown verb: " + verb) {}
};

struct EmptyArgumentsError : Error {
  explicit EmptyArgumentsError(const std::string& verb)
      : Error("verb has no usable argument occurrences: " + verb) {}
};

struct SingularSystemError : Error {
  SingularSystemError() : Error("X^T X is singular; retry with ridge > 0") {}
};

struct ShapeError : Error {
  explicit ShapeError(const std::string& what) : Error(what) {}
};

struct DegenerateLabelsError : Error {
  DegenerateLabelsError() : Error("need at least one positive and one negative label") {}
};

struct PairSkippedError : Error {
  explicit PairSkippedError(const std::string& reason) : Error(reason) {}
};

}  // namespace entailkit
