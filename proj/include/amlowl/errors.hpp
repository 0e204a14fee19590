#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace amlowl {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t offset, std::size_t line, std::size_t column,
              std::string found, std::vector<std::string> expected);

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& found() const { return found_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
  std::string found_;
  std::vector<std::string> expected_;
};

// A constructor from the uncovered part of the OWL table, or a negation
// that would require one (e.g. negated nominals).
class UncoveredConstructor : public Error {
public:
  using Error::Error;
};

class ImproperClass : public Error {
public:
  using Error::Error;
};

class Unsatisfiable : public Error {
public:
  using Error::Error;
};

class DisjunctionPresent : public Error {
public:
  using Error::Error;
};

class InvalidModel : public Error {
public:
  using Error::Error;
};

class XmlSyntaxError : public Error {
public:
  using Error::Error;
};

class SchemaError : public Error {
public:
  using Error::Error;
};

class ImproperModel : public Error {
public:
  ImproperModel(std::string what, std::vector<std::size_t> primaryCounts);
  // Number of primary elements found in each model of the document.
  const std::vector<std::size_t>& primaryCounts() const { return counts_; }

private:
  std::vector<std::size_t> counts_;
};

class AmbiguousCardinality : public Error {
public:
  using Error::Error;
};

} // namespace amlowl
