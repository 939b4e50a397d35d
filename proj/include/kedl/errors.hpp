#ifndef KEDL_ERRORS_HPP
#define KEDL_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace kedl {

struct SourceLocation {
  int line = 0;
  int column = 0;
};

std::string to_string(const SourceLocation& where);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lexical or grammatical error in a source text.
class ParseError : public Error {
 public:
  ParseError(SourceLocation where, const std::string& message);
  SourceLocation where() const { return where_; }
  const std::string& message() const { return message_; }

 private:
  SourceLocation where_;
  std::string message_;
};

// Violation of the sort discipline: mixed-sort connectives, a role of the
// wrong kind under a quantifier, an undeclared name, or an individual used
// with a concept of the other sort.
class SortError : public Error {
 public:
  SortError(std::optional<SourceLocation> where, std::string expected, std::string found,
            const std::string& message);
  const std::optional<SourceLocation>& where() const { return where_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::optional<SourceLocation> where_;
  std::string expected_;
  std::string found_;
};

// Structural problems of a knowledge base: duplicate names or definitions,
// cyclic definitions.
class KbError : public Error {
 public:
  using Error::Error;
};

}  // namespace kedl

#endif  // KEDL_ERRORS_HPP
