// Tokenizer shared by the knowledge-base and knowledge-element readers.

#ifndef KEDL_SRC_SYNTAX_LEXER_HPP
#define KEDL_SRC_SYNTAX_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "kedl/errors.hpp"

namespace kedl::detail {

struct Token {
  enum class Kind { Ident, Int, String, Symbol, End };
  Kind kind;
  std::string text;
  SourceLocation where;

  bool is_symbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }
  bool is_word(std::string_view s) const { return kind == Kind::Ident && text == s; }
};

// Identifiers are [A-Za-z_][A-Za-z0-9_-]*. '#' starts a line comment. The DL
// symbols (negation, conjunction, quantifiers, arrows, inclusion, definition,
// superscript minus) are accepted and mapped to their ASCII spellings.
std::vector<Token> tokenize(std::string_view text);

// Cursor over a token vector with error helpers.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool accept_symbol(std::string_view s);
  bool accept_word(std::string_view s);
  const Token& expect_symbol(std::string_view s);
  const Token& expect_ident(std::string_view what);
  std::size_t position() const { return pos_; }
  void reset(std::size_t pos) { pos_ = pos; }
  [[noreturn]] void fail(const Token& at, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string describe(const Token& t);

}  // namespace kedl::detail

#endif  // KEDL_SRC_SYNTAX_LEXER_HPP
