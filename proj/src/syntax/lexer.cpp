#include "lexer.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace kedl::detail {

namespace {

struct Alias {
  std::string_view utf8;
  Token::Kind kind;
  std::string_view text;
};

constexpr std::array<Alias, 12> kAliases{{
    {"\xC2\xAC", Token::Kind::Ident, "not"},
    {"\xE2\x8A\x93", Token::Kind::Ident, "and"},
    {"\xE2\x8A\x94", Token::Kind::Ident, "or"},
    {"\xE2\x88\x83", Token::Kind::Ident, "some"},
    {"\xE2\x88\x80", Token::Kind::Ident, "all"},
    {"\xE2\x8A\xA4", Token::Kind::Ident, "top"},
    {"\xE2\x8A\xA5", Token::Kind::Ident, "bot"},
    {"\xE2\x86\x92", Token::Kind::Symbol, "=>"},
    {"\xE2\x86\x94", Token::Kind::Symbol, "<=>"},
    {"\xE2\x8A\x91", Token::Kind::Symbol, "<="},
    {"\xE2\x89\xA1", Token::Kind::Symbol, ":="},
    {"\xE2\x81\xBB", Token::Kind::Symbol, "^-"},
}};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
  };

  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n' || std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const SourceLocation at{line, col};
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Token::Kind::Ident, std::string(text.substr(i, j - i)), at});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Kind::Int, std::string(text.substr(i, j - i)), at});
      advance(j - i);
      continue;
    }
    if (c == '"') {
      std::string value;
      std::size_t j = i + 1;
      bool closed = false;
      while (j < text.size()) {
        if (text[j] == '\\' && j + 1 < text.size()) {
          value += text[j + 1];
          j += 2;
          continue;
        }
        if (text[j] == '"') {
          closed = true;
          break;
        }
        if (text[j] == '\n') break;
        value += text[j++];
      }
      if (!closed) throw ParseError(at, "unterminated string literal");
      out.push_back({Token::Kind::String, std::move(value), at});
      advance(j + 1 - i);
      continue;
    }
    bool matched = false;
    for (const auto& alias : kAliases) {
      if (text.substr(i, alias.utf8.size()) == alias.utf8) {
        out.push_back({alias.kind, std::string(alias.text), at});
        advance(alias.utf8.size());
        matched = true;
        break;
      }
    }
    if (matched) continue;
    static constexpr std::array<std::string_view, 13> kSymbols{
        "<=>", ":=", "<=", "=>", "(", ")", "{", "}", ";", ",", ".", ":", "="};
    for (auto sym : kSymbols) {
      if (text.substr(i, sym.size()) == sym) {
        out.push_back({Token::Kind::Symbol, std::string(sym), at});
        advance(sym.size());
        matched = true;
        break;
      }
    }
    if (matched) continue;
    std::size_t len = 1;
    const auto lead = static_cast<unsigned char>(c);
    if (lead >= 0xF0) len = 4;
    else if (lead >= 0xE0) len = 3;
    else if (lead >= 0xC0) len = 2;
    throw ParseError(at, "unexpected character '" + std::string(text.substr(i, len)) + "'");
  }
  out.push_back({Token::Kind::End, "", {line, col}});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::End:
      return "end of input";
    case Token::Kind::String:
      return "string \"" + t.text + "\"";
    default:
      return "'" + t.text + "'";
  }
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t k = pos_ + ahead;
  return k < tokens_.size() ? tokens_[k] : tokens_.back();
}

const Token& TokenStream::next() {
  const Token& t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool TokenStream::accept_symbol(std::string_view s) {
  if (!peek().is_symbol(s)) return false;
  next();
  return true;
}

bool TokenStream::accept_word(std::string_view s) {
  if (!peek().is_word(s)) return false;
  next();
  return true;
}

const Token& TokenStream::expect_symbol(std::string_view s) {
  if (!peek().is_symbol(s)) fail(peek(), "expected '" + std::string(s) + "', found " + describe(peek()));
  return next();
}

const Token& TokenStream::expect_ident(std::string_view what) {
  if (peek().kind != Token::Kind::Ident)
    fail(peek(), "expected " + std::string(what) + ", found " + describe(peek()));
  return next();
}

void TokenStream::fail(const Token& at, const std::string& message) const {
  throw ParseError(at.where, message);
}

}  // namespace kedl::detail
