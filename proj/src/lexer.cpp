#include "psgkit/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "psgkit/error.hpp"

namespace psgkit
{

namespace
{

constexpr std::array<std::string_view, 7> kKeywords = {"if",  "else",   "while", "return",
                                                       "int", "double", "void"};
constexpr std::array<std::string_view, 6> kTwoCharOps = {"<=", ">=", "==", "!=", "&&", "||"};
constexpr std::string_view kOneCharOps = "+-*/%<>=!";
constexpr std::string_view kPunctuation = "(){},;";

bool is_ident_start(char c)
{
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_ident_char(char c)
{
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_digit(char c)
{
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

class Lexer
{
public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> run()
  {
    std::vector<Token> out;
    while (skip_space_and_comments()) {
      out.push_back(next());
    }
    return out;
  }

private:
  char peek(std::size_t ahead = 0) const
  {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance(std::size_t n = 1)
  {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  // Returns false at end of input.
  bool skip_space_and_comments()
  {
    while (pos_ < src_.size()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && peek() != '\n') {
          advance();
        }
      } else if (c == '/' && peek(1) == '*') {
        const int line = line_;
        const int column = column_;
        advance(2);
        while (pos_ < src_.size() && !(peek() == '*' && peek(1) == '/')) {
          advance();
        }
        if (pos_ >= src_.size()) {
          throw LexError(line, column, "unterminated block comment");
        }
        advance(2);
      } else {
        return true;
      }
    }
    return false;
  }

  Token make(TokenKind kind, std::size_t length)
  {
    Token t{kind, std::string(src_.substr(pos_, length)), line_, column_};
    advance(length);
    return t;
  }

  Token next()
  {
    const char c = peek();
    if (is_ident_start(c)) {
      std::size_t n = 1;
      while (is_ident_char(peek(n))) {
        ++n;
      }
      const auto text = src_.substr(pos_, n);
      return make(is_keyword(text) ? TokenKind::keyword : TokenKind::identifier, n);
    }
    if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
      return number();
    }
    for (const auto op : kTwoCharOps) {
      if (src_.substr(pos_, 2) == op) {
        return make(TokenKind::op, 2);
      }
    }
    if (kOneCharOps.find(c) != std::string_view::npos) {
      return make(TokenKind::op, 1);
    }
    if (kPunctuation.find(c) != std::string_view::npos) {
      return make(TokenKind::punctuation, 1);
    }
    std::string shown;
    const auto uc = static_cast<unsigned char>(c);
    if (uc < 0x20 || uc >= 0x7f) {
      static constexpr char kHex[] = "0123456789abcdef";
      shown = std::string("byte 0x") + kHex[uc >> 4] + kHex[uc & 0xf];
    } else {
      shown = std::string("'") + c + "'";
    }
    throw LexError(line_, column_, "unrecognized character " + shown);
  }

  Token number()
  {
    std::size_t n = 0;
    bool is_float = false;
    while (is_digit(peek(n))) {
      ++n;
    }
    if (peek(n) == '.') {
      is_float = true;
      ++n;
      while (is_digit(peek(n))) {
        ++n;
      }
    }
    if (peek(n) == 'e' || peek(n) == 'E') {
      std::size_t m = n + 1;
      if (peek(m) == '+' || peek(m) == '-') {
        ++m;
      }
      if (is_digit(peek(m))) {
        is_float = true;
        n = m;
        while (is_digit(peek(n))) {
          ++n;
        }
      }
    }
    if (is_ident_char(peek(n))) {
      // "12abc" is neither a number nor an identifier.
      int column = column_ + static_cast<int>(n);
      throw LexError(line_, column, std::string("unexpected '") + peek(n) + "' in numeric literal");
    }
    return make(is_float ? TokenKind::float_literal : TokenKind::int_literal, n);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::string_view to_string(TokenKind kind)
{
  switch (kind) {
    case TokenKind::keyword:
      return "keyword";
    case TokenKind::identifier:
      return "identifier";
    case TokenKind::int_literal:
      return "int-literal";
    case TokenKind::float_literal:
      return "float-literal";
    case TokenKind::op:
      return "operator";
    case TokenKind::punctuation:
      return "punctuation";
  }
  return "punctuation";
}

bool is_keyword(std::string_view text)
{
  return std::find(kKeywords.begin(), kKeywords.end(), text) != kKeywords.end();
}

bool is_type_keyword(std::string_view text)
{
  return text == "int" || text == "double" || text == "void";
}

std::optional<TokenKind> classify_token_text(std::string_view text)
{
  if (text.empty()) {
    return std::nullopt;
  }
  try {
    const auto tokens = tokenize(text);
    if (tokens.size() == 1 && tokens.front().text == text) {
      return tokens.front().kind;
    }
  } catch (const LexError &) {
  }
  return std::nullopt;
}

std::vector<Token> tokenize(std::string_view source)
{
  return Lexer(source).run();
}

}  // namespace psgkit
