// psgkit/lexer.hpp - tokenizer for the C-like source subset
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace psgkit
{

enum class TokenKind { keyword, identifier, int_literal, float_literal, op, punctuation };

std::string_view to_string(TokenKind kind);

struct Token
{
  TokenKind kind = TokenKind::punctuation;
  std::string text;
  int line = 0;  // 1-based; 0 when the token did not come from source text
  int column = 0;

  friend bool operator==(const Token &, const Token &) = default;
};

/// Reserved words: if else while return int double void.
bool is_keyword(std::string_view text);
/// The keyword subset that names types.
bool is_type_keyword(std::string_view text);

/// Recovers the token class from bare text (used when importing trees that
/// carry no token kinds). Returns nullopt if the text is not a single token.
std::optional<TokenKind> classify_token_text(std::string_view text);

/// Splits `source` into tokens. Whitespace and comments are dropped.
/// Throws LexError on an unrecognized character or an unterminated comment.
std::vector<Token> tokenize(std::string_view source);

}  // namespace psgkit
