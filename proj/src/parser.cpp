#include "psgkit/parser.hpp"

#include <utility>

#include "psgkit/error.hpp"

namespace psgkit
{

namespace
{

int binary_precedence(std::string_view op)
{
  if (op == "||") {
    return 1;
  }
  if (op == "&&") {
    return 2;
  }
  if (op == "==" || op == "!=") {
    return 3;
  }
  if (op == "<" || op == ">" || op == "<=" || op == ">=") {
    return 4;
  }
  if (op == "+" || op == "-") {
    return 5;
  }
  if (op == "*" || op == "/" || op == "%") {
    return 6;
  }
  return 0;
}

class Parser
{
public:
  explicit Parser(const std::vector<Token> & tokens) : tokens_(tokens) {}

  ParseTree run() &&
  {
    const ParseIndex unit = b_.add(Category::translation_unit, 1, 1);
    while (!at_end()) {
      if (is_type(peek()) && peek(1) && peek(1)->kind == TokenKind::identifier && peek(2) &&
          peek(2)->text == "(") {
        b_.append_child(unit, function_definition());
      } else {
        b_.append_child(unit, statement());
      }
    }
    return std::move(b_).finish(unit);
  }

private:
  const Token * peek(std::size_t ahead = 0) const
  {
    return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
  }

  bool at_end() const { return pos_ >= tokens_.size(); }

  static bool is_type(const Token * t)
  {
    return t != nullptr && t->kind == TokenKind::keyword && is_type_keyword(t->text);
  }

  bool check(std::string_view text) const
  {
    const Token * t = peek();
    return t != nullptr && t->text == text && t->kind != TokenKind::identifier &&
           t->kind != TokenKind::int_literal && t->kind != TokenKind::float_literal;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const
  {
    if (const Token * t = peek()) {
      throw ParseError(t->line, t->column, std::move(expected), "'" + t->text + "'");
    }
    int line = 1;
    int column = 1;
    if (!tokens_.empty()) {
      const Token & last = tokens_.back();
      line = last.line;
      column = last.column + static_cast<int>(last.text.size());
    }
    throw ParseError(line, column, std::move(expected), "end of input");
  }

  Token take()
  {
    return tokens_[pos_++];
  }

  Token expect(std::string_view text)
  {
    if (!check(text)) {
      fail({"'" + std::string(text) + "'"});
    }
    return take();
  }

  Token expect_identifier()
  {
    if (peek() == nullptr || peek()->kind != TokenKind::identifier) {
      fail({"identifier"});
    }
    return take();
  }

  Token expect_type()
  {
    if (!is_type(peek())) {
      fail({"type"});
    }
    return take();
  }

  ParseIndex open(Category category)
  {
    const Token * t = peek();
    return t != nullptr ? b_.add(category, t->line, t->column) : b_.add(category);
  }

  ParseIndex function_definition()
  {
    const ParseIndex fn = open(Category::function_definition);
    b_.append_token(fn, expect_type());
    b_.append_token(fn, expect_identifier());
    b_.append_token(fn, expect("("));
    const ParseIndex params = open(Category::parameter_list);
    if (!check(")")) {
      b_.append_token(params, expect_type());
      b_.append_token(params, expect_identifier());
      while (check(",")) {
        b_.append_token(params, take());
        b_.append_token(params, expect_type());
        b_.append_token(params, expect_identifier());
      }
    }
    b_.append_child(fn, params);
    b_.append_token(fn, expect(")"));
    if (!check("{")) {
      fail({"'{'"});
    }
    b_.append_child(fn, block());
    return fn;
  }

  ParseIndex block()
  {
    const ParseIndex blk = open(Category::block);
    b_.append_token(blk, expect("{"));
    while (!check("}")) {
      if (at_end()) {
        fail({"statement", "'}'"});
      }
      b_.append_child(blk, statement());
    }
    b_.append_token(blk, take());
    return blk;
  }

  ParseIndex statement()
  {
    const Token * t = peek();
    if (t == nullptr) {
      fail({"statement"});
    }
    if (check("{")) {
      return block();
    }
    if (is_type(t)) {
      return declaration();
    }
    if (check("if")) {
      return if_statement();
    }
    if (check("while")) {
      return while_statement();
    }
    if (check("return")) {
      return return_statement();
    }
    if (t->kind == TokenKind::identifier && peek(1) != nullptr && peek(1)->text == "=" &&
        peek(1)->kind == TokenKind::op) {
      const ParseIndex stmt = open(Category::assignment_statement);
      b_.append_token(stmt, take());
      b_.append_token(stmt, take());
      b_.append_child(stmt, expression());
      b_.append_token(stmt, expect(";"));
      return stmt;
    }
    if (t->kind == TokenKind::keyword || t->kind == TokenKind::punctuation) {
      fail({"statement"});
    }
    const ParseIndex stmt = open(Category::expression_statement);
    b_.append_child(stmt, expression());
    b_.append_token(stmt, expect(";"));
    return stmt;
  }

  ParseIndex declaration()
  {
    const ParseIndex decl = open(Category::declaration_statement);
    b_.append_token(decl, expect_type());
    b_.append_token(decl, expect_identifier());
    if (check("=")) {
      b_.append_token(decl, take());
      b_.append_child(decl, expression());
    }
    if (!check(";")) {
      fail({"'='", "';'"});
    }
    b_.append_token(decl, take());
    return decl;
  }

  ParseIndex if_statement()
  {
    const ParseIndex stmt = open(Category::if_statement);
    b_.append_token(stmt, take());
    b_.append_token(stmt, expect("("));
    b_.append_child(stmt, expression());
    b_.append_token(stmt, expect(")"));
    b_.append_child(stmt, statement());
    if (check("else")) {
      b_.append_token(stmt, take());
      b_.append_child(stmt, statement());
    }
    return stmt;
  }

  ParseIndex while_statement()
  {
    const ParseIndex stmt = open(Category::while_statement);
    b_.append_token(stmt, take());
    b_.append_token(stmt, expect("("));
    b_.append_child(stmt, expression());
    b_.append_token(stmt, expect(")"));
    b_.append_child(stmt, statement());
    return stmt;
  }

  ParseIndex return_statement()
  {
    const ParseIndex stmt = open(Category::return_statement);
    b_.append_token(stmt, take());
    if (!check(";")) {
      b_.append_child(stmt, expression());
    }
    b_.append_token(stmt, expect(";"));
    return stmt;
  }

  ParseIndex expression() { return binary(1); }

  // Precedence climbing; all binary operators are left-associative.
  ParseIndex binary(int min_precedence)
  {
    ParseIndex lhs = unary();
    for (;;) {
      const Token * t = peek();
      if (t == nullptr || t->kind != TokenKind::op) {
        return lhs;
      }
      const int prec = binary_precedence(t->text);
      if (prec == 0 || prec < min_precedence) {
        return lhs;
      }
      const auto & first = b_.at(lhs);
      const ParseIndex node = b_.add(Category::binary_expression, first.line, first.column);
      b_.append_child(node, lhs);
      b_.append_token(node, take());
      b_.append_child(node, binary(prec + 1));
      lhs = node;
    }
  }

  ParseIndex unary()
  {
    if (check("-") || check("!")) {
      const ParseIndex node = open(Category::unary_expression);
      b_.append_token(node, take());
      b_.append_child(node, unary());
      return node;
    }
    return primary();
  }

  ParseIndex primary()
  {
    const Token * t = peek();
    if (t == nullptr) {
      fail({"expression"});
    }
    if (t->kind == TokenKind::int_literal || t->kind == TokenKind::float_literal) {
      const ParseIndex node = open(Category::literal_expression);
      b_.set_leaf(node, take());
      return node;
    }
    if (t->kind == TokenKind::identifier) {
      if (peek(1) != nullptr && peek(1)->text == "(" &&
          peek(1)->kind == TokenKind::punctuation) {
        return call();
      }
      const ParseIndex node = open(Category::identifier_expression);
      b_.set_leaf(node, take());
      return node;
    }
    if (check("(")) {
      const ParseIndex node = open(Category::parenthesized_expression);
      b_.append_token(node, take());
      b_.append_child(node, expression());
      b_.append_token(node, expect(")"));
      return node;
    }
    fail({"expression"});
  }

  ParseIndex call()
  {
    const ParseIndex node = open(Category::call_expression);
    b_.append_token(node, take());
    b_.append_token(node, take());
    if (!check(")")) {
      b_.append_child(node, expression());
      while (check(",")) {
        b_.append_token(node, take());
        b_.append_child(node, expression());
      }
    }
    if (!check(")")) {
      fail({"','", "')'"});
    }
    b_.append_token(node, take());
    return node;
  }

  const std::vector<Token> & tokens_;
  std::size_t pos_ = 0;
  ParseTree::Builder b_;
};

}  // namespace

ParseTree parse(const std::vector<Token> & tokens)
{
  return Parser(tokens).run();
}

ParseTree parse_source(std::string_view source)
{
  return parse(tokenize(source));
}

}  // namespace psgkit
