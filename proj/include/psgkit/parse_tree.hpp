// psgkit/parse_tree.hpp - concrete parse tree shared by the SPT and PSG builders
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "psgkit/lexer.hpp"

namespace psgkit
{

enum class Category {
  translation_unit,
  function_definition,
  parameter_list,
  block,
  declaration_statement,
  assignment_statement,
  if_statement,
  while_statement,
  return_statement,
  expression_statement,
  binary_expression,
  unary_expression,
  call_expression,
  identifier_expression,
  literal_expression,
  parenthesized_expression,
};

inline constexpr std::size_t kCategoryCount = 16;

std::string_view to_string(Category category);
std::optional<Category> category_from_string(std::string_view text);
const std::array<Category, kCategoryCount> & all_categories();

/// Leaf productions hold exactly one token and no items.
bool is_leaf_category(Category category);

using ParseIndex = std::size_t;

/// One item of a production, in source order: either an inline token
/// (keyword, operator, punctuation, declared name) or a child production.
using ParseItem = std::variant<Token, ParseIndex>;

struct ParseNode
{
  Category category = Category::translation_unit;
  std::optional<Token> leaf;  // identifier-expression / literal-expression only
  std::vector<ParseItem> items;
  int line = 0;  // position of the first token, 0 if unknown
  int column = 0;
};

/// Immutable parse tree; nodes are stored in pre-order with the
/// translation-unit root at index 0.
class ParseTree
{
public:
  class Builder;

  const std::vector<ParseNode> & nodes() const noexcept { return nodes_; }
  const ParseNode & node(ParseIndex i) const { return nodes_.at(i); }
  const ParseNode & root() const { return nodes_.front(); }
  std::size_t size() const noexcept { return nodes_.size(); }

  std::vector<ParseIndex> children(ParseIndex i) const;
  /// Inline tokens of `i` (not including leaf tokens of descendants).
  std::vector<Token> inline_tokens(ParseIndex i) const;
  /// Total count of inline tokens over all nodes.
  std::size_t inline_token_count() const;

  /// Name declared by a function-definition (its identifier token).
  std::optional<std::string> function_name(ParseIndex i) const;

  /// Structural equality: categories, token kinds and texts, item order.
  /// Source positions are ignored.
  friend bool operator==(const ParseTree & a, const ParseTree & b);

private:
  std::vector<ParseNode> nodes_;
};

/// Accumulates nodes in any order and finishes into pre-order.
class ParseTree::Builder
{
public:
  ParseIndex add(Category category, int line = 0, int column = 0);
  void set_leaf(ParseIndex node, Token token);
  void append_token(ParseIndex node, Token token);
  void append_child(ParseIndex node, ParseIndex child);
  ParseNode & at(ParseIndex node) { return nodes_.at(node); }

  /// Renumbers the subtree under `root` into pre-order. `root` must be a
  /// translation-unit.
  ParseTree finish(ParseIndex root) &&;

private:
  std::vector<ParseNode> nodes_;
};

}  // namespace psgkit
