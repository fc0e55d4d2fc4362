#include "psgkit/parse_tree.hpp"

#include <stdexcept>
#include <utility>

namespace psgkit
{

namespace
{

constexpr std::array<std::pair<Category, std::string_view>, kCategoryCount> kNames = {{
  {Category::translation_unit, "translation-unit"},
  {Category::function_definition, "function-definition"},
  {Category::parameter_list, "parameter-list"},
  {Category::block, "block"},
  {Category::declaration_statement, "declaration-statement"},
  {Category::assignment_statement, "assignment-statement"},
  {Category::if_statement, "if-statement"},
  {Category::while_statement, "while-statement"},
  {Category::return_statement, "return-statement"},
  {Category::expression_statement, "expression-statement"},
  {Category::binary_expression, "binary-expression"},
  {Category::unary_expression, "unary-expression"},
  {Category::call_expression, "call-expression"},
  {Category::identifier_expression, "identifier-expression"},
  {Category::literal_expression, "literal-expression"},
  {Category::parenthesized_expression, "parenthesized-expression"},
}};

bool same_token(const Token & a, const Token & b)
{
  return a.kind == b.kind && a.text == b.text;
}

}  // namespace

std::string_view to_string(Category category)
{
  for (const auto & [c, name] : kNames) {
    if (c == category) {
      return name;
    }
  }
  return "?";
}

std::optional<Category> category_from_string(std::string_view text)
{
  for (const auto & [c, name] : kNames) {
    if (name == text) {
      return c;
    }
  }
  return std::nullopt;
}

const std::array<Category, kCategoryCount> & all_categories()
{
  static const std::array<Category, kCategoryCount> all = [] {
    std::array<Category, kCategoryCount> out{};
    for (std::size_t i = 0; i < kCategoryCount; ++i) {
      out[i] = kNames[i].first;
    }
    return out;
  }();
  return all;
}

bool is_leaf_category(Category category)
{
  return category == Category::identifier_expression || category == Category::literal_expression;
}

std::vector<ParseIndex> ParseTree::children(ParseIndex i) const
{
  std::vector<ParseIndex> out;
  for (const auto & item : nodes_.at(i).items) {
    if (const auto * child = std::get_if<ParseIndex>(&item)) {
      out.push_back(*child);
    }
  }
  return out;
}

std::vector<Token> ParseTree::inline_tokens(ParseIndex i) const
{
  std::vector<Token> out;
  for (const auto & item : nodes_.at(i).items) {
    if (const auto * tok = std::get_if<Token>(&item)) {
      out.push_back(*tok);
    }
  }
  return out;
}

std::size_t ParseTree::inline_token_count() const
{
  std::size_t n = 0;
  for (const auto & node : nodes_) {
    for (const auto & item : node.items) {
      n += std::holds_alternative<Token>(item) ? 1 : 0;
    }
  }
  return n;
}

std::optional<std::string> ParseTree::function_name(ParseIndex i) const
{
  const auto & node = nodes_.at(i);
  if (node.category != Category::function_definition) {
    return std::nullopt;
  }
  for (const auto & item : node.items) {
    if (const auto * tok = std::get_if<Token>(&item); tok && tok->kind == TokenKind::identifier) {
      return tok->text;
    }
  }
  return std::nullopt;
}

bool operator==(const ParseTree & a, const ParseTree & b)
{
  if (a.nodes_.size() != b.nodes_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    const auto & x = a.nodes_[i];
    const auto & y = b.nodes_[i];
    if (x.category != y.category || x.leaf.has_value() != y.leaf.has_value() ||
        x.items.size() != y.items.size()) {
      return false;
    }
    if (x.leaf && !same_token(*x.leaf, *y.leaf)) {
      return false;
    }
    for (std::size_t j = 0; j < x.items.size(); ++j) {
      const auto * tx = std::get_if<Token>(&x.items[j]);
      const auto * ty = std::get_if<Token>(&y.items[j]);
      if ((tx == nullptr) != (ty == nullptr)) {
        return false;
      }
      if (tx != nullptr) {
        if (!same_token(*tx, *ty)) {
          return false;
        }
      } else if (std::get<ParseIndex>(x.items[j]) != std::get<ParseIndex>(y.items[j])) {
        return false;
      }
    }
  }
  return true;
}

ParseIndex ParseTree::Builder::add(Category category, int line, int column)
{
  ParseNode node;
  node.category = category;
  node.line = line;
  node.column = column;
  nodes_.push_back(std::move(node));
  return nodes_.size() - 1;
}

void ParseTree::Builder::set_leaf(ParseIndex node, Token token)
{
  nodes_.at(node).leaf = std::move(token);
}

void ParseTree::Builder::append_token(ParseIndex node, Token token)
{
  nodes_.at(node).items.emplace_back(std::move(token));
}

void ParseTree::Builder::append_child(ParseIndex node, ParseIndex child)
{
  if (child >= nodes_.size()) {
    throw std::out_of_range("parse tree child index out of range");
  }
  nodes_.at(node).items.emplace_back(child);
}

ParseTree ParseTree::Builder::finish(ParseIndex root) &&
{
  if (nodes_.at(root).category != Category::translation_unit) {
    throw std::invalid_argument("parse tree root must be a translation-unit");
  }
  ParseTree tree;
  tree.nodes_.reserve(nodes_.size());
  // Iterative pre-order copy; child indices are patched once the child lands.
  struct Pending
  {
    ParseIndex old_index;
    ParseIndex parent_new;
    std::size_t item_slot;
  };
  std::vector<Pending> stack{{root, static_cast<ParseIndex>(-1), 0}};
  while (!stack.empty()) {
    const Pending p = stack.back();
    stack.pop_back();
    if (tree.nodes_.size() == nodes_.size()) {
      throw std::invalid_argument("parse tree contains a cycle or a shared node");
    }
    const ParseIndex new_index = tree.nodes_.size();
    tree.nodes_.push_back(nodes_.at(p.old_index));
    if (p.parent_new != static_cast<ParseIndex>(-1)) {
      tree.nodes_[p.parent_new].items[p.item_slot] = new_index;
    }
    const auto & items = tree.nodes_[new_index].items;
    for (std::size_t j = items.size(); j-- > 0;) {
      if (const auto * child = std::get_if<ParseIndex>(&items[j])) {
        stack.push_back({*child, new_index, j});
      }
    }
  }
  if (tree.nodes_.size() != nodes_.size()) {
    // Unreachable or shared nodes would otherwise be silently dropped.
    std::vector<int> refs(nodes_.size(), 0);
    for (const auto & n : nodes_) {
      for (const auto & item : n.items) {
        if (const auto * c = std::get_if<ParseIndex>(&item)) {
          ++refs[*c];
        }
      }
    }
    for (std::size_t i = 0; i < refs.size(); ++i) {
      if (refs[i] > 1) {
        throw std::invalid_argument("parse node shared by several parents");
      }
    }
  }
  return tree;
}

}  // namespace psgkit
