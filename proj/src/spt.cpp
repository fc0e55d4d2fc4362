#include "psgkit/spt.hpp"

#include <string>
#include <vector>

namespace psgkit
{

namespace
{

// Tokens whose text is kept verbatim in labels and leaves.
bool is_structural(const Token & t)
{
  switch (t.kind) {
    case TokenKind::keyword:
      return !is_type_keyword(t.text);
    case TokenKind::op:
    case TokenKind::punctuation:
      return true;
    default:
      return false;
  }
}

class SptBuilder
{
public:
  SptBuilder(const ParseTree & tree, const SptOptions & options) : tree_(tree), options_(options) {}

  Spt run() &&
  {
    visit(0);
    return Spt(std::move(nodes_), std::move(edges_), 0);
  }

private:
  std::string placeholder(const Token & t) const
  {
    if (options_.placeholders == PlaceholderMode::coarse) {
      return "#";
    }
    switch (t.kind) {
      case TokenKind::int_literal:
      case TokenKind::float_literal:
        return "#LIT";
      case TokenKind::keyword:
        return "#TYPE";
      default:
        return "#VAR";
    }
  }

  NodeId add(std::string label)
  {
    const NodeId id = nodes_.size();
    nodes_.push_back(GraphNode{id, Label(std::move(label)), std::nullopt, 1});
    return id;
  }

  void link(NodeId parent, NodeId child)
  {
    edges_.push_back(GraphEdge{parent, child, EdgeKind::child});
  }

  NodeId visit(ParseIndex i)
  {
    const auto & node = tree_.node(i);
    if (node.leaf) {
      return add(placeholder(*node.leaf));
    }
    std::string label;
    for (const auto & item : node.items) {
      const auto * tok = std::get_if<Token>(&item);
      if (!label.empty()) {
        label += ' ';
      }
      label += tok != nullptr && is_structural(*tok) ? tok->text : std::string("%");
    }
    const NodeId self = add(label.empty() ? std::string(kEmptyProductionLabel) : label);
    for (const auto & item : node.items) {
      if (const auto * tok = std::get_if<Token>(&item)) {
        if (tok->kind == TokenKind::punctuation && !options_.delimiter_leaves) {
          continue;
        }
        link(self, add(is_structural(*tok) ? tok->text : placeholder(*tok)));
      } else {
        link(self, visit(std::get<ParseIndex>(item)));
      }
    }
    return self;
  }

  const ParseTree & tree_;
  const SptOptions & options_;
  std::vector<GraphNode> nodes_;
  std::vector<GraphEdge> edges_;
};

}  // namespace

std::string_view to_string(PlaceholderMode mode)
{
  return mode == PlaceholderMode::coarse ? "coarse" : "fine";
}

Spt build_spt(const ParseTree & tree, const SptOptions & options)
{
  return SptBuilder(tree, options).run();
}

}  // namespace psgkit
