#include "psgkit/psg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <tuple>

#include "psgkit/error.hpp"

namespace psgkit
{

namespace
{

std::string callee_name(const ParseTree & tree, ParseIndex call)
{
  for (const auto & tok : tree.inline_tokens(call)) {
    if (tok.kind == TokenKind::identifier) {
      return tok.text;
    }
  }
  return {};
}

// Visits every node with the name of its enclosing function (empty for
// top-level statements).
void walk(
  const ParseTree & tree,
  const std::function<void(ParseIndex, const std::string & enclosing)> & visit)
{
  struct Frame
  {
    ParseIndex node;
    std::string enclosing;
  };
  std::vector<Frame> stack{{0, {}}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    std::string enclosing = f.enclosing;
    if (auto name = tree.function_name(f.node)) {
      enclosing = *name;
    }
    visit(f.node, enclosing);
    const auto children = tree.children(f.node);
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
      stack.push_back({*it, enclosing});
    }
  }
}

bool is_self_call(const ParseTree & tree, ParseIndex i, const std::string & enclosing)
{
  return tree.node(i).category == Category::call_expression && !enclosing.empty() &&
         callee_name(tree, i) == enclosing;
}

bool reads_identifier(const ParseTree & tree, ParseIndex i, const std::string & name)
{
  const auto & node = tree.node(i);
  if (node.category == Category::identifier_expression) {
    return node.leaf && node.leaf->text == name;
  }
  for (const auto c : tree.children(i)) {
    if (reads_identifier(tree, c, name)) {
      return true;
    }
  }
  return false;
}

std::optional<std::string> assignment_target(const ParseTree & tree, ParseIndex i)
{
  for (const auto & tok : tree.inline_tokens(i)) {
    if (tok.kind == TokenKind::identifier) {
      return tok.text;
    }
  }
  return std::nullopt;
}

std::string qualifier_key(const ParseTree & tree, ParseIndex i, const std::string & enclosing)
{
  const auto & node = tree.node(i);
  const std::string base(to_string(node.category));
  switch (node.category) {
    case Category::binary_expression:
    case Category::unary_expression:
      for (const auto & tok : tree.inline_tokens(i)) {
        if (tok.kind == TokenKind::op) {
          return base + " " + tok.text;
        }
      }
      return base;
    case Category::call_expression:
      return is_self_call(tree, i, enclosing) ? base + " self" : base;
    case Category::literal_expression:
      return node.leaf ? std::string(to_string(node.leaf->kind)) : base;
    default:
      return base;
  }
}

std::vector<std::string_view> node_patterns(
  const ParseTree & tree, ParseIndex i, const std::string & enclosing)
{
  std::vector<std::string_view> out;
  if (is_self_call(tree, i, enclosing)) {
    out.push_back(kPatternSelfCall);
  }
  if (tree.node(i).category == Category::assignment_statement) {
    if (const auto target = assignment_target(tree, i)) {
      const auto children = tree.children(i);
      if (std::any_of(children.begin(), children.end(), [&](ParseIndex c) {
            return reads_identifier(tree, c, *target);
          })) {
        out.push_back(kPatternSelfUpdate);
      }
    }
  }
  return out;
}

struct Resolved
{
  std::string syntactic;
  const std::vector<std::string> * semantic = nullptr;  // level n-1 concepts
};

std::optional<std::string> syntactic_concept(const SyntacticMapping & m, const PslOntology & o)
{
  const int n = o.lowest_level();
  for (const auto & id : m.concepts) {
    const Concept * c = o.find(id);
    if (c != nullptr && c->level == n) {
      return id;
    }
  }
  return std::nullopt;
}

std::vector<std::string> semantic_concepts(const SyntacticMapping & m, const PslOntology & o)
{
  const int n = o.lowest_level();
  std::vector<std::string> out;
  for (const auto & id : m.concepts) {
    const Concept * c = o.find(id);
    if (c != nullptr && c->level != n) {
      out.push_back(id);
    }
  }
  return out;
}

// The syntactic concept comes from the token-class entry when there is one,
// else from the category entry. The semantic concepts come from the most
// specific entry: refinement, then token class, then category.
struct Resolver
{
  const PslOntology & o;
  std::map<const SyntacticMapping *, std::vector<std::string>> semantic_cache;

  const std::vector<std::string> & semantic(const SyntacticMapping & m)
  {
    auto it = semantic_cache.find(&m);
    if (it == semantic_cache.end()) {
      it = semantic_cache.emplace(&m, semantic_concepts(m, o)).first;
    }
    return it->second;
  }

  std::optional<Resolved> operator()(
    const ParseTree & tree, ParseIndex i, const std::string & enclosing)
  {
    const auto category = tree.node(i).category;
    const std::string base(to_string(category));
    const SyntacticMapping * owner = o.mapping_for(base);
    if (owner == nullptr) {
      throw UnmappedCategory(base);
    }
    const std::string key = qualifier_key(tree, i, enclosing);
    const SyntacticMapping * specific = key == base ? nullptr : o.mapping_for(key);
    if (specific != nullptr && syntactic_concept(*specific, o)) {
      owner = specific;  // token class
    }
    const auto syntactic = syntactic_concept(*owner, o);
    if (!syntactic) {
      if (category == Category::translation_unit) {
        return std::nullopt;
      }
      throw UnmappedCategory(key);
    }
    Resolved r{*syntactic, &semantic(specific != nullptr ? *specific : *owner)};
    return r;
  }
};

}  // namespace

ConceptCounts classify_syntax(const ParseTree & tree, const PslOntology & o)
{
  ConceptCounts counts;
  Resolver resolve{o, {}};
  walk(tree, [&](ParseIndex i, const std::string & enclosing) {
    if (const auto r = resolve(tree, i, enclosing)) {
      ++counts[r->syntactic];
    }
  });
  return counts;
}

std::set<std::string> detect_recursion(const ParseTree & tree)
{
  std::set<std::string> out;
  walk(tree, [&](ParseIndex i, const std::string & enclosing) {
    if (is_self_call(tree, i, enclosing)) {
      out.insert(enclosing);
    }
  });
  return out;
}

std::map<std::string, std::size_t> detect_patterns(const ParseTree & tree)
{
  std::map<std::string, std::size_t> out;
  walk(tree, [&](ParseIndex i, const std::string & enclosing) {
    for (const auto name : node_patterns(tree, i, enclosing)) {
      ++out[std::string(name)];
    }
  });
  return out;
}

Psg build_psg(const ParseTree & tree, const PslOntology & o)
{
  // Syntactic concepts are counted directly. Their semantic concepts, plus
  // those of any pattern the node triggers, seed the closure once per node.
  ConceptCounts occurrences;
  ConceptCounts seeds;
  Resolver resolve{o, {}};
  walk(tree, [&](ParseIndex i, const std::string & enclosing) {
    std::set<std::string> node_seeds;
    if (const auto r = resolve(tree, i, enclosing)) {
      ++occurrences[r->syntactic];
      node_seeds.insert(r->semantic->begin(), r->semantic->end());
    }
    for (const auto name : node_patterns(tree, i, enclosing)) {
      if (const auto * m = o.mapping_for("pattern:" + std::string(name))) {
        node_seeds.insert(m->concepts.begin(), m->concepts.end());
      }
    }
    for (const auto & id : node_seeds) {
      ++seeds[id];
    }
  });
  for (const auto & [seed, count] : seeds) {
    for (const auto & id : minimum_closure(o, {seed})) {
      occurrences[id] += count;
    }
  }

  std::vector<std::string> order;
  order.reserve(occurrences.size());
  for (const auto & [id, count] : occurrences) {
    order.push_back(id);
  }
  std::sort(order.begin(), order.end(), [&](const std::string & a, const std::string & b) {
    const int la = o.find(a)->level;
    const int lb = o.find(b)->level;
    return la != lb ? la < lb : o.ordinal(a) < o.ordinal(b);
  });

  std::map<std::string, NodeId> ids;
  std::vector<GraphNode> nodes;
  for (const auto & id : order) {
    const NodeId nid = nodes.size();
    ids.emplace(id, nid);
    nodes.push_back(GraphNode{nid, Label(id), o.find(id)->level, occurrences.at(id)});
  }

  std::vector<GraphEdge> edges;
  for (const auto & r : o.rules()) {
    const auto from = ids.find(r.from);
    const auto to = ids.find(r.to);
    if (from == ids.end() || to == ids.end()) {
      continue;
    }
    edges.push_back(GraphEdge{
      from->second, to->second,
      r.strength == Strength::minimum ? EdgeKind::dependency_minimum
                                      : EdgeKind::dependency_potential});
  }
  std::sort(edges.begin(), edges.end(), [](const GraphEdge & a, const GraphEdge & b) {
    return std::tie(a.from, a.to, a.kind) < std::tie(b.from, b.to, b.kind);
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  return Psg(std::move(nodes), std::move(edges), o.id());
}

std::vector<std::string> check_psg(const Psg & psg, const PslOntology & o)
{
  std::vector<std::string> out;
  std::set<std::string> labels;
  std::set<int> syntactic_levels;
  const auto syntactic = o.syntactic_level();
  for (const auto & n : psg.nodes()) {
    if (!labels.insert(n.label.text()).second) {
      out.push_back("duplicate label " + n.label.text());
    }
    const Concept * c = o.find(n.label.text());
    if (c == nullptr) {
      out.push_back("node " + n.label.text() + " is not an ontology concept");
      continue;
    }
    if (n.level != c->level) {
      out.push_back("node " + n.label.text() + " has level " +
                    (n.level ? std::to_string(*n.level) : std::string("none")) +
                    " but the concept is at level " + std::to_string(c->level));
    }
    const auto * lvl = o.level(c->level);
    if (lvl != nullptr && lvl->kind == LevelKind::syntactic) {
      syntactic_levels.insert(c->level);
    }
  }
  if (!psg.nodes().empty() && syntactic_levels.size() != 1) {
    out.push_back("expected exactly one syntactic level among nodes, found " +
                  std::to_string(syntactic_levels.size()));
  }
  if (syntactic && !syntactic_levels.empty() && *syntactic_levels.begin() != *syntactic) {
    out.push_back("syntactic nodes are not at the ontology's syntactic level");
  }

  const auto & nodes = psg.nodes();
  for (const auto & n : nodes) {
    if (!n.level || *n.level == 0) {
      continue;
    }
    const bool anchored = std::any_of(psg.edges().begin(), psg.edges().end(), [&](const GraphEdge & e) {
      return e.kind == EdgeKind::dependency_minimum && e.from == n.id &&
             nodes[e.to].level == *n.level - 1;
    });
    if (!anchored) {
      out.push_back("node " + n.label.text() + " lacks a minimum edge to level " +
                    std::to_string(*n.level - 1));
    }
  }
  for (const auto & e : psg.edges()) {
    if (e.kind == EdgeKind::dependency_minimum && nodes[e.to].level != *nodes[e.from].level - 1) {
      out.push_back("minimum edge " + nodes[e.from].label.text() + " -> " +
                    nodes[e.to].label.text() + " skips levels");
    }
  }
  return out;
}

}  // namespace psgkit
