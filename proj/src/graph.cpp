#include "psgkit/graph.hpp"

#include <set>
#include <stdexcept>

namespace psgkit
{

Label::Label(std::string text) : text_(std::move(text))
{
  if (text_.empty()) {
    throw std::invalid_argument("label text must be non-empty");
  }
}

void LabelMultiset::add(const Label & label, std::size_t count)
{
  if (count == 0) {
    return;
  }
  entries_[label] += count;
  cardinality_ += count;
}

std::size_t LabelMultiset::count(const Label & label) const
{
  const auto it = entries_.find(label);
  return it == entries_.end() ? 0 : it->second;
}

std::string_view to_string(EdgeKind kind)
{
  switch (kind) {
    case EdgeKind::child:
      return "child";
    case EdgeKind::dependency_minimum:
      return "minimum";
    case EdgeKind::dependency_potential:
      return "potential";
  }
  return "child";
}

std::optional<EdgeKind> edge_kind_from_string(std::string_view text)
{
  if (text == "child") {
    return EdgeKind::child;
  }
  if (text == "minimum") {
    return EdgeKind::dependency_minimum;
  }
  if (text == "potential") {
    return EdgeKind::dependency_potential;
  }
  return std::nullopt;
}

namespace
{

void check_dense_ids(const std::vector<GraphNode> & nodes)
{
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id != i) {
      throw std::invalid_argument("node ids must be dense and in order; node " + std::to_string(i) +
                                  " has id " + std::to_string(nodes[i].id));
    }
    if (nodes[i].occurrences == 0) {
      throw std::invalid_argument("node " + std::to_string(i) + " has zero occurrences");
    }
  }
}

void check_endpoints(const std::vector<GraphEdge> & edges, std::size_t node_count)
{
  for (const auto & e : edges) {
    if (e.from >= node_count || e.to >= node_count) {
      throw std::invalid_argument(
        "edge " + std::to_string(e.from) + "->" + std::to_string(e.to) + " has a dangling endpoint");
    }
  }
}

}  // namespace

Spt::Spt(std::vector<GraphNode> nodes, std::vector<GraphEdge> edges, NodeId root)
: nodes_(std::move(nodes)), edges_(std::move(edges)), root_(root)
{
  check_dense_ids(nodes_);
  check_endpoints(edges_, nodes_.size());
  if (nodes_.empty()) {
    if (!edges_.empty()) {
      throw std::invalid_argument("empty SPT cannot have edges");
    }
    root_ = 0;
    return;
  }
  if (root_ >= nodes_.size()) {
    throw std::invalid_argument("SPT root does not exist");
  }
  if (edges_.size() + 1 != nodes_.size()) {
    throw std::invalid_argument("SPT must have exactly |nodes| - 1 edges");
  }
  std::vector<int> parents(nodes_.size(), 0);
  for (const auto & n : nodes_) {
    if (n.level) {
      throw std::invalid_argument("SPT nodes carry no level");
    }
  }
  for (const auto & e : edges_) {
    if (e.kind != EdgeKind::child) {
      throw std::invalid_argument("SPT edges must all be child edges");
    }
    ++parents[e.to];
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const int expected = i == root_ ? 0 : 1;
    if (parents[i] != expected) {
      throw std::invalid_argument("SPT node " + std::to_string(i) + " has " +
                                  std::to_string(parents[i]) + " parents");
    }
  }
  // Every node has one parent and the root none; reachability from the root
  // then rules out cycles among the remaining nodes.
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<NodeId> stack{root_};
  std::size_t reached = 0;
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    if (seen[id]) {
      continue;
    }
    seen[id] = true;
    ++reached;
    for (const auto & e : edges_) {
      if (e.from == id) {
        stack.push_back(e.to);
      }
    }
  }
  if (reached != nodes_.size()) {
    throw std::invalid_argument("SPT is not connected");
  }
}

std::vector<NodeId> Spt::children(NodeId id) const
{
  std::vector<NodeId> out;
  for (const auto & e : edges_) {
    if (e.from == id) {
      out.push_back(e.to);
    }
  }
  return out;
}

Psg::Psg(std::vector<GraphNode> nodes, std::vector<GraphEdge> edges, std::string ontology_id)
: nodes_(std::move(nodes)), edges_(std::move(edges)), ontology_id_(std::move(ontology_id))
{
  check_dense_ids(nodes_);
  check_endpoints(edges_, nodes_.size());
  std::set<std::string> labels;
  for (const auto & n : nodes_) {
    if (!n.level) {
      throw std::invalid_argument("PSG node " + std::to_string(n.id) + " has no level");
    }
    if (!labels.insert(n.label.text()).second) {
      throw std::invalid_argument("duplicate PSG label: " + n.label.text());
    }
  }
  for (const auto & e : edges_) {
    if (e.kind == EdgeKind::child) {
      throw std::invalid_argument("PSG edges must be dependency edges");
    }
  }
}

std::optional<NodeId> Psg::find(std::string_view label) const
{
  for (const auto & n : nodes_) {
    if (n.label.text() == label) {
      return n.id;
    }
  }
  return std::nullopt;
}

std::size_t Psg::count_at_level(int k) const
{
  std::size_t count = 0;
  for (const auto & n : nodes_) {
    if (n.level == k) {
      ++count;
    }
  }
  return count;
}

LabelMultiset node_multiset(const Spt & spt)
{
  LabelMultiset out;
  for (const auto & n : spt.nodes()) {
    out.add(n.label);
  }
  return out;
}

LabelMultiset node_multiset(const Psg & psg)
{
  LabelMultiset out;
  for (const auto & n : psg.nodes()) {
    out.add(n.label, 1);
  }
  return out;
}

}  // namespace psgkit
