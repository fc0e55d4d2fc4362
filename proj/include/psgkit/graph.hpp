// psgkit/graph.hpp - labeled program graphs and label multisets
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace psgkit
{

using NodeId = std::size_t;

/// Opaque, case-sensitive node label. Never empty.
class Label
{
public:
  explicit Label(std::string text);

  const std::string & text() const noexcept { return text_; }

  friend auto operator<=>(const Label &, const Label &) = default;
  friend bool operator==(const Label &, const Label &) = default;

private:
  std::string text_;
};

/// Multiset of labels. Multiplicities are always >= 1; absent labels have count 0.
class LabelMultiset
{
public:
  using Entries = std::map<Label, std::size_t>;

  LabelMultiset() = default;

  /// Adds `count` copies of `label`. A zero count is ignored.
  void add(const Label & label, std::size_t count = 1);

  std::size_t count(const Label & label) const;
  bool contains(const Label & label) const { return count(label) != 0; }

  /// |N|: sum of multiplicities.
  std::size_t cardinality() const noexcept { return cardinality_; }
  std::size_t distinct() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  const Entries & entries() const noexcept { return entries_; }

  friend bool operator==(const LabelMultiset &, const LabelMultiset &) = default;

private:
  Entries entries_;
  std::size_t cardinality_ = 0;
};

struct GraphNode
{
  NodeId id = 0;
  Label label{"?"};
  std::optional<int> level;  // set for PSG nodes only
  std::size_t occurrences = 1;

  friend bool operator==(const GraphNode &, const GraphNode &) = default;
};

enum class EdgeKind { child, dependency_minimum, dependency_potential };

std::string_view to_string(EdgeKind kind);
std::optional<EdgeKind> edge_kind_from_string(std::string_view text);

struct GraphEdge
{
  NodeId from = 0;
  NodeId to = 0;
  EdgeKind kind = EdgeKind::child;

  friend bool operator==(const GraphEdge &, const GraphEdge &) = default;
};

/// Simplified parse tree. Constructor enforces: dense ids, no levels, child
/// edges only, single root, |edges| = |nodes| - 1, acyclic and connected.
/// An empty tree (no nodes) is permitted.
class Spt
{
public:
  Spt() = default;
  Spt(std::vector<GraphNode> nodes, std::vector<GraphEdge> edges, NodeId root);

  const std::vector<GraphNode> & nodes() const noexcept { return nodes_; }
  const std::vector<GraphEdge> & edges() const noexcept { return edges_; }
  NodeId root() const noexcept { return root_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Children of `id` in edge order.
  std::vector<NodeId> children(NodeId id) const;

  friend bool operator==(const Spt &, const Spt &) = default;

private:
  std::vector<GraphNode> nodes_;
  std::vector<GraphEdge> edges_;
  NodeId root_ = 0;
};

/// Program-derived semantics graph. Constructor enforces: dense ids, every
/// node carries a level, labels unique, edges are dependency edges between
/// existing nodes. Level-rule checks that need the ontology live in psg.hpp.
class Psg
{
public:
  Psg() = default;
  Psg(std::vector<GraphNode> nodes, std::vector<GraphEdge> edges, std::string ontology_id);

  const std::vector<GraphNode> & nodes() const noexcept { return nodes_; }
  const std::vector<GraphEdge> & edges() const noexcept { return edges_; }
  const std::string & ontology_id() const noexcept { return ontology_id_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  std::optional<NodeId> find(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }

  /// Number of nodes instantiated at abstraction level `k`.
  std::size_t count_at_level(int k) const;

  friend bool operator==(const Psg &, const Psg &) = default;

private:
  std::vector<GraphNode> nodes_;
  std::vector<GraphEdge> edges_;
  std::string ontology_id_;
};

/// SPT: one entry per node. PSG: one entry per concept (labels are unique),
/// repeated constructs live in `occurrences` and are not counted.
LabelMultiset node_multiset(const Spt & spt);
LabelMultiset node_multiset(const Psg & psg);

}  // namespace psgkit
