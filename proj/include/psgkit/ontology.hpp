// psgkit/ontology.hpp - abstraction-level ontology (the semantics language)
//
// Levels run from k = 0 (most abstract) to k = n (the single syntactic
// level). Minimum dependencies point from a concept at level k to one at
// level k - 1; potential dependencies may connect any two concepts.
//
// Mapping keys tie parse-tree constructs to concepts:
//   "<category>"               one per grammar category; names the category's
//                              level-n concept plus its level n-1 concepts
//   "int-literal" etc.         literal token class; names its own level-n
//                              concept, which replaces the category's
//   "<category> <qualifier>"   binary/unary operator text, or "self" for a
//                              call-expression naming its enclosing function;
//                              level n-1 concepts only, replacing the
//                              category's for matching nodes
//   "pattern:<name>"           trigger for a structural pattern; level n-1
//                              concepts only
// The minimum rules of a level-n concept must target exactly the union of
// the level n-1 concepts listed by its entry and the entry's refinements. A
// category entry may list no level n-1 concept when refinements or token
// classes cover every node of that category. The translation-unit entry may
// be empty, in which case the root is not classified.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace psgkit
{

enum class LevelKind { semantic, syntactic };
enum class Strength { minimum, potential };

struct AbstractionLevel
{
  int k = 0;
  LevelKind kind = LevelKind::semantic;
  std::string name;
};

struct Concept
{
  std::string id;
  int level = 0;
  std::string display;
};

struct DependencyRule
{
  std::string from;
  std::string to;
  Strength strength = Strength::minimum;
};

struct SyntacticMapping
{
  std::string category;
  std::vector<std::string> concepts;
};

/// Pattern names accepted after "pattern:".
inline constexpr std::string_view kPatternSelfCall = "self-call";
inline constexpr std::string_view kPatternSelfUpdate = "self-update";

class PslOntology
{
public:
  PslOntology() = default;
  PslOntology(
    std::string id, std::vector<AbstractionLevel> levels, std::vector<Concept> concepts,
    std::vector<DependencyRule> rules, std::vector<SyntacticMapping> mapping);

  const std::string & id() const noexcept { return id_; }
  const std::vector<AbstractionLevel> & levels() const noexcept { return levels_; }
  const std::vector<Concept> & concepts() const noexcept { return concepts_; }
  const std::vector<DependencyRule> & rules() const noexcept { return rules_; }
  const std::vector<SyntacticMapping> & mapping() const noexcept { return mapping_; }

  const Concept * find(std::string_view id) const;
  const AbstractionLevel * level(int k) const;
  /// m_k: number of concepts declared at level k.
  std::size_t level_size(int k) const;
  /// Highest level index n, or -1 when there are no levels.
  int lowest_level() const;
  std::optional<int> syntactic_level() const;

  /// Declaration index of a concept; used to order PSG nodes.
  std::size_t ordinal(std::string_view id) const;

  /// Targets of minimum rules leaving `id`, in rule order.
  const std::vector<std::string> & minimum_parents(std::string_view id) const;

  const SyntacticMapping * mapping_for(std::string_view key) const;

private:
  void index();

  std::string id_;
  std::vector<AbstractionLevel> levels_;
  std::vector<Concept> concepts_;
  std::vector<DependencyRule> rules_;
  std::vector<SyntacticMapping> mapping_;

  std::map<std::string, std::size_t, std::less<>> concept_index_;
  std::map<std::string, std::vector<std::string>, std::less<>> minimum_parents_;
  std::map<std::string, std::size_t, std::less<>> mapping_index_;
};

enum class ViolationKind {
  level_indices,         // not contiguous 0..n
  syntactic_level_count,
  syntactic_level_not_lowest,
  duplicate_concept,
  unknown_level,
  unknown_rule_endpoint,
  non_adjacent_minimum,
  duplicate_rule,
  orphan_concept,
  level_size_order,
  mapping_unknown_key,
  mapping_duplicate_key,
  mapping_missing_category,
  mapping_bad_concept,
  mapping_rule_mismatch,
};

std::string_view to_string(ViolationKind kind);

struct Violation
{
  ViolationKind kind;
  std::string subject;  // concept id, level index, or mapping key
  std::string message;
};

/// Every invariant violation; empty iff the ontology is valid.
std::vector<Violation> validate_ontology(const PslOntology & o);

/// Schema-level decoding only. Throws SchemaError.
PslOntology ontology_from_json(const nlohmann::json & document);
nlohmann::json ontology_to_json(const PslOntology & o);

/// Decodes and validates. Throws SchemaError or OntologyError.
PslOntology load_ontology(std::string_view document);
PslOntology load_ontology_file(const std::string & path);

/// Seeds plus everything reachable through minimum rules. Throws
/// UnknownConcept for a seed not in the ontology.
std::set<std::string> minimum_closure(const PslOntology & o, const std::set<std::string> & seeds);

}  // namespace psgkit
