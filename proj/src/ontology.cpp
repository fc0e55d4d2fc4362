#include "psgkit/ontology.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <tuple>

#include "psgkit/error.hpp"
#include "psgkit/file_io.hpp"
#include "psgkit/parse_tree.hpp"

namespace psgkit
{

using nlohmann::json;

namespace
{

constexpr std::array<std::string_view, 13> kBinaryOperators = {
  "+", "-", "*", "/", "%", "<", ">", "<=", ">=", "==", "!=", "&&", "||"};
constexpr std::array<std::string_view, 2> kUnaryOperators = {"-", "!"};
constexpr std::array<std::string_view, 2> kLiteralClasses = {"int-literal", "float-literal"};
constexpr std::string_view kPatternPrefix = "pattern:";

template <std::size_t N>
bool contains(const std::array<std::string_view, N> & items, std::string_view x)
{
  return std::find(items.begin(), items.end(), x) != items.end();
}

enum class KeyKind { base, refined, token_class, pattern, invalid };

KeyKind classify_key(std::string_view key)
{
  if (key.starts_with(kPatternPrefix)) {
    const auto name = key.substr(kPatternPrefix.size());
    return name == kPatternSelfCall || name == kPatternSelfUpdate ? KeyKind::pattern
                                                                  : KeyKind::invalid;
  }
  if (contains(kLiteralClasses, key)) {
    return KeyKind::token_class;
  }
  const auto space = key.find(' ');
  if (space == std::string_view::npos) {
    return category_from_string(key) ? KeyKind::base : KeyKind::invalid;
  }
  const auto category = category_from_string(key.substr(0, space));
  const auto qualifier = key.substr(space + 1);
  if (category == Category::binary_expression && contains(kBinaryOperators, qualifier)) {
    return KeyKind::refined;
  }
  if (category == Category::unary_expression && contains(kUnaryOperators, qualifier)) {
    return KeyKind::refined;
  }
  if (category == Category::call_expression && qualifier == "self") {
    return KeyKind::refined;
  }
  return KeyKind::invalid;
}

bool fully_covered(const std::string & key, const std::set<std::string> & keys)
{
  const auto refined_all = [&](const auto & qualifiers) {
    return std::all_of(qualifiers.begin(), qualifiers.end(), [&](std::string_view q) {
      return keys.count(key + " " + std::string(q)) > 0;
    });
  };
  if (key == to_string(Category::binary_expression)) {
    return refined_all(kBinaryOperators);
  }
  if (key == to_string(Category::unary_expression)) {
    return refined_all(kUnaryOperators);
  }
  if (key == to_string(Category::literal_expression)) {
    return std::all_of(kLiteralClasses.begin(), kLiteralClasses.end(), [&](std::string_view c) {
      return keys.count(std::string(c)) > 0;
    });
  }
  return false;
}

std::string_view to_string(LevelKind kind)
{
  return kind == LevelKind::syntactic ? "syntactic" : "semantic";
}

std::string_view to_string(Strength s)
{
  return s == Strength::minimum ? "minimum" : "potential";
}

// ---------------------------------------------------------------------------
// JSON decoding helpers

const json & require(const json & obj, const char * key, const std::string & path)
{
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(path + "/" + key, "missing required field");
  }
  return *it;
}

std::string require_string(const json & obj, const char * key, const std::string & path)
{
  const auto & v = require(obj, key, path);
  if (!v.is_string() || v.get<std::string>().empty()) {
    throw SchemaError(path + "/" + key, "must be a non-empty string");
  }
  return v.get<std::string>();
}

int require_int(const json & obj, const char * key, const std::string & path)
{
  const auto & v = require(obj, key, path);
  if (!v.is_number_integer()) {
    throw SchemaError(path + "/" + key, "must be an integer");
  }
  return v.get<int>();
}

const json & require_array(const json & obj, const char * key, const std::string & path)
{
  const auto & v = require(obj, key, path);
  if (!v.is_array()) {
    throw SchemaError(path + "/" + key, "must be an array");
  }
  return v;
}

void reject_unknown_fields(
  const json & obj, std::initializer_list<std::string_view> allowed, const std::string & path)
{
  for (const auto & [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw SchemaError(path + "/" + key, "unexpected field");
    }
  }
}

void require_object(const json & v, const std::string & path)
{
  if (!v.is_object()) {
    throw SchemaError(path, "must be an object");
  }
}

}  // namespace

PslOntology::PslOntology(
  std::string id, std::vector<AbstractionLevel> levels, std::vector<Concept> concepts,
  std::vector<DependencyRule> rules, std::vector<SyntacticMapping> mapping)
: id_(std::move(id)),
  levels_(std::move(levels)),
  concepts_(std::move(concepts)),
  rules_(std::move(rules)),
  mapping_(std::move(mapping))
{
  index();
}

void PslOntology::index()
{
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    concept_index_.emplace(concepts_[i].id, i);
  }
  for (const auto & r : rules_) {
    if (r.strength == Strength::minimum) {
      auto & parents = minimum_parents_[r.from];
      if (std::find(parents.begin(), parents.end(), r.to) == parents.end()) {
        parents.push_back(r.to);
      }
    }
  }
  for (std::size_t i = 0; i < mapping_.size(); ++i) {
    mapping_index_.emplace(mapping_[i].category, i);
  }
}

const Concept * PslOntology::find(std::string_view id) const
{
  const auto it = concept_index_.find(id);
  return it == concept_index_.end() ? nullptr : &concepts_[it->second];
}

const AbstractionLevel * PslOntology::level(int k) const
{
  for (const auto & l : levels_) {
    if (l.k == k) {
      return &l;
    }
  }
  return nullptr;
}

std::size_t PslOntology::level_size(int k) const
{
  return static_cast<std::size_t>(
    std::count_if(concepts_.begin(), concepts_.end(), [k](const Concept & c) {
      return c.level == k;
    }));
}

int PslOntology::lowest_level() const
{
  int n = -1;
  for (const auto & l : levels_) {
    n = std::max(n, l.k);
  }
  return n;
}

std::optional<int> PslOntology::syntactic_level() const
{
  for (const auto & l : levels_) {
    if (l.kind == LevelKind::syntactic) {
      return l.k;
    }
  }
  return std::nullopt;
}

std::size_t PslOntology::ordinal(std::string_view id) const
{
  const auto it = concept_index_.find(id);
  if (it == concept_index_.end()) {
    throw UnknownConcept(std::string(id));
  }
  return it->second;
}

const std::vector<std::string> & PslOntology::minimum_parents(std::string_view id) const
{
  static const std::vector<std::string> none;
  const auto it = minimum_parents_.find(id);
  return it == minimum_parents_.end() ? none : it->second;
}

const SyntacticMapping * PslOntology::mapping_for(std::string_view key) const
{
  const auto it = mapping_index_.find(key);
  return it == mapping_index_.end() ? nullptr : &mapping_[it->second];
}

std::string_view to_string(ViolationKind kind)
{
  switch (kind) {
    case ViolationKind::level_indices:
      return "level indices";
    case ViolationKind::syntactic_level_count:
      return "exactly one syntactic level";
    case ViolationKind::syntactic_level_not_lowest:
      return "syntactic level not lowest";
    case ViolationKind::duplicate_concept:
      return "duplicate concept";
    case ViolationKind::unknown_level:
      return "unknown level";
    case ViolationKind::unknown_rule_endpoint:
      return "unknown rule endpoint";
    case ViolationKind::non_adjacent_minimum:
      return "non-adjacent minimum edge";
    case ViolationKind::duplicate_rule:
      return "duplicate rule";
    case ViolationKind::orphan_concept:
      return "orphan concept";
    case ViolationKind::level_size_order:
      return "level-size monotonicity";
    case ViolationKind::mapping_unknown_key:
      return "unknown mapping key";
    case ViolationKind::mapping_duplicate_key:
      return "duplicate mapping key";
    case ViolationKind::mapping_missing_category:
      return "unmapped category";
    case ViolationKind::mapping_bad_concept:
      return "bad mapping concept";
    case ViolationKind::mapping_rule_mismatch:
      return "mapping/rule mismatch";
  }
  return "?";
}

std::vector<Violation> validate_ontology(const PslOntology & o)
{
  std::vector<Violation> out;
  auto report = [&out](ViolationKind kind, std::string subject, const std::string & detail) {
    std::string message = std::string(to_string(kind)) + ": " + detail;
    out.push_back(Violation{kind, std::move(subject), std::move(message)});
  };

  // Levels.
  std::vector<int> ks;
  for (const auto & l : o.levels()) {
    ks.push_back(l.k);
  }
  std::sort(ks.begin(), ks.end());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] != static_cast<int>(i)) {
      report(ViolationKind::level_indices, std::to_string(ks[i]),
             "levels must be numbered 0..n without gaps or repeats");
      break;
    }
  }
  const int n = o.lowest_level();
  int syntactic = 0;
  for (const auto & l : o.levels()) {
    if (l.kind == LevelKind::syntactic) {
      ++syntactic;
      if (l.k != n) {
        report(ViolationKind::syntactic_level_not_lowest, std::to_string(l.k),
               "syntactic level " + std::to_string(l.k) + " is not the lowest level " +
                 std::to_string(n));
      }
    }
  }
  if (syntactic != 1) {
    report(ViolationKind::syntactic_level_count, "levels",
           "found " + std::to_string(syntactic) + " syntactic levels");
  }

  // Concepts.
  std::set<std::string> seen;
  for (const auto & c : o.concepts()) {
    if (!seen.insert(c.id).second) {
      report(ViolationKind::duplicate_concept, c.id, "concept id " + c.id + " declared twice");
    }
    if (o.level(c.level) == nullptr) {
      report(ViolationKind::unknown_level, c.id,
             c.id + " refers to undeclared level " + std::to_string(c.level));
    }
  }

  // Rules.
  std::set<std::tuple<std::string, std::string, Strength>> rule_set;
  for (const auto & r : o.rules()) {
    const Concept * from = o.find(r.from);
    const Concept * to = o.find(r.to);
    if (from == nullptr || to == nullptr) {
      report(ViolationKind::unknown_rule_endpoint, from == nullptr ? r.from : r.to,
             "rule " + r.from + " -> " + r.to + " names an unknown concept");
      continue;
    }
    if (!rule_set.emplace(r.from, r.to, r.strength).second) {
      report(ViolationKind::duplicate_rule, r.from,
             std::string(to_string(r.strength)) + " rule " + r.from + " -> " + r.to +
               " appears twice");
    }
    if (r.strength == Strength::minimum && to->level != from->level - 1) {
      report(ViolationKind::non_adjacent_minimum, r.from,
             "minimum rule " + r.from + " (level " + std::to_string(from->level) + ") -> " +
               r.to + " (level " + std::to_string(to->level) + ") must go up exactly one level");
    }
  }
  for (const auto & c : o.concepts()) {
    if (c.level <= 0) {
      continue;
    }
    const auto & parents = o.minimum_parents(c.id);
    const bool anchored = std::any_of(parents.begin(), parents.end(), [&](const std::string & p) {
      const Concept * pc = o.find(p);
      return pc != nullptr && pc->level == c.level - 1;
    });
    if (!anchored) {
      report(ViolationKind::orphan_concept, c.id,
             c.id + " (level " + std::to_string(c.level) + ") has no minimum dependency on level " +
               std::to_string(c.level - 1));
    }
  }

  // Level sizes shrink going up: m_0 <= m_1 <= ... <= m_n.
  for (int k = 1; k <= n; ++k) {
    const auto upper = o.level_size(k - 1);
    const auto lower = o.level_size(k);
    if (upper > lower) {
      report(ViolationKind::level_size_order, std::to_string(k - 1),
             "m_" + std::to_string(k - 1) + " = " + std::to_string(upper) + " exceeds m_" +
               std::to_string(k) + " = " + std::to_string(lower));
    }
  }

  // Mapping.
  std::set<std::string> keys;
  std::map<std::string, std::string> syntactic_owner;          // concept -> key
  std::map<std::string, std::set<std::string>> expected_rules;  // concept -> targets
  std::map<std::string, std::string> category_concept;          // category -> concept
  std::vector<std::pair<std::string, std::set<std::string>>> refinements;
  std::vector<std::string> bare_entries;
  for (const auto & m : o.mapping()) {
    if (!keys.insert(m.category).second) {
      report(ViolationKind::mapping_duplicate_key, m.category,
             "mapping key \"" + m.category + "\" appears more than once");
      continue;
    }
    const KeyKind key_kind = classify_key(m.category);
    if (key_kind == KeyKind::invalid) {
      report(ViolationKind::mapping_unknown_key, m.category,
             "\"" + m.category + "\" is not a grammar category, refinement, token class, or pattern");
      continue;
    }
    if (key_kind == KeyKind::base && m.category == to_string(Category::translation_unit) &&
        m.concepts.empty()) {
      continue;
    }
    if (m.concepts.empty()) {
      report(ViolationKind::mapping_bad_concept, m.category,
             "mapping \"" + m.category + "\" lists no concepts");
      continue;
    }
    const bool semantic_only = key_kind == KeyKind::refined || key_kind == KeyKind::pattern;
    std::vector<std::string> syntactic_ids;
    std::set<std::string> semantic_ids;
    for (const auto & id : m.concepts) {
      const Concept * c = o.find(id);
      if (c == nullptr) {
        report(ViolationKind::mapping_bad_concept, m.category,
               "mapping \"" + m.category + "\" names unknown concept " + id);
      } else if (c->level == n && !semantic_only) {
        syntactic_ids.push_back(id);
      } else if (c->level == n - 1) {
        semantic_ids.insert(id);
      } else {
        report(ViolationKind::mapping_bad_concept, m.category,
               "mapping \"" + m.category + "\" names " + id + " at level " +
                 std::to_string(c->level) + "; expected level " + std::to_string(n - 1) +
                 (semantic_only ? "" : " or " + std::to_string(n)));
      }
    }
    if (semantic_only) {
      if (semantic_ids.empty()) {
        report(ViolationKind::mapping_bad_concept, m.category,
               "mapping \"" + m.category + "\" instantiates no level " + std::to_string(n - 1) +
                 " concept");
      } else if (key_kind == KeyKind::refined) {
        refinements.emplace_back(m.category.substr(0, m.category.find(' ')), semantic_ids);
      }
      continue;
    }
    if (syntactic_ids.size() != 1) {
      report(ViolationKind::mapping_bad_concept, m.category,
             "mapping \"" + m.category + "\" must name exactly one syntactic-level concept");
      continue;
    }
    const auto & syntactic_id = syntactic_ids.front();
    if (const auto [it, fresh] = syntactic_owner.emplace(syntactic_id, m.category); !fresh) {
      report(ViolationKind::mapping_bad_concept, m.category,
             syntactic_id + " is already instantiated by mapping \"" + it->second + "\"");
      continue;
    }
    if (semantic_ids.empty()) {
      bare_entries.push_back(m.category);
    }
    expected_rules[syntactic_id].insert(semantic_ids.begin(), semantic_ids.end());
    if (key_kind == KeyKind::base) {
      category_concept.emplace(m.category, syntactic_id);
    }
  }
  for (const auto & [category, semantic_ids] : refinements) {
    if (const auto it = category_concept.find(category); it != category_concept.end()) {
      expected_rules[it->second].insert(semantic_ids.begin(), semantic_ids.end());
    }
  }
  // A category entry may omit semantic concepts only when every node of that
  // category is covered by a more specific entry.
  for (const auto & key : bare_entries) {
    if (!fully_covered(key, keys)) {
      report(ViolationKind::mapping_bad_concept, key,
             "mapping \"" + key + "\" instantiates no level " + std::to_string(n - 1) +
               " concept");
    }
  }
  for (const auto & [syntactic_id, targets] : expected_rules) {
    const auto & parents = o.minimum_parents(syntactic_id);
    const std::set<std::string> rule_targets(parents.begin(), parents.end());
    if (rule_targets != targets) {
      report(ViolationKind::mapping_rule_mismatch, syntactic_owner.at(syntactic_id),
             "minimum rules of " + syntactic_id +
               " do not match the concepts listed by its mapping and refinements");
    }
  }
  for (const auto c : all_categories()) {
    if (keys.count(std::string(to_string(c))) == 0) {
      report(ViolationKind::mapping_missing_category, std::string(to_string(c)),
             "grammar category " + std::string(to_string(c)) + " has no mapping entry");
    }
  }
  return out;
}

PslOntology ontology_from_json(const json & doc)
{
  require_object(doc, "");
  reject_unknown_fields(doc, {"id", "description", "levels", "concepts", "rules", "mapping"}, "");
  std::string id = "psl";
  if (const auto it = doc.find("id"); it != doc.end()) {
    if (!it->is_string() || it->get<std::string>().empty()) {
      throw SchemaError("/id", "must be a non-empty string");
    }
    id = it->get<std::string>();
  }
  if (const auto it = doc.find("description"); it != doc.end() && !it->is_string()) {
    throw SchemaError("/description", "must be a string");
  }

  std::vector<AbstractionLevel> levels;
  const auto & jlevels = require_array(doc, "levels", "");
  for (std::size_t i = 0; i < jlevels.size(); ++i) {
    const std::string path = "/levels/" + std::to_string(i);
    const auto & l = jlevels[i];
    require_object(l, path);
    reject_unknown_fields(l, {"k", "kind", "name"}, path);
    AbstractionLevel level;
    level.k = require_int(l, "k", path);
    const auto kind = require_string(l, "kind", path);
    if (kind == "semantic") {
      level.kind = LevelKind::semantic;
    } else if (kind == "syntactic") {
      level.kind = LevelKind::syntactic;
    } else {
      throw SchemaError(path + "/kind", "must be \"semantic\" or \"syntactic\"");
    }
    level.name = require_string(l, "name", path);
    levels.push_back(std::move(level));
  }

  std::vector<Concept> concepts;
  const auto & jconcepts = require_array(doc, "concepts", "");
  for (std::size_t i = 0; i < jconcepts.size(); ++i) {
    const std::string path = "/concepts/" + std::to_string(i);
    const auto & c = jconcepts[i];
    require_object(c, path);
    reject_unknown_fields(c, {"id", "level", "display"}, path);
    Concept out;
    out.id = require_string(c, "id", path);
    out.level = require_int(c, "level", path);
    out.display = c.contains("display") ? require_string(c, "display", path) : out.id;
    concepts.push_back(std::move(out));
  }

  std::vector<DependencyRule> rules;
  const auto & jrules = require_array(doc, "rules", "");
  for (std::size_t i = 0; i < jrules.size(); ++i) {
    const std::string path = "/rules/" + std::to_string(i);
    const auto & r = jrules[i];
    require_object(r, path);
    reject_unknown_fields(r, {"from", "to", "strength"}, path);
    DependencyRule out;
    out.from = require_string(r, "from", path);
    out.to = require_string(r, "to", path);
    const auto strength = require_string(r, "strength", path);
    if (strength == "minimum") {
      out.strength = Strength::minimum;
    } else if (strength == "potential") {
      out.strength = Strength::potential;
    } else {
      throw SchemaError(path + "/strength", "must be \"minimum\" or \"potential\"");
    }
    rules.push_back(std::move(out));
  }

  std::vector<SyntacticMapping> mapping;
  const auto & jmapping = require_array(doc, "mapping", "");
  for (std::size_t i = 0; i < jmapping.size(); ++i) {
    const std::string path = "/mapping/" + std::to_string(i);
    const auto & m = jmapping[i];
    require_object(m, path);
    reject_unknown_fields(m, {"category", "concepts"}, path);
    SyntacticMapping out;
    out.category = require_string(m, "category", path);
    const auto & ids = require_array(m, "concepts", path);
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (!ids[j].is_string() || ids[j].get<std::string>().empty()) {
        throw SchemaError(path + "/concepts/" + std::to_string(j), "must be a non-empty string");
      }
      out.concepts.push_back(ids[j].get<std::string>());
    }
    mapping.push_back(std::move(out));
  }

  return PslOntology(
    std::move(id), std::move(levels), std::move(concepts), std::move(rules), std::move(mapping));
}

json ontology_to_json(const PslOntology & o)
{
  json doc = json::object();
  doc["id"] = o.id();
  json levels = json::array();
  for (const auto & l : o.levels()) {
    levels.push_back({{"k", l.k}, {"kind", std::string(to_string(l.kind))}, {"name", l.name}});
  }
  doc["levels"] = std::move(levels);
  json concepts = json::array();
  for (const auto & c : o.concepts()) {
    concepts.push_back({{"id", c.id}, {"level", c.level}, {"display", c.display}});
  }
  doc["concepts"] = std::move(concepts);
  json rules = json::array();
  for (const auto & r : o.rules()) {
    rules.push_back(
      {{"from", r.from}, {"to", r.to}, {"strength", std::string(to_string(r.strength))}});
  }
  doc["rules"] = std::move(rules);
  json mapping = json::array();
  for (const auto & m : o.mapping()) {
    mapping.push_back({{"category", m.category}, {"concepts", m.concepts}});
  }
  doc["mapping"] = std::move(mapping);
  return doc;
}

PslOntology load_ontology(std::string_view document)
{
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error & e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  PslOntology o = ontology_from_json(doc);
  const auto violations = validate_ontology(o);
  if (!violations.empty()) {
    std::vector<std::string> messages;
    for (const auto & v : violations) {
      messages.push_back(v.message);
    }
    throw OntologyError(std::move(messages));
  }
  return o;
}

PslOntology load_ontology_file(const std::string & path)
{
  return load_ontology(read_file(path));
}

std::set<std::string> minimum_closure(const PslOntology & o, const std::set<std::string> & seeds)
{
  for (const auto & s : seeds) {
    if (o.find(s) == nullptr) {
      throw UnknownConcept(s);
    }
  }
  std::set<std::string> closed;
  std::deque<std::string> work(seeds.begin(), seeds.end());
  while (!work.empty()) {
    std::string id = std::move(work.front());
    work.pop_front();
    if (!closed.insert(id).second) {
      continue;
    }
    for (const auto & parent : o.minimum_parents(id)) {
      if (closed.count(parent) == 0 && o.find(parent) != nullptr) {
        work.push_back(parent);
      }
    }
  }
  return closed;
}

}  // namespace psgkit
