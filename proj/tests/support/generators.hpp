// Hand-rolled random generators for property tests. Every generator takes
// the engine by reference so a failing seed can be replayed.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "psgkit/graph.hpp"
#include "psgkit/ontology.hpp"
#include "psgkit/parse_tree.hpp"

namespace psgkit::test
{

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng & rng, std::size_t lo, std::size_t hi)
{
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Labels drawn from an alphabet of `alphabet` names ("l0", "l1", ...), with
/// multiplicities in [1, max_count]. May be empty when max_distinct is 0.
inline LabelMultiset random_multiset(
  Rng & rng, std::size_t alphabet, std::size_t max_distinct, std::size_t max_count)
{
  LabelMultiset out;
  const std::size_t distinct = uniform(rng, 0, std::min(alphabet, max_distinct));
  std::vector<std::size_t> names(alphabet);
  for (std::size_t i = 0; i < alphabet; ++i) {
    names[i] = i;
  }
  std::shuffle(names.begin(), names.end(), rng);
  for (std::size_t i = 0; i < distinct; ++i) {
    out.add(Label("l" + std::to_string(names[i])), uniform(rng, 1, max_count));
  }
  return out;
}

/// Multiset over labels with a fixed prefix, so two calls with different
/// prefixes never share support.
inline LabelMultiset random_prefixed_multiset(Rng & rng, const std::string & prefix)
{
  LabelMultiset out;
  const std::size_t distinct = uniform(rng, 1, 12);
  for (std::size_t i = 0; i < distinct; ++i) {
    out.add(Label(prefix + std::to_string(i)), uniform(rng, 1, 9));
  }
  return out;
}

/// A random ontology satisfying every structural invariant: contiguous
/// levels, one syntactic level at the bottom, non-decreasing level sizes,
/// adjacent minimum rules anchoring every non-root concept, arbitrary
/// potential rules, and a complete category mapping.
inline PslOntology random_valid_ontology(Rng & rng)
{
  const int n = static_cast<int>(uniform(rng, 1, 4));
  std::vector<std::size_t> sizes(n + 1);
  sizes[n] = uniform(rng, kCategoryCount, kCategoryCount + 10);
  for (int k = n - 1; k >= 0; --k) {
    sizes[k] = uniform(rng, 1, sizes[k + 1]);
  }

  std::vector<AbstractionLevel> levels;
  std::vector<Concept> concepts;
  std::vector<std::vector<std::string>> ids(n + 1);
  for (int k = 0; k <= n; ++k) {
    levels.push_back(
      {k, k == n ? LevelKind::syntactic : LevelKind::semantic, "L" + std::to_string(k)});
    for (std::size_t i = 0; i < sizes[k]; ++i) {
      ids[k].push_back("c" + std::to_string(k) + "_" + std::to_string(i));
      concepts.push_back({ids[k].back(), k, ids[k].back()});
    }
  }

  std::vector<DependencyRule> rules;
  std::map<std::string, std::vector<std::string>> parents;
  for (int k = 1; k <= n; ++k) {
    for (const auto & id : ids[k]) {
      auto pool = ids[k - 1];
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(uniform(rng, 1, std::min<std::size_t>(3, pool.size())));
      for (const auto & p : pool) {
        rules.push_back({id, p, Strength::minimum});
      }
      parents[id] = pool;
    }
  }
  std::set<std::pair<std::string, std::string>> potential;
  const std::size_t extra = uniform(rng, 0, concepts.size());
  for (std::size_t i = 0; i < extra; ++i) {
    const auto & a = concepts[uniform(rng, 0, concepts.size() - 1)].id;
    const auto & b = concepts[uniform(rng, 0, concepts.size() - 1)].id;
    if (potential.emplace(a, b).second) {
      rules.push_back({a, b, Strength::potential});
    }
  }

  std::vector<SyntacticMapping> mapping;
  auto syntactic = ids[n];
  std::shuffle(syntactic.begin(), syntactic.end(), rng);
  std::size_t next = 0;
  for (const auto c : all_categories()) {
    SyntacticMapping m{std::string(to_string(c)), {}};
    if (c != Category::translation_unit) {
      const auto & s = syntactic[next++];
      m.concepts.push_back(s);
      for (const auto & p : parents[s]) {
        m.concepts.push_back(p);
      }
    }
    mapping.push_back(std::move(m));
  }
  return PslOntology("random", std::move(levels), std::move(concepts), std::move(rules),
                     std::move(mapping));
}

/// Random subset of the ontology's concept ids.
inline std::set<std::string> random_seed_set(Rng & rng, const PslOntology & o)
{
  std::set<std::string> out;
  const std::size_t count = uniform(rng, 0, std::min<std::size_t>(6, o.concepts().size()));
  for (std::size_t i = 0; i < count; ++i) {
    out.insert(o.concepts()[uniform(rng, 0, o.concepts().size() - 1)].id);
  }
  return out;
}

}  // namespace psgkit::test
