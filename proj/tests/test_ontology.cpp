#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "psgkit/error.hpp"
#include "psgkit/file_io.hpp"
#include "psgkit/ontology.hpp"
#include "test_paths.hpp"

using namespace psgkit;
using nlohmann::json;
using psgkit::test::Rng;

namespace
{

json base_document()
{
  return json::parse(read_file(test::base_ontology_path()));
}

std::vector<Violation> violations_of(const json & doc)
{
  return validate_ontology(ontology_from_json(doc));
}

std::size_t count_kind(const std::vector<Violation> & v, ViolationKind kind)
{
  return static_cast<std::size_t>(
    std::count_if(v.begin(), v.end(), [kind](const Violation & x) { return x.kind == kind; }));
}

}  // namespace

TEST(Ontology, BaseOntologyIsValid)
{
  const auto o = load_ontology_file(test::base_ontology_path());
  EXPECT_TRUE(validate_ontology(o).empty());
  EXPECT_EQ(o.levels().size(), 4u);
  EXPECT_EQ(o.syntactic_level(), 3);
  EXPECT_EQ(o.lowest_level(), 3);
  for (int k = 0; k < 3; ++k) {
    EXPECT_LE(o.level_size(k), o.level_size(k + 1)) << k;
  }
  for (const auto c : all_categories()) {
    EXPECT_NE(o.mapping_for(to_string(c)), nullptr) << to_string(c);
  }
}

TEST(Ontology, OrphanConceptIsReported)
{
  auto doc = base_document();
  auto & rules = doc["rules"];
  const auto before = rules.size();
  rules.erase(std::remove_if(rules.begin(), rules.end(),
                             [](const json & r) {
                               return r["from"] == "Self-Invocation" && r["to"] == "Recursion" &&
                                      r["strength"] == "minimum";
                             }),
              rules.end());
  ASSERT_EQ(rules.size(), before - 1);
  const auto v = violations_of(doc);
  ASSERT_EQ(count_kind(v, ViolationKind::orphan_concept), 1u);
  const auto it = std::find_if(v.begin(), v.end(), [](const Violation & x) {
    return x.kind == ViolationKind::orphan_concept;
  });
  EXPECT_EQ(it->subject, "Self-Invocation");
  EXPECT_EQ(to_string(ViolationKind::orphan_concept), "orphan concept");
}

TEST(Ontology, TwoSyntacticLevelsAreReported)
{
  auto doc = base_document();
  doc["levels"][2]["kind"] = "syntactic";
  const auto v = violations_of(doc);
  EXPECT_GE(count_kind(v, ViolationKind::syntactic_level_count), 1u);
  EXPECT_EQ(to_string(ViolationKind::syntactic_level_count), "exactly one syntactic level");
}

TEST(Ontology, ShrinkingLevelSizesAreReported)
{
  auto doc = base_document();
  for (int i = 0; i < 20; ++i) {
    const std::string id = "Extra " + std::to_string(i);
    doc["concepts"].push_back({{"id", id}, {"level", 0}, {"display", id}});
  }
  const auto v = violations_of(doc);
  EXPECT_GE(count_kind(v, ViolationKind::level_size_order), 1u);
  EXPECT_EQ(to_string(ViolationKind::level_size_order), "level-size monotonicity");
}

TEST(Ontology, NonAdjacentMinimumRuleIsReported)
{
  auto doc = base_document();
  doc["rules"].push_back({{"from", "Multiplication"}, {"to", "Computation"}, {"strength", "minimum"}});
  EXPECT_EQ(count_kind(violations_of(doc), ViolationKind::non_adjacent_minimum), 1u);
}

TEST(Ontology, MappingProblemsAreReported)
{
  auto missing = base_document();
  auto & m = missing["mapping"];
  m.erase(std::remove_if(m.begin(), m.end(), [](const json & e) { return e["category"] == "while-statement"; }),
          m.end());
  EXPECT_GE(count_kind(violations_of(missing), ViolationKind::mapping_missing_category), 1u);

  auto unknown = base_document();
  unknown["mapping"].push_back({{"category", "goto-statement"}, {"concepts", json::array()}});
  EXPECT_GE(count_kind(violations_of(unknown), ViolationKind::mapping_unknown_key), 1u);

  auto bad = base_document();
  bad["mapping"].push_back({{"category", "binary-expression ^"}, {"concepts", {"Nowhere"}}});
  const auto v = violations_of(bad);
  EXPECT_GE(count_kind(v, ViolationKind::mapping_bad_concept) + count_kind(v, ViolationKind::mapping_unknown_key), 1u);
}

TEST(Ontology, LoadRaisesOntologyErrorForInvalidDocument)
{
  auto doc = base_document();
  doc["levels"][2]["kind"] = "syntactic";
  try {
    load_ontology(doc.dump());
    FAIL() << "expected OntologyError";
  } catch (const OntologyError & e) {
    EXPECT_FALSE(e.violations().empty());
  }
}

TEST(Ontology, SchemaErrors)
{
  EXPECT_THROW(load_ontology("{"), SchemaError);
  EXPECT_THROW(load_ontology("[]"), SchemaError);
  auto doc = base_document();
  doc["concepts"][0].erase("level");
  EXPECT_THROW(ontology_from_json(doc), SchemaError);
  doc = base_document();
  doc["rules"][0]["strength"] = "strong";
  EXPECT_THROW(ontology_from_json(doc), SchemaError);
  doc = base_document();
  doc["levels"][0]["kind"] = "pragmatic";
  EXPECT_THROW(ontology_from_json(doc), SchemaError);
}

TEST(Ontology, MissingFileIsIoError)
{
  EXPECT_THROW(load_ontology_file(test::source_path("data/does_not_exist.json")), IoError);
}

TEST(Ontology, JsonRoundTrip)
{
  const auto o = load_ontology_file(test::base_ontology_path());
  const auto again = ontology_from_json(ontology_to_json(o));
  EXPECT_EQ(ontology_to_json(again), ontology_to_json(o));
  EXPECT_EQ(again.id(), o.id());
  EXPECT_EQ(again.concepts().size(), o.concepts().size());
}

TEST(MinimumClosure, ControlFlowSeeds)
{
  const auto o = load_ontology_file(test::base_ontology_path());
  EXPECT_EQ(minimum_closure(o, {"Iteration", "Recursion"}),
            (std::set<std::string>{"Iteration", "Recursion", "Control Flow"}));
  EXPECT_TRUE(minimum_closure(o, {}).empty());
  EXPECT_EQ(minimum_closure(o, {"Self-Invocation"}),
            (std::set<std::string>{"Self-Invocation", "Recursion", "Control Flow"}));
}

TEST(MinimumClosure, UnknownSeedThrows)
{
  const auto o = load_ontology_file(test::base_ontology_path());
  try {
    minimum_closure(o, {"Teleportation"});
    FAIL() << "expected UnknownConcept";
  } catch (const UnknownConcept & e) {
    EXPECT_EQ(e.id(), "Teleportation");
  }
}

TEST(MinimumClosure, PotentialRulesAreNotFollowed)
{
  const auto o = load_ontology_file(test::base_ontology_path());
  const auto c = minimum_closure(o, {"Recursion"});
  EXPECT_EQ(c.count("Iteration"), 0u);
}

TEST(MinimumClosure, PropertiesOnRandomOntologies)
{
  Rng rng(0x0470);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto o = test::random_valid_ontology(rng);
    const auto violations = validate_ontology(o);
    ASSERT_TRUE(violations.empty()) << "trial " << trial << ": " << violations.front().message;
    const auto a = test::random_seed_set(rng, o);
    auto b = a;
    for (const auto & s : test::random_seed_set(rng, o)) {
      b.insert(s);
    }
    const auto ca = minimum_closure(o, a);
    ASSERT_EQ(minimum_closure(o, ca), ca) << "idempotence, trial " << trial;
    ASSERT_TRUE(std::includes(ca.begin(), ca.end(), a.begin(), a.end())) << "extensive, trial " << trial;
    const auto cb = minimum_closure(o, b);
    ASSERT_TRUE(std::includes(cb.begin(), cb.end(), ca.begin(), ca.end())) << "monotone, trial " << trial;
    if (!a.empty()) {
      const bool reaches_top = std::any_of(ca.begin(), ca.end(), [&](const std::string & id) {
        return o.find(id)->level == 0;
      });
      ASSERT_TRUE(reaches_top) << "trial " << trial;
    }
  }
}

TEST(Ontology, RandomOntologiesSurviveJsonRoundTrip)
{
  Rng rng(0x0471);
  for (int trial = 0; trial < 200; ++trial) {
    const auto o = test::random_valid_ontology(rng);
    const auto doc = ontology_to_json(o);
    ASSERT_EQ(ontology_to_json(load_ontology(doc.dump())), doc);
  }
}
