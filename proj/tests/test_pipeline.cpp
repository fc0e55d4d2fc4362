#include <gtest/gtest.h>

#include <cstdlib>

#include "psgkit/error.hpp"
#include "psgkit/file_io.hpp"
#include "psgkit/parse_tree_io.hpp"
#include "psgkit/parser.hpp"
#include "psgkit/pipeline.hpp"
#include "psgkit/serialize.hpp"
#include "temp_dir.hpp"
#include "test_paths.hpp"

using namespace psgkit;
using psgkit::test::TempDir;

namespace
{

const PslOntology & base()
{
  static const PslOntology o = load_ontology_file(test::base_ontology_path());
  return o;
}

const std::string kSmall = "int f(int n) { return n; }\n";

}  // namespace

TEST(Pipeline, OntologyResolutionOrder)
{
  ::unsetenv(kOntologyEnvVar);
  EXPECT_EQ(resolve_ontology_path(std::nullopt), default_ontology_path());
  EXPECT_EQ(resolve_ontology_path(std::string("flag.json")), "flag.json");
  ::setenv(kOntologyEnvVar, "env.json", 1);
  EXPECT_EQ(resolve_ontology_path(std::nullopt), "env.json");
  EXPECT_EQ(resolve_ontology_path(std::string("flag.json")), "flag.json");
  ::unsetenv(kOntologyEnvVar);
}

TEST(Pipeline, DefaultOntologyLoads)
{
  EXPECT_NO_THROW(load_ontology_file(default_ontology_path()));
}

TEST(Pipeline, LoadsSourceAndParseTreeDocuments)
{
  const TempDir dir;
  const auto src = dir.write("a.c", kSmall);
  const auto doc = dir.write("a.json", export_parse_tree_text(parse_source(kSmall)));
  EXPECT_EQ(load_program(src), load_program(doc));
  EXPECT_THROW(load_program(dir.file("missing.c")), IoError);
}

TEST(Pipeline, PsgRequiresOntology)
{
  EXPECT_THROW(representation_multiset(parse_source(kSmall), Representation::psg, {}, nullptr),
               std::invalid_argument);
}

TEST(Pipeline, ListCorpusSkipsHiddenFilesAndSorts)
{
  const TempDir dir;
  dir.write("b.c", kSmall);
  dir.write("a.c", kSmall);
  dir.write(".hidden.c", kSmall);
  std::filesystem::create_directory(dir.file("sub"));
  const auto files = list_corpus(dir.path());
  ASSERT_EQ(files.size(), 2u);
  EXPECT_EQ(std::filesystem::path(files[0]).filename(), "a.c");
  EXPECT_THROW(list_corpus(dir.file("nope")), IoError);
}

TEST(Pipeline, TwoFilesGiveOneRow)
{
  const TempDir dir;
  dir.write("a.c", kSmall);
  dir.write("b.c", "int g(int k) { return k + 1; }\n");
  const auto r = compare_corpus(list_corpus(dir.path()), Representation::spt, {}, nullptr);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].file_a, "a.c");
  EXPECT_EQ(r.rows[0].file_b, "b.c");
  EXPECT_TRUE(r.failures.empty());
}

TEST(Pipeline, ShippedCorpusGivesAllPairs)
{
  const auto files = test::corpus_files();
  ASSERT_EQ(files.size(), 4u);
  for (const auto rep : {Representation::spt, Representation::psg}) {
    const auto r = compare_corpus(files, rep, {}, &base());
    ASSERT_EQ(r.rows.size(), 6u);
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
      const auto & prev = r.rows[i - 1];
      const auto & cur = r.rows[i];
      EXPECT_LT(std::tie(prev.file_a, prev.file_b), std::tie(cur.file_a, cur.file_b));
    }
  }
}

TEST(Pipeline, CorpusRowsMatchPairwiseReports)
{
  const auto files = test::corpus_files();
  const auto r = compare_corpus(files, Representation::psg, {}, &base());
  std::size_t row = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    for (std::size_t j = i + 1; j < files.size(); ++j, ++row) {
      const auto a = representation_multiset(load_program(files[i]), Representation::psg, {}, &base());
      const auto b = representation_multiset(load_program(files[j]), Representation::psg, {}, &base());
      EXPECT_EQ(r.rows[row].report.average, similarity_report(a, b).average);
    }
  }
}

TEST(Pipeline, UnparsableFileIsReportedAndSkipped)
{
  const TempDir dir;
  dir.write("a.c", kSmall);
  dir.write("b.c", "int g(int k) { return k; }\n");
  dir.write("c.c", "int h( {\n");
  dir.write("d.c", "int z() { return 0; }\n");
  const auto r = compare_corpus(list_corpus(dir.path()), Representation::spt, {}, nullptr);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].file, "c.c");
  EXPECT_EQ(r.files.size(), 3u);
  EXPECT_EQ(r.rows.size(), 3u);
}

TEST(Pipeline, CorpusCsvIsStable)
{
  const auto files = test::corpus_files();
  const auto a = corpus_to_csv(compare_corpus(files, Representation::spt, {}, nullptr));
  const auto b = corpus_to_csv(compare_corpus(files, Representation::spt, {}, nullptr));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.substr(0, a.find('\n')), "file_a,file_b," + std::string(kReportCsvHeader));
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 7);
}
