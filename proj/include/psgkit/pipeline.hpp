// psgkit/pipeline.hpp - file-to-report plumbing shared by the CLI and tests
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psgkit/graph.hpp"
#include "psgkit/ontology.hpp"
#include "psgkit/parse_tree.hpp"
#include "psgkit/similarity.hpp"
#include "psgkit/spt.hpp"

namespace psgkit
{

enum class Representation { spt, psg };

std::string_view to_string(Representation rep);

/// Environment variable consulted when no --ontology flag is given.
inline constexpr const char * kOntologyEnvVar = "PSGKIT_ONTOLOGY";

/// Path of the base ontology shipped with the sources.
std::string default_ontology_path();

/// Flag value, else $PSGKIT_ONTOLOGY, else the shipped default.
std::string resolve_ontology_path(const std::optional<std::string> & flag);

/// Reads a program: "*.json" files are imported parse-tree documents, any
/// other file is source text. Throws IoError, LexError, ParseError or
/// SchemaError.
ParseTree load_program(const std::string & path);

/// Node multiset of the requested representation. `ontology` is required
/// for Representation::psg.
LabelMultiset representation_multiset(
  const ParseTree & tree, Representation rep, const SptOptions & spt_options,
  const PslOntology * ontology);

struct CorpusRow
{
  std::string file_a;
  std::string file_b;
  SimilarityReport report;
};

struct CorpusFailure
{
  std::string file;
  std::string message;
};

struct CorpusResult
{
  std::vector<std::string> files;  // successfully built, lexicographic order
  std::vector<CorpusRow> rows;     // one per unordered pair, i < j
  std::vector<CorpusFailure> failures;
};

/// Regular, non-hidden files directly inside `dir`, sorted by file name.
/// Throws IoError when `dir` is not a readable directory.
std::vector<std::string> list_corpus(const std::string & dir);

/// Builds every file, then compares every unordered pair. Work runs on a
/// thread pool; row order is fixed by file order regardless of scheduling.
CorpusResult compare_corpus(
  const std::vector<std::string> & files, Representation rep, const SptOptions & spt_options,
  const PslOntology * ontology);

/// `file_a,file_b,` followed by the report columns; '\n' line endings.
std::string corpus_to_csv(const CorpusResult & result);

}  // namespace psgkit
