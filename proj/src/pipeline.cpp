#include "psgkit/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>
#include <thread>

#include "psgkit/error.hpp"
#include "psgkit/file_io.hpp"
#include "psgkit/parse_tree_io.hpp"
#include "psgkit/parser.hpp"
#include "psgkit/psg.hpp"
#include "psgkit/serialize.hpp"

#ifndef PSGKIT_DEFAULT_ONTOLOGY
#define PSGKIT_DEFAULT_ONTOLOGY "data/base_ontology.json"
#endif

namespace psgkit
{

namespace fs = std::filesystem;

namespace
{

template <typename Fn>
void parallel_for(std::size_t count, Fn && fn)
{
  const std::size_t workers =
    std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        fn(i);
      }
    });
  }
}

std::string csv_field(const std::string & text)
{
  if (text.find_first_of(",\"\n") == std::string::npos) {
    return text;
  }
  std::string out = "\"";
  for (const char c : text) {
    out += c;
    if (c == '"') {
      out += '"';
    }
  }
  return out + "\"";
}

}  // namespace

std::string_view to_string(Representation rep)
{
  return rep == Representation::psg ? "psg" : "spt";
}

std::string default_ontology_path()
{
  return PSGKIT_DEFAULT_ONTOLOGY;
}

std::string resolve_ontology_path(const std::optional<std::string> & flag)
{
  if (flag && !flag->empty()) {
    return *flag;
  }
  if (const char * env = std::getenv(kOntologyEnvVar); env != nullptr && *env != '\0') {
    return env;
  }
  return default_ontology_path();
}

ParseTree load_program(const std::string & path)
{
  const std::string text = read_file(path);
  if (fs::path(path).extension() == ".json") {
    return import_parse_tree(std::string_view(text));
  }
  return parse_source(text);
}

LabelMultiset representation_multiset(
  const ParseTree & tree, Representation rep, const SptOptions & spt_options,
  const PslOntology * ontology)
{
  if (rep == Representation::spt) {
    return node_multiset(build_spt(tree, spt_options));
  }
  if (ontology == nullptr) {
    throw std::invalid_argument("PSG construction requires an ontology");
  }
  return node_multiset(build_psg(tree, *ontology));
}

std::vector<std::string> list_corpus(const std::string & dir)
{
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError("not a directory: " + dir);
  }
  std::vector<std::string> files;
  for (const auto & entry : fs::directory_iterator(dir, ec)) {
    const auto name = entry.path().filename().string();
    if (!name.empty() && name.front() != '.' && entry.is_regular_file()) {
      files.push_back(entry.path().string());
    }
  }
  if (ec) {
    throw IoError("cannot list " + dir + ": " + ec.message());
  }
  std::sort(files.begin(), files.end(), [](const std::string & a, const std::string & b) {
    return fs::path(a).filename().string() < fs::path(b).filename().string();
  });
  return files;
}

CorpusResult compare_corpus(
  const std::vector<std::string> & files, Representation rep, const SptOptions & spt_options,
  const PslOntology * ontology)
{
  std::vector<std::optional<LabelMultiset>> built(files.size());
  std::vector<std::string> errors(files.size());
  parallel_for(files.size(), [&](std::size_t i) {
    try {
      built[i] = representation_multiset(load_program(files[i]), rep, spt_options, ontology);
    } catch (const std::exception & e) {
      errors[i] = e.what();
    }
  });

  CorpusResult result;
  std::vector<const LabelMultiset *> ok;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const auto name = fs::path(files[i]).filename().string();
    if (built[i]) {
      result.files.push_back(name);
      ok.push_back(&*built[i]);
    } else {
      result.failures.push_back({name, errors[i]});
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < ok.size(); ++i) {
    for (std::size_t j = i + 1; j < ok.size(); ++j) {
      pairs.emplace_back(i, j);
    }
  }
  result.rows.resize(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    result.rows[p] =
      CorpusRow{result.files[i], result.files[j], similarity_report(*ok[i], *ok[j])};
  });
  return result;
}

std::string corpus_to_csv(const CorpusResult & result)
{
  std::ostringstream os;
  os << "file_a,file_b," << kReportCsvHeader << "\n";
  for (const auto & row : result.rows) {
    os << csv_field(row.file_a) << ',' << csv_field(row.file_b) << ','
       << report_to_csv_row(row.report) << "\n";
  }
  return os.str();
}

}  // namespace psgkit
