#include "psgkit/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "psgkit/error.hpp"
#include "psgkit/file_io.hpp"
#include "psgkit/parse_tree_io.hpp"
#include "psgkit/pipeline.hpp"
#include "psgkit/psg.hpp"
#include "psgkit/serialize.hpp"
#include "psgkit/spt.hpp"

namespace psgkit
{

namespace
{

enum class Format { text, json, dot, csv };

struct RunConfig
{
  Representation rep = Representation::spt;
  std::optional<std::string> ontology;
  std::optional<Format> format;
  PlaceholderMode placeholders = PlaceholderMode::fine;
  bool delimiter_leaves = false;
  std::optional<std::string> out_path;
  std::vector<std::string> inputs;
};

struct UsageError : Error
{
  using Error::Error;
};

// Raised for ontology problems so they map to their own exit code even when
// the underlying exception type (SchemaError, IoError) is shared.
struct OntologyLoadError : Error
{
  using Error::Error;
};

class Commands
{
public:
  Commands(const RunConfig & cfg, std::ostream & out, std::ostream & err)
  : cfg_(cfg), out_(out), err_(err)
  {
  }

  int parse_cmd()
  {
    require_format({Format::json}, Format::json, "parse");
    emit(export_parse_tree_text(load(cfg_.inputs.at(0))));
    return kExitOk;
  }

  int build_cmd()
  {
    const Format format = require_format({Format::json, Format::dot, Format::text}, Format::json, "build");
    const ParseTree tree = load(cfg_.inputs.at(0));
    if (cfg_.rep == Representation::spt) {
      const Spt spt = build_spt(tree, spt_options());
      if (format == Format::dot) {
        emit(to_dot(spt));
      } else if (format == Format::json) {
        emit(to_json(spt));
      } else {
        emit(summary(node_multiset(spt), spt.size(), spt.edges().size()));
      }
      return kExitOk;
    }
    const PslOntology & o = ontology();
    const Psg psg = build_psg(tree, o);
    if (format == Format::dot) {
      emit(to_dot(psg, o));
    } else if (format == Format::json) {
      emit(to_json(psg));
    } else {
      emit(summary(node_multiset(psg), psg.size(), psg.edges().size()));
    }
    return kExitOk;
  }

  int compare_cmd()
  {
    const Format format =
      require_format({Format::text, Format::csv, Format::json}, Format::text, "compare");
    const PslOntology * o = cfg_.rep == Representation::psg ? &ontology() : nullptr;
    const auto a = representation_multiset(load(cfg_.inputs.at(0)), cfg_.rep, spt_options(), o);
    const auto b = representation_multiset(load(cfg_.inputs.at(1)), cfg_.rep, spt_options(), o);
    const auto report = similarity_report(a, b);
    if (format == Format::csv) {
      emit(report_to_csv(report));
    } else if (format == Format::json) {
      auto doc = report_to_json(report);
      doc["representation"] = std::string(to_string(cfg_.rep));
      doc["file_a"] = cfg_.inputs.at(0);
      doc["file_b"] = cfg_.inputs.at(1);
      emit(doc.dump(2) + "\n");
    } else {
      emit(report_to_text(
        report, "Structural similarity (" + std::string(to_string(cfg_.rep)) + "): " +
                  cfg_.inputs.at(0) + " vs " + cfg_.inputs.at(1)));
    }
    return kExitOk;
  }

  int corpus_cmd()
  {
    const Format format = require_format({Format::csv, Format::json}, Format::csv, "corpus");
    const auto files = list_corpus(cfg_.inputs.at(0));
    const PslOntology * o = cfg_.rep == Representation::psg ? &ontology() : nullptr;
    const auto result = compare_corpus(files, cfg_.rep, spt_options(), o);
    for (const auto & f : result.failures) {
      err_ << f.file << ": " << f.message << "\n";
    }
    if (format == Format::json) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto & row : result.rows) {
        auto r = report_to_json(row.report);
        r["file_a"] = row.file_a;
        r["file_b"] = row.file_b;
        rows.push_back(std::move(r));
      }
      nlohmann::json failed = nlohmann::json::array();
      for (const auto & f : result.failures) {
        failed.push_back({{"file", f.file}, {"error", f.message}});
      }
      emit(nlohmann::json{{"representation", std::string(to_string(cfg_.rep))},
                          {"files", result.files},
                          {"pairs", std::move(rows)},
                          {"failures", std::move(failed)}}
             .dump(2) +
           "\n");
    } else {
      emit(corpus_to_csv(result));
    }
    return result.failures.empty() ? kExitOk : kExitPartialCorpus;
  }

private:
  Format require_format(std::initializer_list<Format> allowed, Format fallback, const char * cmd)
  {
    const Format f = cfg_.format.value_or(fallback);
    for (const auto a : allowed) {
      if (a == f) {
        return f;
      }
    }
    throw UsageError(std::string("format not supported by ") + cmd);
  }

  SptOptions spt_options() const { return SptOptions{cfg_.placeholders, cfg_.delimiter_leaves}; }

  ParseTree load(const std::string & path)
  {
    try {
      return load_program(path);
    } catch (const Error & e) {
      if (dynamic_cast<const IoError *>(&e) != nullptr) {
        throw;
      }
      // Prefix the location with the file name, compiler style.
      throw_with_path(path, e);
    }
  }

  [[noreturn]] static void throw_with_path(const std::string & path, const Error & e)
  {
    if (dynamic_cast<const LexError *>(&e) || dynamic_cast<const ParseError *>(&e) ||
        dynamic_cast<const SchemaError *>(&e)) {
      throw ParseFailure(path + ":" + e.what());
    }
    throw;
  }

public:
  struct ParseFailure : Error
  {
    using Error::Error;
  };

private:
  const PslOntology & ontology()
  {
    if (!ontology_) {
      const std::string path = resolve_ontology_path(cfg_.ontology);
      try {
        ontology_ = load_ontology_file(path);
      } catch (const Error & e) {
        throw OntologyLoadError(path + ": " + e.what());
      }
    }
    return *ontology_;
  }

  static std::string summary(const LabelMultiset & ms, std::size_t nodes, std::size_t edges)
  {
    std::ostringstream os;
    os << "nodes: " << nodes << "\nedges: " << edges << "\nmultiset cardinality: "
       << ms.cardinality() << "\nlabels:\n";
    for (const auto & [label, count] : ms.entries()) {
      os << "  " << count << "  " << label.text() << "\n";
    }
    return os.str();
  }

  void emit(const std::string & text)
  {
    if (cfg_.out_path) {
      write_file(*cfg_.out_path, text);
    } else {
      out_ << text;
    }
  }

  const RunConfig & cfg_;
  std::ostream & out_;
  std::ostream & err_;
  std::optional<PslOntology> ontology_;
};

}  // namespace

int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
  RunConfig cfg;
  CLI::App app{"Program-derived semantics graphs, simplified parse trees, and overlap similarity",
               args.empty() ? "psgkit" : args.front()};
  app.require_subcommand(1);
  app.fallthrough();

  const std::map<std::string, Representation> reps{
    {"spt", Representation::spt}, {"psg", Representation::psg}};
  const std::map<std::string, Format> formats{
    {"text", Format::text}, {"json", Format::json}, {"dot", Format::dot}, {"csv", Format::csv}};
  const std::map<std::string, PlaceholderMode> modes{
    {"coarse", PlaceholderMode::coarse}, {"fine", PlaceholderMode::fine}};
  const std::map<std::string, bool> on_off{{"on", true}, {"off", false}};

  std::string rep = "spt";
  std::string format;
  std::string placeholders = "fine";
  std::string delimiters = "off";
  std::string ontology;
  std::string out_path;
  app.add_option("--rep", rep, "Representation: spt or psg")->check(CLI::IsMember(reps));
  app.add_option("--ontology", ontology, "Ontology JSON (default: $PSGKIT_ONTOLOGY or shipped base)");
  app.add_option("--format", format, "Output format: text, json, dot or csv")
    ->check(CLI::IsMember(formats));
  app.add_option("--spt-placeholders", placeholders, "SPT placeholder classes: coarse or fine")
    ->check(CLI::IsMember(modes));
  app.add_option("--spt-delimiters", delimiters, "Emit ( ) { } , ; as SPT leaves: on or off")
    ->check(CLI::IsMember(on_off));
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  auto * parse = app.add_subcommand("parse", "Emit the parse tree of a source file as JSON");
  parse->add_option("file", cfg.inputs, "Source file")->required()->expected(1);
  auto * build = app.add_subcommand("build", "Build an SPT or PSG and serialize it");
  build->add_option("file", cfg.inputs, "Source file or parse-tree JSON")->required()->expected(1);
  auto * compare = app.add_subcommand("compare", "Similarity report for two programs");
  compare->add_option("files", cfg.inputs, "Two programs")->required()->expected(2);
  auto * corpus = app.add_subcommand("corpus", "Pairwise similarity over a directory");
  corpus->add_option("dir", cfg.inputs, "Corpus directory")->required()->expected(1);

  std::vector<std::string> argv_tail(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError & e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  cfg.rep = reps.at(rep);
  if (!format.empty()) {
    cfg.format = formats.at(format);
  }
  cfg.placeholders = modes.at(placeholders);
  cfg.delimiter_leaves = on_off.at(delimiters);
  if (!ontology.empty()) {
    cfg.ontology = ontology;
  }
  if (!out_path.empty()) {
    cfg.out_path = out_path;
  }

  Commands cmds(cfg, out, err);
  try {
    if (*parse) {
      return cmds.parse_cmd();
    }
    if (*build) {
      return cmds.build_cmd();
    }
    if (*compare) {
      return cmds.compare_cmd();
    }
    return cmds.corpus_cmd();
  } catch (const UsageError & e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError & e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Commands::ParseFailure & e) {
    err << e.what() << "\n";
    return kExitParse;
  } catch (const OntologyLoadError & e) {
    err << "error: " << e.what() << "\n";
    return kExitOntology;
  } catch (const UnmappedCategory & e) {
    err << "error: " << e.what() << "\n";
    return kExitOntology;
  } catch (const std::exception & e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace psgkit
