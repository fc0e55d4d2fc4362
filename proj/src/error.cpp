#include "psgkit/error.hpp"

#include <sstream>

namespace psgkit
{

namespace
{

std::string position_prefix(int line, int column)
{
  std::ostringstream os;
  os << line << ":" << column << ": ";
  return os.str();
}

std::string join(const std::vector<std::string> & items, const char * sep)
{
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) {
      out += sep;
    }
    out += items[i];
  }
  return out;
}

}  // namespace

LexError::LexError(int line, int column, std::string message)
: Error(position_prefix(line, column) + "lex error: " + message),
  line_(line),
  column_(column),
  detail_(std::move(message))
{
}

ParseError::ParseError(int line, int column, std::vector<std::string> expected, std::string found)
: Error(
    position_prefix(line, column) + "parse error: expected " + join(expected, " or ") + ", found " +
    found),
  line_(line),
  column_(column),
  expected_(std::move(expected)),
  found_(std::move(found))
{
}

SchemaError::SchemaError(std::string path, const std::string & message)
: Error("schema error at " + (path.empty() ? std::string("/") : path) + ": " + message),
  path_(std::move(path))
{
}

OntologyError::OntologyError(std::vector<std::string> violations)
: Error("ontology error: " + join(violations, "; ")), violations_(std::move(violations))
{
}

UnknownConcept::UnknownConcept(std::string id)
: Error("unknown concept: " + id), id_(std::move(id))
{
}

UnmappedCategory::UnmappedCategory(std::string category)
: Error("no ontology mapping for syntactic category: " + category), category_(std::move(category))
{
}

}  // namespace psgkit
