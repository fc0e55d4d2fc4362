// psgkit/error.hpp - exception hierarchy shared by all modules
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace psgkit
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public Error
{
public:
  using Error::Error;
};

/// Unrecognized character in source text.
class LexError : public Error
{
public:
  LexError(int line, int column, std::string message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string & detail() const noexcept { return detail_; }

private:
  int line_;
  int column_;
  std::string detail_;
};

/// Grammar violation. `expected` lists what the parser would have accepted.
class ParseError : public Error
{
public:
  ParseError(int line, int column, std::vector<std::string> expected, std::string found);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::vector<std::string> & expected() const noexcept { return expected_; }
  const std::string & found() const noexcept { return found_; }

private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Malformed structured document; `path` is a JSON-pointer-like location.
class SchemaError : public Error
{
public:
  SchemaError(std::string path, const std::string & message);

  const std::string & path() const noexcept { return path_; }

private:
  std::string path_;
};

/// An ontology document that parsed but violates a structural invariant.
class OntologyError : public Error
{
public:
  explicit OntologyError(std::vector<std::string> violations);

  const std::vector<std::string> & violations() const noexcept { return violations_; }

private:
  std::vector<std::string> violations_;
};

class UnknownConcept : public Error
{
public:
  explicit UnknownConcept(std::string id);

  const std::string & id() const noexcept { return id_; }

private:
  std::string id_;
};

class UnmappedCategory : public Error
{
public:
  explicit UnmappedCategory(std::string category);

  const std::string & category() const noexcept { return category_; }

private:
  std::string category_;
};

}  // namespace psgkit
