#include "psgkit/file_io.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "psgkit/error.hpp"

namespace psgkit
{

std::string read_file(const std::string & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path + ": " + std::generic_category().message(errno));
  }
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) {
    throw IoError("error reading " + path);
  }
  return os.str();
}

void write_file(const std::string & path, std::string_view contents)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path + " for writing: " + std::generic_category().message(errno));
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) {
    throw IoError("error writing " + path);
  }
}

}  // namespace psgkit
