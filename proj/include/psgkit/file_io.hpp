#pragma once

#include <string>
#include <string_view>

namespace psgkit
{

/// Whole-file read; throws IoError.
std::string read_file(const std::string & path);
/// Whole-file write (truncating); throws IoError.
void write_file(const std::string & path, std::string_view contents);

}  // namespace psgkit
