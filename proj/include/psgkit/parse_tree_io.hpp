// psgkit/parse_tree_io.hpp - external parse-tree documents
//
// A node is {"category": <name>, "token": <text>, "children": [...]}.
// "token" is present only on identifier-expression and literal-expression
// leaves. "children" interleaves inline tokens (JSON strings) with child
// nodes (JSON objects) in source order. Optional "line"/"column" carry the
// position of the node's first token. The root must be a translation-unit.
#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "psgkit/parse_tree.hpp"

namespace psgkit
{

nlohmann::json export_parse_tree(const ParseTree & tree);
std::string export_parse_tree_text(const ParseTree & tree);

/// Throws SchemaError naming the offending path.
ParseTree import_parse_tree(const nlohmann::json & document);
ParseTree import_parse_tree(std::string_view document);

}  // namespace psgkit
