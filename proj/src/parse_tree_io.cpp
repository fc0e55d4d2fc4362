#include "psgkit/parse_tree_io.hpp"

#include "psgkit/error.hpp"

namespace psgkit
{

using nlohmann::json;

namespace
{

json export_node(const ParseTree & tree, ParseIndex i)
{
  const auto & node = tree.node(i);
  json out = json::object();
  out["category"] = std::string(to_string(node.category));
  if (node.leaf) {
    out["token"] = node.leaf->text;
  }
  json children = json::array();
  for (const auto & item : node.items) {
    if (const auto * tok = std::get_if<Token>(&item)) {
      children.push_back(tok->text);
    } else {
      children.push_back(export_node(tree, std::get<ParseIndex>(item)));
    }
  }
  out["children"] = std::move(children);
  if (node.line > 0) {
    out["line"] = node.line;
    out["column"] = node.column;
  }
  return out;
}

std::string allowed_categories()
{
  std::string out;
  for (const auto c : all_categories()) {
    if (!out.empty()) {
      out += ", ";
    }
    out += to_string(c);
  }
  return out;
}

class Importer
{
public:
  ParseTree run(const json & doc) &&
  {
    const ParseIndex root = node(doc, "");
    if (b_.at(root).category != Category::translation_unit) {
      throw SchemaError("/category", "root must be a translation-unit");
    }
    return std::move(b_).finish(root);
  }

private:
  static int position(const json & doc, const char * key, const std::string & path)
  {
    const auto it = doc.find(key);
    if (it == doc.end()) {
      return 0;
    }
    if (!it->is_number_integer() || it->get<long long>() < 0) {
      throw SchemaError(path + "/" + key, "must be a non-negative integer");
    }
    return static_cast<int>(it->get<long long>());
  }

  ParseIndex node(const json & doc, const std::string & path)
  {
    if (!doc.is_object()) {
      throw SchemaError(path, "parse-tree node must be an object");
    }
    const auto cat_it = doc.find("category");
    if (cat_it == doc.end()) {
      throw SchemaError(path + "/category", "missing required field");
    }
    if (!cat_it->is_string()) {
      throw SchemaError(path + "/category", "must be a string");
    }
    const auto category = category_from_string(cat_it->get<std::string>());
    if (!category) {
      throw SchemaError(path + "/category", "unknown category \"" + cat_it->get<std::string>() +
                                              "\"; allowed: " + allowed_categories());
    }
    for (const auto & [key, value] : doc.items()) {
      if (key != "category" && key != "token" && key != "children" && key != "line" &&
          key != "column") {
        throw SchemaError(path + "/" + key, "unexpected field");
      }
    }
    const ParseIndex idx =
      b_.add(*category, position(doc, "line", path), position(doc, "column", path));

    const auto tok_it = doc.find("token");
    if (is_leaf_category(*category)) {
      if (tok_it == doc.end() || !tok_it->is_string()) {
        throw SchemaError(path + "/token", "leaf category requires a string token");
      }
      const auto text = tok_it->get<std::string>();
      const auto kind = classify_token_text(text);
      const bool ok = *category == Category::identifier_expression
                        ? kind == TokenKind::identifier
                        : kind == TokenKind::int_literal || kind == TokenKind::float_literal;
      if (!ok) {
        throw SchemaError(path + "/token", "\"" + text + "\" is not a valid token for " +
                                             std::string(to_string(*category)));
      }
      b_.set_leaf(idx, Token{*kind, text, b_.at(idx).line, b_.at(idx).column});
    } else if (tok_it != doc.end()) {
      throw SchemaError(path + "/token", "only leaf categories carry a token");
    }

    const auto ch_it = doc.find("children");
    if (ch_it == doc.end()) {
      return idx;
    }
    if (!ch_it->is_array()) {
      throw SchemaError(path + "/children", "must be an array");
    }
    if (is_leaf_category(*category) && !ch_it->empty()) {
      throw SchemaError(path + "/children", "leaf category cannot have children");
    }
    for (std::size_t i = 0; i < ch_it->size(); ++i) {
      const auto & child = (*ch_it)[i];
      const std::string child_path = path + "/children/" + std::to_string(i);
      if (child.is_string()) {
        const auto text = child.get<std::string>();
        const auto kind = classify_token_text(text);
        if (!kind || *kind == TokenKind::int_literal || *kind == TokenKind::float_literal) {
          throw SchemaError(child_path, "\"" + text + "\" is not a valid inline token");
        }
        b_.append_token(idx, Token{*kind, text, 0, 0});
      } else {
        const ParseIndex c = node(child, child_path);
        if (b_.at(c).category == Category::translation_unit) {
          throw SchemaError(child_path + "/category", "translation-unit may only be the root");
        }
        b_.append_child(idx, c);
      }
    }
    return idx;
  }

  ParseTree::Builder b_;
};

}  // namespace

json export_parse_tree(const ParseTree & tree)
{
  return export_node(tree, 0);
}

std::string export_parse_tree_text(const ParseTree & tree)
{
  return export_parse_tree(tree).dump(2) + "\n";
}

ParseTree import_parse_tree(const json & document)
{
  return Importer{}.run(document);
}

ParseTree import_parse_tree(std::string_view document)
{
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error & e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return import_parse_tree(doc);
}

}  // namespace psgkit
