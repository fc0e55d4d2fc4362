#include "psgkit/serialize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "psgkit/error.hpp"

namespace psgkit
{

using nlohmann::json;

namespace
{

std::string dot_quote(std::string_view text)
{
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

struct LevelInfo
{
  std::string name;
  bool syntactic = false;
};

std::string psg_dot(const Psg & psg, const std::map<int, LevelInfo> & info)
{
  std::ostringstream os;
  os << "digraph psg {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, style=rounded];\n";
  std::map<int, std::vector<NodeId>> by_level;
  for (const auto & n : psg.nodes()) {
    by_level[n.level.value_or(0)].push_back(n.id);
  }
  for (const auto & [k, ids] : by_level) {
    const auto it = info.find(k);
    const LevelInfo level =
      it != info.end() ? it->second : LevelInfo{"level " + std::to_string(k), false};
    os << "  subgraph cluster_level_" << k << " {\n";
    os << "    label=" << dot_quote(level.name) << ";\n";
    os << "    class=" << (level.syntactic ? "\"syntactic\"" : "\"semantic\"") << ";\n";
    os << "    style=" << (level.syntactic ? "\"filled\"" : "\"solid\"") << ";\n";
    if (level.syntactic) {
      os << "    fillcolor=\"#eeeeee\";\n";
    }
    for (const auto id : ids) {
      const auto & n = psg.nodes()[id];
      os << "    n" << id << " [label=" << dot_quote(n.label.text())
         << ", tooltip=" << dot_quote("occurrences: " + std::to_string(n.occurrences)) << "];\n";
    }
    os << "  }\n";
  }
  for (const auto & e : psg.edges()) {
    os << "  n" << e.from << " -> n" << e.to << " [style="
       << (e.kind == EdgeKind::dependency_minimum ? "solid" : "dashed") << "];\n";
  }
  os << "}\n";
  return os.str();
}

// JSON field accessors that report SchemaError with a path.

const json & field(const json & obj, const char * key, const std::string & path)
{
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(path + "/" + key, "missing required field");
  }
  return *it;
}

std::size_t unsigned_field(const json & obj, const char * key, const std::string & path)
{
  const auto & v = field(obj, key, path);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw SchemaError(path + "/" + key, "must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::string string_field(const json & obj, const char * key, const std::string & path)
{
  const auto & v = field(obj, key, path);
  if (!v.is_string() || v.get<std::string>().empty()) {
    throw SchemaError(path + "/" + key, "must be a non-empty string");
  }
  return v.get<std::string>();
}

void reject_unknown(const json & obj, std::initializer_list<std::string_view> allowed,
                    const std::string & path)
{
  for (const auto & [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw SchemaError(path + "/" + key, "unexpected field");
    }
  }
}

json common_stats(const LabelMultiset & ms, std::size_t nodes, std::size_t edges)
{
  return json{
    {"nodes", nodes},
    {"edges", edges},
    {"multiset_cardinality", ms.cardinality()},
    {"distinct_labels", ms.distinct()}};
}

}  // namespace

std::string to_dot(const Spt & spt)
{
  std::ostringstream os;
  os << "digraph spt {\n";
  if (!spt.nodes().empty()) {
    os << "  node [shape=box];\n";
  }
  for (const auto & n : spt.nodes()) {
    os << "  n" << n.id << " [label=" << dot_quote(n.label.text()) << "];\n";
  }
  for (const auto & e : spt.edges()) {
    os << "  n" << e.from << " -> n" << e.to << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const Psg & psg)
{
  std::map<int, LevelInfo> info;
  int deepest = -1;
  for (const auto & n : psg.nodes()) {
    deepest = std::max(deepest, n.level.value_or(0));
  }
  for (const auto & n : psg.nodes()) {
    const int k = n.level.value_or(0);
    info[k] = LevelInfo{"level " + std::to_string(k), k == deepest};
  }
  return psg_dot(psg, info);
}

std::string to_dot(const Psg & psg, const PslOntology & o)
{
  std::map<int, LevelInfo> info;
  for (const auto & l : o.levels()) {
    info[l.k] = LevelInfo{l.name, l.kind == LevelKind::syntactic};
  }
  return psg_dot(psg, info);
}

json to_json_document(const Spt & spt)
{
  json nodes = json::array();
  for (const auto & n : spt.nodes()) {
    nodes.push_back({{"id", n.id}, {"label", n.label.text()}, {"occurrences", n.occurrences}});
  }
  json edges = json::array();
  for (const auto & e : spt.edges()) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"kind", std::string(to_string(e.kind))}});
  }
  json doc = json::object();
  doc["kind"] = "spt";
  doc["root"] = spt.root();
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  doc["stats"] = common_stats(node_multiset(spt), spt.size(), spt.edges().size());
  return doc;
}

json to_json_document(const Psg & psg)
{
  json nodes = json::array();
  std::map<std::string, std::size_t> per_level;
  for (const auto & n : psg.nodes()) {
    nodes.push_back({{"id", n.id},
                     {"label", n.label.text()},
                     {"level", n.level.value_or(0)},
                     {"occurrences", n.occurrences}});
    ++per_level[std::to_string(n.level.value_or(0))];
  }
  json edges = json::array();
  for (const auto & e : psg.edges()) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"kind", std::string(to_string(e.kind))}});
  }
  json doc = json::object();
  doc["kind"] = "psg";
  doc["ontology"] = psg.ontology_id();
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  json stats = common_stats(node_multiset(psg), psg.size(), psg.edges().size());
  stats["nodes_per_level"] = per_level;
  doc["stats"] = std::move(stats);
  return doc;
}

std::string to_json(const Spt & spt)
{
  return to_json_document(spt).dump(2) + "\n";
}

std::string to_json(const Psg & psg)
{
  return to_json_document(psg).dump(2) + "\n";
}

AnyGraph from_json_document(const json & doc)
{
  if (!doc.is_object()) {
    throw SchemaError("", "graph document must be an object");
  }
  const std::string kind = string_field(doc, "kind", "");
  if (kind != "spt" && kind != "psg") {
    throw SchemaError("/kind", "must be \"spt\" or \"psg\"");
  }
  const bool is_psg = kind == "psg";
  if (is_psg) {
    reject_unknown(doc, {"kind", "ontology", "nodes", "edges", "stats"}, "");
  } else {
    reject_unknown(doc, {"kind", "root", "nodes", "edges", "stats"}, "");
  }
  if (const auto it = doc.find("stats"); it != doc.end() && !it->is_object()) {
    throw SchemaError("/stats", "must be an object");
  }

  const auto & jnodes = field(doc, "nodes", "");
  if (!jnodes.is_array()) {
    throw SchemaError("/nodes", "must be an array");
  }
  std::vector<GraphNode> nodes;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < jnodes.size(); ++i) {
    const std::string path = "/nodes/" + std::to_string(i);
    const auto & jn = jnodes[i];
    if (!jn.is_object()) {
      throw SchemaError(path, "must be an object");
    }
    reject_unknown(jn, is_psg ? std::initializer_list<std::string_view>{"id", "label", "level", "occurrences"}
                              : std::initializer_list<std::string_view>{"id", "label", "occurrences"},
                   path);
    GraphNode node;
    node.id = unsigned_field(jn, "id", path);
    if (node.id != i) {
      throw SchemaError(path + "/id", "node ids must be 0..n-1 in order");
    }
    node.label = Label(string_field(jn, "label", path));
    node.occurrences = jn.contains("occurrences") ? unsigned_field(jn, "occurrences", path) : 1;
    if (node.occurrences == 0) {
      throw SchemaError(path + "/occurrences", "must be at least 1");
    }
    if (is_psg) {
      const auto & lv = field(jn, "level", path);
      if (!lv.is_number_integer()) {
        throw SchemaError(path + "/level", "must be an integer");
      }
      node.level = lv.get<int>();
      if (!labels.insert(node.label.text()).second) {
        throw SchemaError(path + "/label", "duplicate PSG label \"" + node.label.text() + "\"");
      }
    }
    nodes.push_back(std::move(node));
  }

  const auto & jedges = field(doc, "edges", "");
  if (!jedges.is_array()) {
    throw SchemaError("/edges", "must be an array");
  }
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i < jedges.size(); ++i) {
    const std::string path = "/edges/" + std::to_string(i);
    const auto & je = jedges[i];
    if (!je.is_object()) {
      throw SchemaError(path, "must be an object");
    }
    reject_unknown(je, {"from", "to", "kind"}, path);
    GraphEdge edge;
    edge.from = unsigned_field(je, "from", path);
    edge.to = unsigned_field(je, "to", path);
    if (edge.from >= nodes.size()) {
      throw SchemaError(path + "/from", "dangling endpoint " + std::to_string(edge.from));
    }
    if (edge.to >= nodes.size()) {
      throw SchemaError(path + "/to", "dangling endpoint " + std::to_string(edge.to));
    }
    const auto ek = edge_kind_from_string(string_field(je, "kind", path));
    if (!ek) {
      throw SchemaError(path + "/kind", "must be \"child\", \"minimum\" or \"potential\"");
    }
    if ((*ek == EdgeKind::child) == is_psg) {
      throw SchemaError(path + "/kind", is_psg ? "PSG edges must be dependency edges"
                                               : "SPT edges must be child edges");
    }
    edge.kind = *ek;
    edges.push_back(edge);
  }

  try {
    if (is_psg) {
      return Psg(std::move(nodes), std::move(edges), string_field(doc, "ontology", ""));
    }
    const NodeId root = nodes.empty() && !doc.contains("root") ? 0 : unsigned_field(doc, "root", "");
    return Spt(std::move(nodes), std::move(edges), root);
  } catch (const std::invalid_argument & e) {
    throw SchemaError("", e.what());
  }
}

AnyGraph from_json(std::string_view text)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error & e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return from_json_document(doc);
}

std::string report_to_text(const SimilarityReport & r, std::string_view title)
{
  const auto frac_pct = [](const Rational & q) {
    return to_fraction_string(q) + " (" + render_percent(q) + "%)";
  };
  std::ostringstream os;
  if (!title.empty()) {
    os << title << "\n";
  }
  os << "1. |N1| = " << r.n1_card << ", |N2| = " << r.n2_card << ", |I1| = " << r.i1_card
     << ", |I2| = " << r.i2_card << "\n";
  os << "2. P1 = |I1| / |N1| = " << frac_pct(r.p1) << ", P2 = |I2| / |N2| = " << frac_pct(r.p2)
     << "\n";
  os << "3. eta = |P1 - P2| = " << frac_pct(r.eta) << "\n";
  os << "4. L = |min(P1, P2) - eta| = " << frac_pct(r.lower) << "\n";
  os << "5. R = [L, min(P1, P2)] = [" << to_fraction_string(r.range_lo) << ", "
     << to_fraction_string(r.range_hi) << "] = [" << r.range_lo_pct << "%, " << r.range_hi_pct
     << "%]\n";
  os << "   A = (L + min(P1, P2)) / 2 = " << to_fraction_string(r.average) << " = "
     << r.average_pct << "% (exact " << render_percent(r.average, 4) << "%)\n";
  return os.str();
}

std::string report_to_csv_row(const SimilarityReport & r)
{
  std::ostringstream os;
  os << r.n1_card << ',' << r.n2_card << ',' << r.i1_card << ',' << r.i2_card << ',' << r.p1_pct
     << ',' << r.p2_pct << ',' << r.eta_pct << ',' << r.lower_pct << ',' << r.range_lo_pct << ','
     << r.range_hi_pct << ',' << r.average_pct;
  return os.str();
}

std::string report_to_csv(const SimilarityReport & r)
{
  return std::string(kReportCsvHeader) + "\n" + report_to_csv_row(r) + "\n";
}

json report_to_json(const SimilarityReport & r)
{
  const auto q = [](const Rational & x) {
    return json{{"fraction", to_fraction_string(x)}, {"percent", render_percent(x)}};
  };
  json avg = q(r.average);
  avg["percent"] = r.average_pct;
  avg["percent_exact"] = render_percent(r.average, 4);
  return json{
    {"n1", r.n1_card},
    {"n2", r.n2_card},
    {"i1", r.i1_card},
    {"i2", r.i2_card},
    {"p1", q(r.p1)},
    {"p2", q(r.p2)},
    {"eta", q(r.eta)},
    {"lower", q(r.lower)},
    {"range", json::array({q(r.range_lo), q(r.range_hi)})},
    {"average", std::move(avg)}};
}

}  // namespace psgkit
