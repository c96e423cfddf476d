#include "glyphgraph/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>

#include "json.hpp"

#include "glyphgraph/errors.hpp"

namespace glyphgraph {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw FormatError("input is not valid JSON");
  return doc;
}

double require_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw FormatError(path + ": expected a number");
  return v.get<double>();
}

std::string require_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw FormatError(path + ": expected a string");
  return v.get<std::string>();
}

const json& require_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw FormatError(path + ": expected an array");
  return v;
}

std::optional<Point> parse_anchor(const json& v, const std::string& path) {
  if (v.is_null()) return std::nullopt;
  const json& arr = require_array(v, path);
  if (arr.size() != 2) throw FormatError(path + ": expected [x, y]");
  return Point{require_number(arr[0], path + "[0]"),
               require_number(arr[1], path + "[1]")};
}

NodeSpec parse_node_entry(const json& v, const std::string& path) {
  if (!v.is_object()) throw FormatError(path + ": expected an object");
  NodeSpec spec;
  if (auto it = v.find("anchor"); it != v.end()) {
    spec.anchor = parse_anchor(*it, path + ".anchor");
  }
  auto list_it = v.find("list");
  if (list_it == v.end()) throw FormatError(path + ".list: missing");
  const json& list = require_array(*list_it, path + ".list");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string item_path = path + ".list[" + std::to_string(i) + "]";
    const json& item = list[i];
    if (i % 2 == 1) {
      spec.angles_deg.push_back(require_number(item, item_path));
      continue;
    }
    NodeSpec::Arm arm;
    if (item.is_object()) {
      auto len_it = item.find("len");
      if (len_it == item.end()) throw FormatError(item_path + ".len: missing");
      arm.length = require_number(*len_it, item_path + ".len");
      if (auto tag_it = item.find("tag");
          tag_it != item.end() && !tag_it->is_null()) {
        arm.tag = require_string(*tag_it, item_path + ".tag");
      }
    } else {
      arm.length = require_number(item, item_path);
    }
    spec.arms.push_back(std::move(arm));
  }
  if (list.size() % 2 == 0) {
    throw FormatError(path + ".list: must alternate length, angle, length "
                             "and end in a length");
  }
  check_node_spec(spec, path);
  return spec;
}

std::string escape_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string anchor_text(const std::optional<Point>& anchor) {
  if (!anchor) return "null";
  return "[" + format_number(anchor->x) + ", " + format_number(anchor->y) + "]";
}

std::string node_entry_text(const NodeSpec& spec) {
  std::string out = "{\"anchor\": " + anchor_text(spec.anchor) + ", \"list\": [";
  for (std::size_t i = 0; i < spec.arms.size(); ++i) {
    if (i > 0) out += ", " + format_number(spec.angles_deg[i - 1]) + ", ";
    const auto& arm = spec.arms[i];
    if (arm.tag) {
      out += "{\"len\": " + format_number(arm.length) + ", \"tag\": " +
             escape_string(*arm.tag) + "}";
    } else {
      out += format_number(arm.length);
    }
  }
  return out + "]}";
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

Document parse_document(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw FormatError("$: expected an object");
  Document out;
  auto name_it = doc.find("name");
  if (name_it == doc.end()) throw FormatError("$.name: missing");
  out.name = require_string(*name_it, "$.name");
  auto nodes_it = doc.find("nodes");
  if (nodes_it == doc.end()) throw FormatError("$.nodes: missing");
  const json& nodes = require_array(*nodes_it, "$.nodes");
  if (nodes.empty()) throw FormatError("$.nodes: must not be empty");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out.nodes.push_back(
        parse_node_entry(nodes[i], "$.nodes[" + std::to_string(i) + "]"));
  }

  std::map<std::string, int> named_uses;
  for (const auto& spec : out.nodes) {
    for (const auto& arm : spec.arms) {
      if (arm.tag && !arm.tag->starts_with('_')) ++named_uses[*arm.tag];
    }
  }
  for (const auto& [tag, uses] : named_uses) {
    if (uses > 2) {
      throw FormatError("$.nodes: tag '" + tag + "' occurs " +
                        std::to_string(uses) +
                        " times; a line has at most two halves");
    }
  }
  return out;
}

std::string serialize_document(const Document& doc) {
  std::string out = "{\n  \"name\": " + escape_string(doc.name) +
                    ",\n  \"nodes\": [\n";
  for (std::size_t i = 0; i < doc.nodes.size(); ++i) {
    out += "    " + node_entry_text(doc.nodes[i]);
    if (i + 1 < doc.nodes.size()) out += ",";
    out += "\n";
  }
  out += "  ]\n}\n";
  return out;
}

LineListDoc parse_graph_doc(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw FormatError("$: expected an object");
  LineListDoc out;
  if (auto it = doc.find("name"); it != doc.end()) {
    out.name = require_string(*it, "$.name");
  }
  auto lines_it = doc.find("lines");
  if (lines_it == doc.end()) throw FormatError("$.lines: missing");
  const json& lines = require_array(*lines_it, "$.lines");

  std::map<long, NodeId> ids;
  const auto node_for = [&](long raw) {
    auto it = ids.find(raw);
    if (it != ids.end()) return it->second;
    NodeId fresh = out.graph.add_node();
    ids.emplace(raw, fresh);
    return fresh;
  };

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string path = "$.lines[" + std::to_string(i) + "]";
    const json& entry = lines[i];
    if (!entry.is_object()) throw FormatError(path + ": expected an object");
    const auto field = [&](const char* key) -> const json& {
      auto it = entry.find(key);
      if (it == entry.end()) {
        throw FormatError(path + "." + key + ": missing");
      }
      return *it;
    };
    const json& from = field("from");
    const json& to = field("to");
    if (!from.is_number_integer() || !to.is_number_integer()) {
      throw FormatError(path + ": from/to must be integer node ids");
    }
    const double len = require_number(field("len"), path + ".len");
    const double angle = require_number(field("angle"), path + ".angle");
    std::optional<std::string> tag;
    if (auto it = entry.find("tag"); it != entry.end() && !it->is_null()) {
      tag = require_string(*it, path + ".tag");
    }
    const NodeId a = node_for(from.get<long>());
    const NodeId b = node_for(to.get<long>());
    try {
      out.graph.add_line(a, b, len, angle, std::move(tag));
    } catch (const DomainError& e) {
      throw FormatError(path + ": " + e.what());
    }
  }

  if (auto it = doc.find("coords"); it != doc.end() && !it->is_null()) {
    if (!it->is_object()) throw FormatError("$.coords: expected an object");
    for (const auto& [key, value] : it->items()) {
      const std::string path = "$.coords[\"" + key + "\"]";
      char* end = nullptr;
      const long raw = std::strtol(key.c_str(), &end, 10);
      if (end == key.c_str() || *end != '\0' || !ids.count(raw)) {
        throw FormatError(path + ": unknown node id");
      }
      auto p = parse_anchor(value, path);
      if (!p) throw FormatError(path + ": expected [x, y]");
      out.graph.bind(ids.at(raw), *p);
    }
  }

  std::map<std::string, int> named_uses;
  for (const auto& line : out.graph.lines()) {
    if (line.tag && !line.tag->starts_with('_')) ++named_uses[*line.tag];
  }
  for (const auto& [tag, uses] : named_uses) {
    if (uses > 2) {
      throw FormatError("$.lines: tag '" + tag + "' occurs " +
                        std::to_string(uses) +
                        " times; a line has at most two halves");
    }
  }
  return out;
}

Graph parse_graph(const std::string& text) {
  return parse_graph_doc(text).graph;
}

std::string serialize_graph(const Graph& g, const std::string& name,
                            bool compact) {
  // Renumber nodes by first appearance so equal graphs serialize equally.
  std::map<NodeId, long> renumber;
  std::vector<NodeId> order;
  const auto visit = [&](NodeId n) {
    if (renumber.emplace(n, static_cast<long>(renumber.size())).second) {
      order.push_back(n);
    }
  };
  for (const auto& line : g.lines()) {
    visit(line.start);
    visit(line.end);
  }
  for (NodeId n : g.nodes()) visit(n);

  const std::string nl = compact ? "" : "\n";
  const std::string pad = compact ? "" : "  ";
  const std::string pad2 = compact ? "" : "    ";

  std::string out = "{" + nl + pad + "\"name\": " + escape_string(name) + "," +
                    nl + pad + "\"lines\": [" + nl;
  const auto& lines = g.lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out += pad2 + "{\"from\": " + std::to_string(renumber.at(lines[i].start)) +
           ", \"to\": " + std::to_string(renumber.at(lines[i].end)) +
           ", \"len\": " + format_number(lines[i].length) +
           ", \"angle\": " + format_number(lines[i].angle_deg);
    if (lines[i].tag) out += ", \"tag\": " + escape_string(*lines[i].tag);
    out += "}";
    if (i + 1 < lines.size()) out += compact ? ", " : ",";
    out += nl;
  }
  out += pad + "]";
  if (g.fully_resolved() && !order.empty()) {
    out += "," + nl + pad + "\"coords\": {" + nl;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Point p = *g.coord(order[i]);
      out += pad2 + "\"" + std::to_string(renumber.at(order[i])) + "\": [" +
             format_number(p.x) + ", " + format_number(p.y) + "]";
      if (i + 1 < order.size()) out += compact ? ", " : ",";
      out += nl;
    }
    out += pad + "}";
  }
  out += nl + "}\n";
  return out;
}

bool is_document_json(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw FormatError("$: expected an object");
  if (doc.contains("nodes")) return true;
  if (doc.contains("lines")) return false;
  throw FormatError("$: expected either a \"nodes\" or a \"lines\" document");
}

MotifPattern parse_pattern(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw FormatError("$: expected an object");
  MotifPattern out;
  auto name_it = doc.find("name");
  if (name_it == doc.end()) throw FormatError("$.name: missing");
  out.name = require_string(*name_it, "$.name");
  auto lines_it = doc.find("lines");
  if (lines_it == doc.end()) throw FormatError("$.lines: missing");
  const json& lines = require_array(*lines_it, "$.lines");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string path = "$.lines[" + std::to_string(i) + "]";
    const json& entry = lines[i];
    if (!entry.is_object()) throw FormatError(path + ": expected an object");
    PatternLine line;
    auto get = [&](const char* key) -> const json& {
      auto it = entry.find(key);
      if (it == entry.end()) throw FormatError(path + "." + key + ": missing");
      return *it;
    };
    line.from = require_string(get("from"), path + ".from");
    line.to = require_string(get("to"), path + ".to");
    line.proportion = require_number(get("prop"), path + ".prop");
    line.angle_deg = require_number(get("angle"), path + ".angle");
    if (std::find(out.symbols.begin(), out.symbols.end(), line.from) ==
        out.symbols.end()) {
      out.symbols.push_back(line.from);
    }
    if (std::find(out.symbols.begin(), out.symbols.end(), line.to) ==
        out.symbols.end()) {
      out.symbols.push_back(line.to);
    }
    out.lines.push_back(std::move(line));
  }
  return out;
}

NodeCorpus parse_corpus(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw FormatError("$: expected an object");
  NodeCorpus out;
  for (const auto& [key, target] :
       {std::pair<const char*, std::vector<NodeSpec>*>{"primary", &out.primary},
        {"other", &out.other}}) {
    auto it = doc.find(key);
    if (it == doc.end()) {
      throw FormatError(std::string("$.") + key + ": missing");
    }
    const json& arr = require_array(*it, std::string("$.") + key);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      target->push_back(parse_node_entry(
          arr[i], std::string("$.") + key + "[" + std::to_string(i) + "]"));
    }
  }
  if (out.primary.empty() || out.other.empty()) {
    throw FormatError("$: corpus needs non-empty primary and other lists");
  }
  return out;
}

}  // namespace glyphgraph
