#ifndef GLYPHGRAPH_IO_HPP
#define GLYPHGRAPH_IO_HPP

#include <string>

#include "glyphgraph/generator.hpp"
#include "glyphgraph/graph.hpp"
#include "glyphgraph/matcher.hpp"

namespace glyphgraph {

// Mark documents: {"name": str, "nodes": [{"anchor": [x,y]|null,
// "list": [2,90,{"len":1,"tag":"I"},90,2]}, ...]}. Plain numbers alternate
// between lengths and angles; an object is a tagged length. Tag names
// starting with '_' are anonymous half-line identifiers.
Document parse_document(const std::string& text);

// Canonical form: 2-space indent, fixed key order, numbers with 9
// significant digits. parse/serialize round-trip to a fixpoint.
std::string serialize_document(const Document& doc);

// Explicit line-list graphs: {"name": str, "lines": [{"from": 0, "to": 1,
// "len": 2, "angle": 90, "tag": "I"?}, ...], "coords": {"0": [x,y], ...}?}.
struct LineListDoc {
  std::string name;
  Graph graph;
};
LineListDoc parse_graph_doc(const std::string& text);
Graph parse_graph(const std::string& text);

// Nodes are renumbered by first appearance; coords emitted only when every
// node is bound. Compact form is a single line, for JSONL streams.
std::string serialize_graph(const Graph& g, const std::string& name,
                            bool compact = false);

// True when the JSON document uses the node-centric "nodes" form rather
// than the "lines" form.
bool is_document_json(const std::string& text);

// Motif patterns: {"name": str, "lines": [{"from": "A", "to": "B",
// "prop": 1, "angle": 90}, ...]}.
MotifPattern parse_pattern(const std::string& text);

// Corpora: {"primary": [NodeSpec...], "other": [NodeSpec...]} with entries
// in the document node encoding.
NodeCorpus parse_corpus(const std::string& text);

// Shortest-of-%.9g formatting used by all serializers.
std::string format_number(double v);

}  // namespace glyphgraph

#endif  // GLYPHGRAPH_IO_HPP
