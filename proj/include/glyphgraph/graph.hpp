#ifndef GLYPHGRAPH_GRAPH_HPP
#define GLYPHGRAPH_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glyphgraph/geometry.hpp"

namespace glyphgraph {

// Symbolic node handle. Nodes are identities, never coordinates; binding a
// node to a point is a separate, late phase.
struct NodeId {
  std::uint32_t value = 0;

  auto operator<=>(const NodeId&) const = default;
};

// A straight line segment with redundant polar data. The azimuth is measured
// at `start`, in degrees, stored in [0, 360). A segment carrying a tag is a
// half-line waiting to be paired with the other half carrying the same tag.
struct LineSeg {
  NodeId start;
  NodeId end;
  double length = 0.0;
  double angle_deg = 0.0;
  std::optional<std::string> tag;

  bool is_half_line() const { return tag.has_value(); }
};

// Node-centric encoding: lengths of the lines leaving one node, alternating
// with the counter-clockwise angles between neighboring lines. Tags mark
// half-lines; a tag name starting with '_' is anonymous (fresh per use).
struct NodeSpec {
  struct Arm {
    double length = 0.0;
    std::optional<std::string> tag;

    friend bool operator==(const Arm&, const Arm&) = default;
  };

  std::optional<Point> anchor;
  std::vector<Arm> arms;
  std::vector<double> angles_deg;  // size = arms.size() - 1, each in (0, 360)

  friend bool operator==(const NodeSpec&, const NodeSpec&) = default;
};

// Throws FormatError if arms/angles violate the NodeSpec invariants.
void check_node_spec(const NodeSpec& spec, const std::string& where = "node");

// One mark document: a list of node specs. Tags shared between two specs
// denote one line joining the two nodes.
struct Document {
  std::string name;
  std::vector<NodeSpec> nodes;
};

class Graph {
 public:
  NodeId add_node();
  // Adds a segment; the angle is normalized to [0, 360). Throws DomainError
  // on non-positive length, equal endpoints or unknown nodes.
  void add_line(NodeId start, NodeId end, double length, double angle_deg,
                std::optional<std::string> tag = std::nullopt);

  const std::vector<LineSeg>& lines() const { return lines_; }
  const std::vector<NodeId>& nodes() const { return nodes_; }
  bool has_node(NodeId n) const;

  std::optional<Point> coord(NodeId n) const;
  void bind(NodeId n, const Point& p);
  bool fully_resolved() const;

  // Mutators used by the generator; they keep node bookkeeping consistent.
  void remove_line(std::size_t index);
  void replace_node(NodeId from, NodeId to);
  void set_line(std::size_t index, const LineSeg& seg);

 private:
  std::uint32_t next_id_ = 0;
  std::vector<NodeId> nodes_;  // live nodes, in creation order
  std::vector<LineSeg> lines_;
  std::vector<bool> alive_;                   // indexed by NodeId::value
  std::vector<std::optional<Point>> coords_;  // indexed by NodeId::value
};

// Expands one node spec into `arms.size()` lines from `center` to fresh
// nodes; line i has azimuth base_angle + sum of the first i angles.
std::vector<LineSeg> node_to_lines(Graph& g, const NodeSpec& spec,
                                   NodeId center, double base_angle_deg);

struct Expansion {
  Graph graph;
  std::vector<NodeId> centers;  // one per document node, in order
};

// Expands every spec of a document into a star. Anonymous tags ('_'-prefixed)
// are freshened so each occurrence is a distinct open half-line; named tags
// are kept verbatim. Throws FormatError if a named tag occurs more than twice.
Expansion expand_document(const Document& doc, double base_angle_deg = 0.0);

int degree(const Graph& g, NodeId n);

// Partition of all nodes into connected components, each sorted, ordered by
// smallest member. Half-lines connect their endpoints like any line.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

// Binds every node to a point by breadth-first propagation from `root`.
// Reverse traversal of a line uses angle + 180. Throws DomainError when the
// graph still carries half-lines, is disconnected (naming an unreached
// node), or two paths disagree by more than abs_eps (naming the node and
// both candidate points).
Graph resolve_coordinates(const Graph& g, NodeId root, const Point& root_point,
                          double unit_scale = 1.0, const Tolerance& tol = {});

// Copy with every line direction reduced to [0, 180); flipped lines have
// their endpoints swapped.
Graph canonicalized(const Graph& g);

}  // namespace glyphgraph

#endif  // GLYPHGRAPH_GRAPH_HPP
