#include "glyphgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <string>

#include "glyphgraph/errors.hpp"

namespace glyphgraph {

namespace {

std::string node_name(NodeId n) { return "n" + std::to_string(n.value); }

}  // namespace

void check_node_spec(const NodeSpec& spec, const std::string& where) {
  if (spec.arms.empty()) {
    throw FormatError(where + ": node list must not be empty");
  }
  if (spec.angles_deg.size() + 1 != spec.arms.size()) {
    throw FormatError(where + ": node list must alternate length, angle, "
                              "length and end in a length");
  }
  for (std::size_t i = 0; i < spec.arms.size(); ++i) {
    const auto& arm = spec.arms[i];
    if (!std::isfinite(arm.length) || arm.length <= 0.0) {
      throw FormatError(where + ".list[" + std::to_string(2 * i) +
                        "]: line length must be a positive number");
    }
    if (arm.tag && arm.tag->empty()) {
      throw FormatError(where + ".list[" + std::to_string(2 * i) +
                        "]: tag must not be empty");
    }
  }
  for (std::size_t i = 0; i < spec.angles_deg.size(); ++i) {
    const double a = spec.angles_deg[i];
    if (!std::isfinite(a) || a <= 0.0 || a >= 360.0) {
      throw FormatError(where + ".list[" + std::to_string(2 * i + 1) +
                        "]: angle must lie strictly between 0 and 360");
    }
  }
  if (spec.anchor &&
      (!std::isfinite(spec.anchor->x) || !std::isfinite(spec.anchor->y))) {
    throw FormatError(where + ".anchor: coordinates must be finite");
  }
}

NodeId Graph::add_node() {
  NodeId id{next_id_++};
  nodes_.push_back(id);
  alive_.push_back(true);
  coords_.emplace_back();
  return id;
}

bool Graph::has_node(NodeId n) const {
  return n.value < next_id_ && alive_[n.value];
}

void Graph::add_line(NodeId start, NodeId end, double length, double angle_deg,
                     std::optional<std::string> tag) {
  if (!has_node(start) || !has_node(end)) {
    throw DomainError("add_line: unknown node");
  }
  if (start == end) {
    throw DomainError("add_line: start and end must differ");
  }
  if (!std::isfinite(length) || length <= 0.0) {
    throw DomainError("add_line: length must be positive");
  }
  lines_.push_back(
      {start, end, length, normalize_angle_deg(angle_deg), std::move(tag)});
}

std::optional<Point> Graph::coord(NodeId n) const {
  if (!has_node(n)) return std::nullopt;
  return coords_[n.value];
}

void Graph::bind(NodeId n, const Point& p) {
  if (!has_node(n)) throw DomainError("bind: unknown node " + node_name(n));
  coords_[n.value] = p;
}

bool Graph::fully_resolved() const {
  return std::all_of(nodes_.begin(), nodes_.end(), [this](NodeId n) {
    return coords_[n.value].has_value();
  });
}

void Graph::remove_line(std::size_t index) {
  lines_.erase(lines_.begin() + static_cast<std::ptrdiff_t>(index));
}

void Graph::replace_node(NodeId from, NodeId to) {
  if (!has_node(from) || !has_node(to)) {
    throw DomainError("replace_node: unknown node");
  }
  for (auto& line : lines_) {
    if (line.start == from) line.start = to;
    if (line.end == from) line.end = to;
  }
  nodes_.erase(std::remove(nodes_.begin(), nodes_.end(), from), nodes_.end());
  alive_[from.value] = false;
}

void Graph::set_line(std::size_t index, const LineSeg& seg) {
  lines_[index] = seg;
  lines_[index].angle_deg = normalize_angle_deg(seg.angle_deg);
}

std::vector<LineSeg> node_to_lines(Graph& g, const NodeSpec& spec,
                                   NodeId center, double base_angle_deg) {
  check_node_spec(spec);
  std::vector<LineSeg> out;
  out.reserve(spec.arms.size());
  double azimuth = base_angle_deg;
  for (std::size_t i = 0; i < spec.arms.size(); ++i) {
    if (i > 0) azimuth += spec.angles_deg[i - 1];
    NodeId leaf = g.add_node();
    g.add_line(center, leaf, spec.arms[i].length, azimuth, spec.arms[i].tag);
    out.push_back(g.lines().back());
  }
  return out;
}

Expansion expand_document(const Document& doc, double base_angle_deg) {
  std::map<std::string, int> named_uses;
  for (const auto& spec : doc.nodes) {
    for (const auto& arm : spec.arms) {
      if (arm.tag && !arm.tag->starts_with('_')) ++named_uses[*arm.tag];
    }
  }
  for (const auto& [tag, uses] : named_uses) {
    if (uses > 2) {
      throw FormatError("tag '" + tag + "' occurs " + std::to_string(uses) +
                        " times; a line has at most two halves");
    }
  }

  Expansion out;
  int fresh = 0;
  for (const auto& spec : doc.nodes) {
    NodeSpec renamed = spec;
    for (auto& arm : renamed.arms) {
      if (arm.tag && arm.tag->starts_with('_')) {
        arm.tag = "_" + std::to_string(++fresh);
      }
    }
    NodeId center = out.graph.add_node();
    out.centers.push_back(center);
    node_to_lines(out.graph, renamed, center, base_angle_deg);
  }
  return out;
}

int degree(const Graph& g, NodeId n) {
  if (!g.has_node(n)) throw DomainError("degree: unknown node " + node_name(n));
  int d = 0;
  for (const auto& line : g.lines()) {
    if (line.start == n) ++d;
    if (line.end == n) ++d;
  }
  return d;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  std::map<NodeId, std::vector<NodeId>> adjacency;
  for (NodeId n : g.nodes()) adjacency[n];
  for (const auto& line : g.lines()) {
    adjacency[line.start].push_back(line.end);
    adjacency[line.end].push_back(line.start);
  }

  std::vector<std::vector<NodeId>> components;
  std::map<NodeId, bool> seen;
  for (const auto& [root, _] : adjacency) {
    if (seen[root]) continue;
    std::vector<NodeId> component;
    std::deque<NodeId> queue{root};
    while (!queue.empty()) {
      NodeId n = queue.front();
      queue.pop_front();
      if (seen[n]) continue;
      seen[n] = true;
      component.push_back(n);
      for (NodeId next : adjacency[n]) {
        if (!seen[next]) queue.push_back(next);
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

Graph resolve_coordinates(const Graph& g, NodeId root, const Point& root_point,
                          double unit_scale, const Tolerance& tol) {
  for (const auto& line : g.lines()) {
    if (line.is_half_line()) {
      throw DomainError("resolve_coordinates: graph still has half-line '" +
                        *line.tag + "'");
    }
  }
  if (!g.has_node(root)) {
    throw DomainError("resolve_coordinates: unknown root " + node_name(root));
  }

  Graph out = g;
  out.bind(root, root_point);

  std::map<NodeId, std::vector<std::pair<NodeId, std::size_t>>> incident;
  const auto& lines = g.lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    incident[lines[i].start].push_back({lines[i].end, i});
    incident[lines[i].end].push_back({lines[i].start, i});
  }

  std::deque<NodeId> queue{root};
  std::map<NodeId, bool> visited;
  while (!queue.empty()) {
    NodeId n = queue.front();
    queue.pop_front();
    if (visited[n]) continue;
    visited[n] = true;
    const Point at = *out.coord(n);
    for (const auto& [neighbor, index] : incident[n]) {
      const LineSeg& line = lines[index];
      const double azimuth =
          line.start == n ? line.angle_deg : line.angle_deg + 180.0;
      const Point candidate = endpoint_of(at, line.length, azimuth, unit_scale);
      if (auto existing = out.coord(neighbor)) {
        if (!approx_eq(*existing, candidate, tol)) {
          throw DomainError(
              "resolve_coordinates: node " + node_name(neighbor) +
              " reached at (" + std::to_string(existing->x) + ", " +
              std::to_string(existing->y) + ") and (" +
              std::to_string(candidate.x) + ", " + std::to_string(candidate.y) +
              ")");
        }
      } else {
        out.bind(neighbor, candidate);
      }
      if (!visited[neighbor]) queue.push_back(neighbor);
    }
  }

  for (NodeId n : g.nodes()) {
    if (!out.coord(n)) {
      throw DomainError("resolve_coordinates: node " + node_name(n) +
                        " is not connected to the root");
    }
  }
  return out;
}

Graph canonicalized(const Graph& g) {
  Graph out = g;
  const auto& lines = g.lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto dir = canonical_direction(lines[i].angle_deg);
    if (dir.flipped) {
      LineSeg seg = lines[i];
      std::swap(seg.start, seg.end);
      seg.angle_deg = dir.angle_deg;
      out.set_line(i, seg);
    }
  }
  return out;
}

}  // namespace glyphgraph
