#include "glyphgraph/generator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "glyphgraph/errors.hpp"

namespace glyphgraph {

namespace {

// Nodes reachable from `seed` over the graph's current lines.
std::set<NodeId> reachable_from(const Graph& g, NodeId seed) {
  std::map<NodeId, std::vector<NodeId>> adjacency;
  for (const auto& line : g.lines()) {
    adjacency[line.start].push_back(line.end);
    adjacency[line.end].push_back(line.start);
  }
  std::set<NodeId> seen;
  std::deque<NodeId> queue{seed};
  while (!queue.empty()) {
    NodeId n = queue.front();
    queue.pop_front();
    if (!seen.insert(n).second) continue;
    for (NodeId next : adjacency[n]) {
      if (!seen.count(next)) queue.push_back(next);
    }
  }
  return seen;
}

bool enumerate_rec(std::vector<std::string>& tags, PairingPlan& plan,
                   const std::function<bool(const PairingPlan&)>& visit) {
  if (tags.empty()) return visit(plan);
  std::string first = tags.front();
  tags.erase(tags.begin());
  bool keep_going = true;
  for (std::size_t j = 0; keep_going && j < tags.size(); ++j) {
    std::string partner = tags[j];
    tags.erase(tags.begin() + static_cast<std::ptrdiff_t>(j));
    plan.emplace_back(first, partner);
    keep_going = enumerate_rec(tags, plan, visit);
    plan.pop_back();
    tags.insert(tags.begin() + static_cast<std::ptrdiff_t>(j), partner);
  }
  tags.insert(tags.begin(), first);
  return keep_going;
}

std::vector<std::size_t> tag_occurrences(const Graph& g,
                                         const std::string& tag) {
  std::vector<std::size_t> out;
  const auto& lines = g.lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].tag == tag) out.push_back(i);
  }
  return out;
}

NodeId smallest_node(const Graph& g) {
  return *std::min_element(g.nodes().begin(), g.nodes().end());
}

bool spec_grid_angles(const NodeSpec& spec, const Tolerance& tol) {
  return std::all_of(spec.angles_deg.begin(), spec.angles_deg.end(),
                     [&](double a) { return grid_angle(a, tol); });
}

}  // namespace

void enumerate_pairings(std::vector<std::string> tags,
                        const std::function<bool(const PairingPlan&)>& visit) {
  std::set<std::string> distinct(tags.begin(), tags.end());
  if (distinct.size() != tags.size()) {
    throw DomainError("enumerate_pairings: tags must be distinct");
  }
  if (tags.size() % 2 != 0) return;  // odd counts admit no perfect matching
  PairingPlan plan;
  enumerate_rec(tags, plan, visit);
}

std::vector<PairingPlan> all_pairings(std::vector<std::string> tags) {
  std::vector<PairingPlan> out;
  enumerate_pairings(std::move(tags), [&](const PairingPlan& plan) {
    out.push_back(plan);
    return true;
  });
  return out;
}

Graph apply_update(const Graph& g, const UpdateOp& op) {
  if (!g.has_node(op.seed)) {
    throw DomainError("apply_update: unknown seed node");
  }
  if (!std::isfinite(op.scale) || op.scale <= 0.0) {
    throw DomainError("apply_update: scale must be a positive finite number");
  }
  const std::set<NodeId> component = reachable_from(g, op.seed);
  Graph out = g;
  const auto& lines = g.lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!component.count(lines[i].start)) continue;
    LineSeg seg = lines[i];
    seg.length *= op.scale;
    seg.angle_deg = seg.angle_deg + op.rotation_deg;  // set_line normalizes
    out.set_line(i, seg);
  }
  return out;
}

MergeOutcome merge_pair(const Graph& g, const std::string& tag_a,
                        const std::string& tag_b, const Tolerance& tol) {
  std::vector<std::size_t> hits;
  if (tag_a == tag_b) {
    hits = tag_occurrences(g, tag_a);
  } else {
    for (const auto& tag : {tag_a, tag_b}) {
      auto occ = tag_occurrences(g, tag);
      if (occ.size() != 1) {
        throw DomainError("merge_pair: tag '" + tag + "' occurs " +
                          std::to_string(occ.size()) + " times, expected 1");
      }
      hits.push_back(occ.front());
    }
  }
  if (hits.size() != 2) {
    throw DomainError("merge_pair: tag '" + tag_a + "' occurs " +
                      std::to_string(hits.size()) + " times, expected 2");
  }
  std::sort(hits.begin(), hits.end());
  const LineSeg first = g.lines()[hits[0]];
  const LineSeg second = g.lines()[hits[1]];

  const NodeId n1 = first.start, n2 = first.end;
  const NodeId n3 = second.start, n4 = second.end;
  const NodeId all[4] = {n1, n2, n3, n4};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (all[i] == all[j]) {
        throw MergeError("merge_pair: endpoints of the paired half-lines "
                         "must be four distinct nodes");
      }
    }
  }

  const double scale = first.length / second.length;
  const double rotation =
      normalize_angle_deg(first.angle_deg + 180.0 - second.angle_deg);

  const bool same_component = reachable_from(g, n1).count(n3) > 0;

  Graph out = g;
  out.remove_line(hits[1]);
  out.remove_line(hits[0]);

  if (same_component) {
    // No independent subgraph to transform: the pair is acceptable only at
    // the fixpoint of the merge equations.
    if (!approx_eq(first.length, second.length, tol, Quantity::Ratio) ||
        circular_diff_deg(rotation, 0.0) > tol.angle_eps) {
      throw MergeError(
          "merge_pair: half-lines in one component need equal lengths and "
          "opposite directions");
    }
  } else {
    out = apply_update(out, {n3, scale, rotation});
  }

  out.replace_node(n4, n1);
  out.replace_node(n3, n2);
  for (const auto& line : out.lines()) {
    if (line.start == line.end) {
      throw MergeError("merge_pair: unification collapsed a line into a loop");
    }
  }
  out.add_line(n1, n2, first.length, first.angle_deg);
  return {std::move(out), scale, rotation};
}

MergedGraph merge_named_pairs(const Graph& g, const Tolerance& tol) {
  std::map<std::string, int> uses;
  for (const auto& line : g.lines()) {
    if (line.tag) ++uses[*line.tag];
  }
  MergedGraph out{g, {}};
  for (const auto& [tag, count] : uses) {
    if (count > 2) {
      throw DomainError("tag '" + tag + "' occurs " + std::to_string(count) +
                        " times; a line has at most two halves");
    }
    if (count == 2) {
      MergeOutcome merged = merge_pair(out.graph, tag, tag, tol);
      out.graph = std::move(merged.graph);
      out.events.push_back({tag, merged.scale, merged.rotation_deg});
    }
  }
  return out;
}

std::vector<Violation> validate_graph(const Graph& g, const Tolerance& tol,
                                      double unit_scale) {
  std::vector<Violation> out;
  for (const auto& line : g.lines()) {
    if (line.is_half_line()) {
      out.push_back({Violation::Kind::OpenHalfLine,
                     "unmatched half-line '" + *line.tag + "'"});
    }
  }
  const auto components = connected_components(g);
  if (components.size() > 1) {
    out.push_back({Violation::Kind::Disconnected,
                   std::to_string(components.size()) + " components"});
  }
  if (!out.empty() || g.nodes().empty()) return out;

  Graph resolved;
  try {
    resolved = resolve_coordinates(g, smallest_node(g), {0.0, 0.0}, unit_scale,
                                   tol);
  } catch (const DomainError& e) {
    out.push_back({Violation::Kind::Inconsistent, e.what()});
    return out;
  }

  const auto& nodes = resolved.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (approx_eq(*resolved.coord(nodes[i]), *resolved.coord(nodes[j]),
                    tol)) {
        out.push_back({Violation::Kind::NodeOverlap,
                       "nodes n" + std::to_string(nodes[i].value) + " and n" +
                           std::to_string(nodes[j].value) +
                           " occupy one point"});
      }
    }
  }

  const auto& lines = resolved.lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Point a1 = *resolved.coord(lines[i].start);
      const Point a2 = *resolved.coord(lines[i].end);
      const Point b1 = *resolved.coord(lines[j].start);
      const Point b2 = *resolved.coord(lines[j].end);
      const bool forward = approx_eq(a1, b1, tol) && approx_eq(a2, b2, tol);
      const bool backward = approx_eq(a1, b2, tol) && approx_eq(a2, b1, tol);
      if (forward || backward) {
        out.push_back({Violation::Kind::DuplicateLine,
                       "lines " + std::to_string(i) + " and " +
                           std::to_string(j) + " coincide"});
      }
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> crossing_lines(
    const Graph& g, const Tolerance& tol, double unit_scale) {
  Graph resolved;
  if (g.fully_resolved()) {
    resolved = g;
  } else {
    if (g.nodes().empty()) return {};
    try {
      resolved = resolve_coordinates(g, smallest_node(g), {0.0, 0.0},
                                     unit_scale, tol);
    } catch (const DomainError&) {
      return {};
    }
  }

  const auto orient = [](const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  };
  const auto& lines = resolved.lines();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      // Lines sharing a node meet there by construction, not by crossing.
      if (lines[i].start == lines[j].start || lines[i].start == lines[j].end ||
          lines[i].end == lines[j].start || lines[i].end == lines[j].end) {
        continue;
      }
      const Point a = *resolved.coord(lines[i].start);
      const Point b = *resolved.coord(lines[i].end);
      const Point c = *resolved.coord(lines[j].start);
      const Point d = *resolved.coord(lines[j].end);
      const double o1 = orient(a, b, c);
      const double o2 = orient(a, b, d);
      const double o3 = orient(c, d, a);
      const double o4 = orient(c, d, b);
      if (((o1 > tol.abs_eps && o2 < -tol.abs_eps) ||
           (o1 < -tol.abs_eps && o2 > tol.abs_eps)) &&
          ((o3 > tol.abs_eps && o4 < -tol.abs_eps) ||
           (o3 < -tol.abs_eps && o4 > tol.abs_eps))) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

void exhaustive_generate(const Graph& g,
                         const std::function<bool(const Graph&)>& visit,
                         const Tolerance& tol) {
  const MergedGraph base = merge_named_pairs(g, tol);

  std::vector<std::string> open;
  for (const auto& line : base.graph.lines()) {
    if (line.tag) open.push_back(*line.tag);
  }
  std::sort(open.begin(), open.end());

  enumerate_pairings(open, [&](const PairingPlan& plan) {
    PairingPlan ordered;
    ordered.reserve(plan.size());
    for (const auto& [a, b] : plan) {
      ordered.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(ordered.begin(), ordered.end());

    Graph candidate = base.graph;
    try {
      for (const auto& [a, b] : ordered) {
        candidate = merge_pair(candidate, a, b, tol).graph;
      }
    } catch (const MergeError&) {
      return true;  // plan rejected, keep enumerating
    }
    if (!validate_graph(candidate, tol).empty()) return true;
    return visit(candidate);
  });
}

std::vector<Graph> exhaustive_generate_all(const Graph& g,
                                           const Tolerance& tol) {
  std::vector<Graph> out;
  exhaustive_generate(
      g,
      [&](const Graph& result) {
        out.push_back(result);
        return true;
      },
      tol);
  return out;
}

bool grid_angle(double angle_deg, const Tolerance& tol) {
  const double a = std::fabs(angle_deg);
  for (const double step : {30.0, 45.0}) {
    const double m = std::fmod(a, step);
    if (std::min(m, step - m) <= tol.angle_eps) return true;
  }
  return false;
}

void random_generate(
    const NodeCorpus& corpus, std::uint64_t seed, int attempts,
    const std::function<bool(const Graph&, const RandomDraw&)>& visit,
    const Tolerance& tol) {
  if (corpus.primary.empty() || corpus.other.empty()) {
    throw UsageError("random_generate: corpus needs primary and other specs");
  }
  for (const auto& spec : corpus.primary) check_node_spec(spec, "primary");
  for (const auto& spec : corpus.other) check_node_spec(spec, "other");

  // Raw engine output reduced by modulo so streams are identical across
  // standard libraries.
  std::mt19937_64 rng(seed);
  const auto draw = [&rng](std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
  };

  for (int attempt = 1; attempt <= attempts; ++attempt) {
    RandomDraw info;
    info.attempt = attempt;
    info.primary_index = draw(corpus.primary.size());
    info.other_indices[0] = draw(corpus.other.size());
    info.other_indices[1] = draw(corpus.other.size());

    const NodeSpec& primary = corpus.primary[info.primary_index];
    const NodeSpec& other1 = corpus.other[info.other_indices[0]];
    const NodeSpec& other2 = corpus.other[info.other_indices[1]];
    if (!spec_grid_angles(primary, tol) || !spec_grid_angles(other1, tol) ||
        !spec_grid_angles(other2, tol)) {
      continue;
    }

    // Backtracking over the fourth node: every remaining distinct other
    // spec, ignoring duplicates of what was already drawn.
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < corpus.other.size(); ++i) {
      const NodeSpec& c = corpus.other[i];
      if (c == primary || c == other1 || c == other2) continue;
      const bool repeat =
          std::any_of(candidates.begin(), candidates.end(),
                      [&](std::size_t k) { return corpus.other[k] == c; });
      if (!repeat) candidates.push_back(i);
    }

    for (std::size_t fourth : candidates) {
      info.fourth_index = fourth;
      Document doc;
      doc.nodes = {primary, other1, other2, corpus.other[fourth]};
      const Expansion expansion = expand_document(doc);
      bool keep_going = true;
      exhaustive_generate(
          expansion.graph,
          [&](const Graph& result) {
            keep_going = visit(result, info);
            return keep_going;
          },
          tol);
      if (!keep_going) return;
    }
  }
}

}  // namespace glyphgraph
