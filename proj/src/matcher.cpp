#include "glyphgraph/matcher.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "glyphgraph/errors.hpp"

namespace glyphgraph {

namespace {

bool recognition_less(const Recognition& a, const Recognition& b) {
  if (a.nodes != b.nodes) return a.nodes < b.nodes;
  if (a.rotation_deg != b.rotation_deg) return a.rotation_deg < b.rotation_deg;
  return a.scale < b.scale;
}

bool recognition_close(const Recognition& a, const Recognition& b,
                       const Tolerance& tol) {
  return a.nodes == b.nodes &&
         approx_eq(a.scale, b.scale, tol, Quantity::Ratio) &&
         approx_eq(a.rotation_deg, b.rotation_deg, tol, Quantity::Angle);
}

// Backtracking state for match_motif.
struct MatchState {
  const Graph& graph;
  const MotifPattern& pattern;
  const Tolerance& tol;
  std::map<std::string, NodeId> binding;
  std::set<NodeId> bound_nodes;
  std::vector<bool> used_line;
  double ratio = 0.0;
  double rotation = 0.0;
  std::vector<Recognition> found;
};

void emit(MatchState& st) {
  Recognition rec;
  rec.motif = st.pattern.name;
  rec.scale = st.ratio;
  rec.rotation_deg = st.rotation;
  for (const auto& sym : st.pattern.symbols) rec.nodes.push_back(st.binding[sym]);
  for (const auto& existing : st.found) {
    if (recognition_close(existing, rec, st.tol)) return;
  }
  st.found.push_back(std::move(rec));
}

void search(MatchState& st, std::size_t depth) {
  if (depth == st.pattern.lines.size()) {
    emit(st);
    return;
  }
  const PatternLine& pat = st.pattern.lines[depth];
  const auto& lines = st.graph.lines();
  const auto from_bound = st.binding.find(pat.from);
  const auto to_bound = st.binding.find(pat.to);

  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (st.used_line[i]) continue;
    // A pattern line follows a graph line in either direction; traversing
    // against storage order adds 180 to the azimuth.
    for (const bool reversed : {false, true}) {
      const NodeId from = reversed ? lines[i].end : lines[i].start;
      const NodeId to = reversed ? lines[i].start : lines[i].end;
      if (from_bound != st.binding.end() && from_bound->second != from) continue;
      if (to_bound != st.binding.end() && to_bound->second != to) continue;
      // Injective binding: an unbound symbol cannot reuse a bound node.
      if (from_bound == st.binding.end() && st.bound_nodes.count(from)) continue;
      if (to_bound == st.binding.end() && st.bound_nodes.count(to)) continue;
      if (pat.from != pat.to && from == to) continue;

      const double azimuth =
          reversed ? normalize_angle_deg(lines[i].angle_deg + 180.0)
                   : lines[i].angle_deg;
      const double ratio = lines[i].length / pat.proportion;
      const double offset = normalize_angle_deg(azimuth - pat.angle_deg);
      if (depth > 0) {
        if (!approx_eq(ratio, st.ratio, st.tol, Quantity::Ratio)) continue;
        if (!approx_eq(offset, st.rotation, st.tol, Quantity::Angle)) continue;
      }

      const double prev_ratio = st.ratio;
      const double prev_rotation = st.rotation;
      if (depth == 0) {
        st.ratio = ratio;
        st.rotation = offset;
      }
      const bool bind_from = from_bound == st.binding.end();
      const bool bind_to = to_bound == st.binding.end();
      if (bind_from) {
        st.binding[pat.from] = from;
        st.bound_nodes.insert(from);
      }
      if (bind_to && pat.to != pat.from) {
        st.binding[pat.to] = to;
        st.bound_nodes.insert(to);
      }
      st.used_line[i] = true;

      search(st, depth + 1);

      st.used_line[i] = false;
      if (bind_to && pat.to != pat.from) {
        st.bound_nodes.erase(to);
        st.binding.erase(pat.to);
      }
      if (bind_from) {
        st.bound_nodes.erase(from);
        st.binding.erase(pat.from);
      }
      st.ratio = prev_ratio;
      st.rotation = prev_rotation;
    }
  }
}

}  // namespace

void check_pattern(const MotifPattern& p) {
  if (p.lines.empty()) throw UsageError("pattern '" + p.name + "' has no lines");
  std::set<std::string> used;
  for (const auto& line : p.lines) {
    if (line.from.empty() || line.to.empty()) {
      throw UsageError("pattern '" + p.name + "': empty symbol name");
    }
    if (line.from == line.to) {
      throw UsageError("pattern '" + p.name + "': line from a symbol to itself");
    }
    if (!(line.proportion > 0.0)) {
      throw UsageError("pattern '" + p.name + "': proportions must be positive");
    }
    used.insert(line.from);
    used.insert(line.to);
  }
  std::set<std::string> declared(p.symbols.begin(), p.symbols.end());
  if (declared != used || declared.size() != p.symbols.size()) {
    throw UsageError("pattern '" + p.name +
                     "': symbol list must cover exactly the symbols used");
  }
  // Connectivity over the symbol graph.
  std::set<std::string> reached{p.lines.front().from};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& line : p.lines) {
      const bool has_from = reached.count(line.from) > 0;
      const bool has_to = reached.count(line.to) > 0;
      if (has_from != has_to) {
        reached.insert(has_from ? line.to : line.from);
        grew = true;
      }
    }
  }
  if (reached.size() != declared.size()) {
    throw UsageError("pattern '" + p.name + "' is not connected");
  }
}

std::optional<double> proportional(std::span<const double> lengths,
                                   std::span<const double> proportions,
                                   const Tolerance& tol) {
  if (lengths.size() != proportions.size()) {
    throw UsageError("proportional: list sizes differ");
  }
  double ratio = 1.0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const double r = lengths[i] / proportions[i];
    if (i == 0) {
      ratio = r;
    } else if (!approx_eq(r, ratio, tol, Quantity::Ratio)) {
      return std::nullopt;
    }
  }
  return ratio;
}

std::optional<double> rotated(std::span<const double> angles,
                              std::span<const double> pattern_angles,
                              const Tolerance& tol) {
  if (angles.size() != pattern_angles.size()) {
    throw UsageError("rotated: list sizes differ");
  }
  double offset = 0.0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double a = normalize_angle_deg(angles[i] - pattern_angles[i]);
    if (i == 0) {
      offset = a;
    } else if (!approx_eq(a, offset, tol, Quantity::Angle)) {
      return std::nullopt;
    }
  }
  return offset;
}

std::vector<Recognition> match_motif(const Graph& g, const MotifPattern& p,
                                     const Tolerance& tol) {
  check_pattern(p);
  const Graph canon = canonicalized(g);
  MatchState st{canon, p, tol, {}, {}, std::vector<bool>(canon.lines().size()),
                0.0, 0.0, {}};
  search(st, 0);
  std::sort(st.found.begin(), st.found.end(), recognition_less);
  return st.found;
}

std::vector<Recognition> find_parallel(const Graph& g, const Tolerance& tol) {
  const auto& lines = g.lines();
  std::vector<Recognition> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto di = canonical_direction(lines[i].angle_deg);
      const auto dj = canonical_direction(lines[j].angle_deg);
      if (circular_diff_deg(di.angle_deg, dj.angle_deg) > tol.angle_eps &&
          circular_diff_deg(di.angle_deg, dj.angle_deg + 180.0) > tol.angle_eps) {
        continue;
      }
      Recognition rec;
      rec.motif = "parallel";
      rec.nodes = {lines[i].start, lines[i].end, lines[j].start, lines[j].end};
      rec.scale = 1.0;
      rec.rotation_deg = di.angle_deg;
      out.push_back(std::move(rec));
    }
  }
  std::sort(out.begin(), out.end(), recognition_less);
  return out;
}

std::vector<Recognition> dedupe_recognitions(const std::vector<Recognition>& rs) {
  std::vector<Recognition> out;
  std::set<std::set<NodeId>> seen;
  for (const auto& rec : rs) {
    std::set<NodeId> key(rec.nodes.begin(), rec.nodes.end());
    if (seen.insert(std::move(key)).second) out.push_back(rec);
  }
  return out;
}

MotifPattern y_sign_pattern() {
  MotifPattern p;
  p.name = "y_sign";
  p.lines = {{"A", "B", 1.0, 90.0},
             {"B", "C", 1.0, 0.0},
             {"E", "C", 1.0, 90.0},
             {"C", "D", 1.0, 90.0}};
  p.symbols = {"A", "B", "C", "D", "E"};
  return p;
}

}  // namespace glyphgraph
