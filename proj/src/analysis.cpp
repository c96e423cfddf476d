#include "glyphgraph/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "glyphgraph/errors.hpp"

namespace glyphgraph {

namespace {

// Tolerance kind used to bin values of one category.
Quantity value_kind(Category c) {
  switch (c) {
    case Category::LineLength:
      return Quantity::Length;
    case Category::Angle:
    case Category::RelAngle:
      return Quantity::Angle;
    case Category::Proportion:
      return Quantity::Ratio;
    default:
      return Quantity::Length;
  }
}

bool entry_less(const CountEntry& a, const CountEntry& b) {
  if (a.category != b.category) return a.category < b.category;
  if (a.node.has_value() != b.node.has_value()) return b.node.has_value();
  if (a.node && b.node && *a.node != *b.node) return *a.node < *b.node;
  return a.value < b.value;
}

}  // namespace

const char* category_name(Category c) {
  switch (c) {
    case Category::LineCount:
      return "line_count";
    case Category::Node:
      return "node";
    case Category::LineLength:
      return "line_length";
    case Category::Angle:
      return "angle";
    case Category::RelAngle:
      return "rel_angle";
    case Category::Proportion:
      return "proportion";
  }
  return "?";
}

long CountTable::total(Category c) const {
  long sum = 0;
  for (const auto& e : entries) {
    if (e.category == c) sum += e.count;
  }
  return sum;
}

long CountTable::count_of(Category c, double value, const Tolerance& tol) const {
  long sum = 0;
  for (const auto& e : entries) {
    if (e.category == c && !e.node &&
        approx_eq(e.value, value, tol, value_kind(c))) {
      sum += e.count;
    }
  }
  return sum;
}

long CountTable::count_of_node(NodeId n) const {
  long sum = 0;
  for (const auto& e : entries) {
    if (e.category == Category::Node && e.node && *e.node == n) sum += e.count;
  }
  return sum;
}

CountTable merge_counts(const CountTable& t, const Tolerance& tol) {
  CountTable out;
  std::vector<CountEntry> sorted = t.entries;
  std::stable_sort(sorted.begin(), sorted.end(), entry_less);

  for (const auto& e : sorted) {
    if (!out.entries.empty()) {
      CountEntry& last = out.entries.back();
      const bool same_slot =
          last.category == e.category && last.node.has_value() == e.node.has_value();
      if (same_slot && e.node) {
        if (*last.node == *e.node) {
          last.count += e.count;
          continue;
        }
      } else if (same_slot &&
                 approx_eq(last.value, e.value, tol, value_kind(e.category))) {
        last.count += e.count;
        continue;
      }
    }
    out.entries.push_back(e);
  }

  // Angles live on a circle: a bin at the top of the range can wrap around
  // and coincide with the first bin of its category.
  for (auto it = out.entries.begin(); it != out.entries.end();) {
    bool erased = false;
    if (value_kind(it->category) == Quantity::Angle && !it->node) {
      auto first = std::find_if(out.entries.begin(), it, [&](const CountEntry& e) {
        return e.category == it->category && !e.node;
      });
      if (first != it && circular_diff_deg(first->value, it->value) <= tol.angle_eps) {
        first->count += it->count;
        it = out.entries.erase(it);
        erased = true;
      }
    }
    if (!erased) ++it;
  }
  return out;
}

CountTable tally_lines(const Graph& g, const Tolerance& tol) {
  CountTable raw;
  for (const auto& line : g.lines()) {
    raw.entries.push_back({Category::LineCount, 0.0, std::nullopt, 1});
    raw.entries.push_back({Category::Node, 0.0, line.start, 1});
    raw.entries.push_back({Category::Node, 0.0, line.end, 1});
    raw.entries.push_back({Category::LineLength, line.length, std::nullopt, 1});
    raw.entries.push_back({Category::Angle, line.angle_deg, std::nullopt, 1});
  }
  return merge_counts(raw, tol);
}

CountTable tally_relative_angles(const Graph& g, const Tolerance& tol,
                                 bool all_incidences) {
  const auto& lines = g.lines();
  CountTable raw;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (all_incidences) {
        // Azimuths as seen from the shared node; a line reaches its end
        // node with the reverse azimuth.
        for (const NodeId shared : {lines[i].start, lines[i].end}) {
          if (shared != lines[j].start && shared != lines[j].end) continue;
          const double a1 = lines[i].start == shared
                                ? lines[i].angle_deg
                                : normalize_angle_deg(lines[i].angle_deg + 180.0);
          const double a2 = lines[j].start == shared
                                ? lines[j].angle_deg
                                : normalize_angle_deg(lines[j].angle_deg + 180.0);
          raw.entries.push_back(
              {Category::RelAngle, std::fabs(a1 - a2), std::nullopt, 1});
        }
      } else if (lines[i].start == lines[j].start) {
        raw.entries.push_back({Category::RelAngle,
                               std::fabs(lines[i].angle_deg - lines[j].angle_deg),
                               std::nullopt, 1});
      }
    }
  }
  return merge_counts(raw, tol);
}

CountTable tally_proportions(const Graph& g, const Tolerance& tol) {
  const auto& lines = g.lines();
  CountTable raw;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (i == j) continue;
      raw.entries.push_back({Category::Proportion,
                             lines[i].length / lines[j].length, std::nullopt, 1});
    }
  }
  return merge_counts(raw, tol);
}

CountTable tally_all(const Graph& g, const Tolerance& tol, bool all_incidences) {
  CountTable raw = tally_lines(g, tol);
  for (const auto& e : tally_relative_angles(g, tol, all_incidences).entries) {
    raw.entries.push_back(e);
  }
  for (const auto& e : tally_proportions(g, tol).entries) {
    raw.entries.push_back(e);
  }
  return merge_counts(raw, tol);
}

std::string report(const CountTable& t, const Tolerance& tol) {
  CountTable merged = merge_counts(t, tol);
  std::string out = "category      value              count\n";
  char buf[96];
  for (const auto& e : merged.entries) {
    std::string value;
    if (e.category == Category::LineCount) {
      value = "l";
    } else if (e.node) {
      value = "n" + std::to_string(e.node->value);
    } else {
      std::snprintf(buf, sizeof(buf), "%.9g", e.value);
      value = buf;
    }
    std::snprintf(buf, sizeof(buf), "%-13s %-18s %6ld\n",
                  category_name(e.category), value.c_str(), e.count);
    out += buf;
  }
  return out;
}

}  // namespace glyphgraph
