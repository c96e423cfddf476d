#ifndef GLYPHGRAPH_ANALYSIS_HPP
#define GLYPHGRAPH_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "glyphgraph/graph.hpp"

namespace glyphgraph {

enum class Category {
  LineCount,
  Node,
  LineLength,
  Angle,
  RelAngle,
  Proportion,
};

const char* category_name(Category c);

// One (category, value) -> count entry. Node entries carry a NodeId instead
// of a numeric value.
struct CountEntry {
  Category category = Category::LineCount;
  double value = 0.0;
  std::optional<NodeId> node;
  long count = 0;
};

struct CountTable {
  std::vector<CountEntry> entries;

  long total(Category c) const;
  // Count for a numeric value, matched with the category's tolerance kind.
  long count_of(Category c, double value, const Tolerance& tol = {}) const;
  long count_of_node(NodeId n) const;
};

// Collapses entries sharing (category, value) by summing counts. Numeric
// values are binned with tolerance-aware equality: lengths absolutely,
// angles on the circle, proportions relatively. Idempotent and insensitive
// to entry order; the result is sorted by (category, value).
CountTable merge_counts(const CountTable& t, const Tolerance& tol = {});

// Per line: one line-count entry, one node entry per endpoint, one
// line-length entry and one angle entry.
CountTable tally_lines(const Graph& g, const Tolerance& tol = {});

// One |A1 - A2| entry per unordered pair of distinct lines sharing a start
// node. With all_incidences, pairs sharing any node count too, using the
// azimuth as seen from the shared node (reversed lines add 180).
CountTable tally_relative_angles(const Graph& g, const Tolerance& tol = {},
                                 bool all_incidences = false);

// One L1/L2 entry per ordered pair of distinct lines.
CountTable tally_proportions(const Graph& g, const Tolerance& tol = {});

// All of the above merged into one table.
CountTable tally_all(const Graph& g, const Tolerance& tol = {},
                     bool all_incidences = false);

// Deterministic text table, sorted by (category, value). Header only when
// the table is empty.
std::string report(const CountTable& t, const Tolerance& tol = {});

}  // namespace glyphgraph

#endif  // GLYPHGRAPH_ANALYSIS_HPP
