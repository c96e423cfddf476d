#ifndef GLYPHGRAPH_MATCHER_HPP
#define GLYPHGRAPH_MATCHER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glyphgraph/graph.hpp"

namespace glyphgraph {

// A motif line between two symbolic endpoints: the required length
// proportion and the pattern angle it must show after rotation.
struct PatternLine {
  std::string from;
  std::string to;
  double proportion = 1.0;
  double angle_deg = 0.0;
};

// A declarative motif. `symbols` fixes the order nodes are reported in; it
// must cover exactly the symbols used by `lines`, which must induce a
// connected pattern.
struct MotifPattern {
  std::string name;
  std::vector<PatternLine> lines;
  std::vector<std::string> symbols;
};

// Throws UsageError when the pattern violates its invariants.
void check_pattern(const MotifPattern& p);

// One successful match: the graph nodes bound per pattern symbol, and the
// uniform scale and rotation that map the pattern onto them.
struct Recognition {
  std::string motif;
  std::vector<NodeId> nodes;
  double scale = 1.0;
  double rotation_deg = 0.0;
};

// Common ratio lengths[i] / proportions[i], or nullopt when the ratios
// disagree beyond rel_eps. Empty lists yield 1. Mismatched list sizes throw
// UsageError.
std::optional<double> proportional(std::span<const double> lengths,
                                   std::span<const double> proportions,
                                   const Tolerance& tol = {});

// Common offset (angles[i] - pattern_angles[i]) mod 360, or nullopt when
// the offsets disagree beyond angle_eps. Empty lists yield 0.
std::optional<double> rotated(std::span<const double> angles,
                              std::span<const double> pattern_angles,
                              const Tolerance& tol = {});

// All recognitions of `p` in `g`, invariant under uniform scaling and
// rotation of the graph. Every injective binding of pattern symbols to
// nodes counts; a pattern line follows a graph line in either direction
// (traversing a line backwards adds 180 to its azimuth). Bindings that
// differ only by a motif symmetry are all reported. Result sorted.
std::vector<Recognition> match_motif(const Graph& g, const MotifPattern& p,
                                     const Tolerance& tol = {});

// One recognition per unordered pair of distinct lines with equal canonical
// direction. Nodes are the four endpoints; the rotation records the shared
// direction.
std::vector<Recognition> find_parallel(const Graph& g,
                                       const Tolerance& tol = {});

// Keeps the first recognition per distinct node set.
std::vector<Recognition> dedupe_recognitions(
    const std::vector<Recognition>& rs);

// The built-in Y-sign motif: four unit-proportion lines at pattern angles
// 90, 0, 90, 90 around a shared center.
MotifPattern y_sign_pattern();

}  // namespace glyphgraph

#endif  // GLYPHGRAPH_MATCHER_HPP
