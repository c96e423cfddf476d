#ifndef GLYPHGRAPH_GENERATOR_HPP
#define GLYPHGRAPH_GENERATOR_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "glyphgraph/graph.hpp"

namespace glyphgraph {

// A perfect matching over the open half-line tags of a graph.
using PairingPlan = std::vector<std::pair<std::string, std::string>>;

// Similarity transform of one connected component: every line reachable from
// `seed` gets length * scale and angle + rotation.
struct UpdateOp {
  NodeId seed;
  double scale = 1.0;
  double rotation_deg = 0.0;
};

// Node specs collected from existing marks, split into heuristic centers
// (primary) and the rest.
struct NodeCorpus {
  std::vector<NodeSpec> primary;
  std::vector<NodeSpec> other;
};

// Streams every perfect matching of `tags` to `visit`; stops early when the
// callback returns false. Produces (n-1)!! plans for even n and none for odd
// n. Tags must be distinct.
void enumerate_pairings(std::vector<std::string> tags,
                        const std::function<bool(const PairingPlan&)>& visit);

std::vector<PairingPlan> all_pairings(std::vector<std::string> tags);

Graph apply_update(const Graph& g, const UpdateOp& op);

struct MergeOutcome {
  Graph graph;
  double scale = 1.0;         // L1 / L2
  double rotation_deg = 0.0;  // A1 + 180 - A2, normalized
};

// Merges the half-lines carrying `tag_a` and `tag_b` (the same name twice
// selects its two occurrences). The second half-line's component is scaled
// and rotated so the halves coincide, the endpoint nodes are unified, and
// one full line with the first half-line's polar data replaces the pair.
// Two half-lines inside one component merge only when their lengths agree
// and the rotation comes out as 0; anything else throws MergeError, as does
// a violated all-different guard on the four endpoints.
MergeOutcome merge_pair(const Graph& g, const std::string& tag_a,
                        const std::string& tag_b, const Tolerance& tol = {});

struct MergeEvent {
  std::string tag;
  double scale = 1.0;
  double rotation_deg = 0.0;
};

struct MergedGraph {
  Graph graph;
  std::vector<MergeEvent> events;
};

// Merges every named tag that occurs exactly twice, in lexicographic tag
// order. Named tags occurring more than twice throw DomainError; merge
// failures propagate.
MergedGraph merge_named_pairs(const Graph& g, const Tolerance& tol = {});

struct Violation {
  enum class Kind {
    OpenHalfLine,
    Disconnected,
    Inconsistent,
    NodeOverlap,
    DuplicateLine,
  };
  Kind kind;
  std::string detail;
};

// Checks, in order: no open half-lines, connectivity, coordinate
// consistency, no two nodes on one point, no two fully coinciding lines.
// Violations are data, not errors.
std::vector<Violation> validate_graph(const Graph& g, const Tolerance& tol = {},
                                      double unit_scale = 1.0);

// Advisory only: pairs of lines that properly cross; genuine marks may
// contain crossings, so this never invalidates a graph.
std::vector<std::pair<std::size_t, std::size_t>> crossing_lines(
    const Graph& g, const Tolerance& tol = {}, double unit_scale = 1.0);

// For every pairing plan over the open tags of `g` (named pairs are merged
// up front), merges pair by pair in lexicographic tag order and yields each
// graph that validates cleanly. Deterministic stream order; the callback
// returns false to stop.
void exhaustive_generate(const Graph& g,
                         const std::function<bool(const Graph&)>& visit,
                         const Tolerance& tol = {});

std::vector<Graph> exhaustive_generate_all(const Graph& g,
                                           const Tolerance& tol = {});

// Which corpus entries one random attempt drew.
struct RandomDraw {
  int attempt = 0;
  std::size_t primary_index = 0;
  std::size_t other_indices[2] = {0, 0};
  std::size_t fourth_index = 0;
};

// Random mark generation: per attempt, draws one primary and two other specs
// (with replacement) from a generator seeded with `seed`; rejects the draw
// unless every angle of the three specs is a multiple of 30 or of 45 within
// angle_eps; then tries each remaining distinct other spec as a fourth node
// and streams every valid graph exhaustive generation finds. Runs exactly
// `attempts` draws unless the callback stops it.
void random_generate(
    const NodeCorpus& corpus, std::uint64_t seed, int attempts,
    const std::function<bool(const Graph&, const RandomDraw&)>& visit,
    const Tolerance& tol = {});

// True when `angle` is a multiple of 30 or 45 degrees within angle_eps.
bool grid_angle(double angle_deg, const Tolerance& tol = {});

}  // namespace glyphgraph

#endif  // GLYPHGRAPH_GENERATOR_HPP
