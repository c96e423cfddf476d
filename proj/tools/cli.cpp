#include "glyphgraph/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "glyphgraph/analysis.hpp"
#include "glyphgraph/errors.hpp"
#include "glyphgraph/generator.hpp"
#include "glyphgraph/io.hpp"
#include "glyphgraph/matcher.hpp"
#include "glyphgraph/renderer.hpp"

namespace glyphgraph::cli {

namespace {

struct Options {
  Tolerance tol;

  std::string input;
  std::string output;

  bool json = false;
  bool all_incidences = false;

  std::string builtin;
  std::string pattern_file;
  bool dedupe = false;

  long limit = -1;
  std::string corpus_file;
  std::uint64_t seed = 0;
  int attempts = 100;

  std::string root;
  double base_angle = 0.0;
};

struct Loaded {
  std::string name;
  Graph graph;
  std::optional<Point> anchor;  // first document node's anchor, if any
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Loaded load_input(const std::string& path, double base_angle) {
  const std::string text = read_file(path);
  if (is_document_json(text)) {
    Document doc = parse_document(text);
    Expansion expansion = expand_document(doc, base_angle);
    return {doc.name, std::move(expansion.graph), doc.nodes.front().anchor};
  }
  LineListDoc doc = parse_graph_doc(text);
  return {doc.name, std::move(doc.graph), std::nullopt};
}

double env_tolerance(const char* name, double fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0)) {
    throw UsageError(std::string(name) + ": expected a positive number, got '" +
                     raw + "'");
  }
  return v;
}

Tolerance tolerance_from_env() {
  Tolerance tol;
  tol.abs_eps = env_tolerance("GLYPHGRAPH_TOLERANCE_ABS", tol.abs_eps);
  tol.rel_eps = env_tolerance("GLYPHGRAPH_TOLERANCE_REL", tol.rel_eps);
  tol.angle_eps = env_tolerance("GLYPHGRAPH_TOLERANCE_ANGLE", tol.angle_eps);
  return tol;
}

Point parse_root(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw UsageError("--root: expected X,Y");
  }
  char* end = nullptr;
  const std::string xs = text.substr(0, comma);
  const std::string ys = text.substr(comma + 1);
  const double x = std::strtod(xs.c_str(), &end);
  if (end != xs.c_str() + xs.size() || xs.empty()) {
    throw UsageError("--root: bad X coordinate '" + xs + "'");
  }
  const double y = std::strtod(ys.c_str(), &end);
  if (end != ys.c_str() + ys.size() || ys.empty()) {
    throw UsageError("--root: bad Y coordinate '" + ys + "'");
  }
  return {x, y};
}

void write_output(const Options& opt, std::ostream& out,
                  const std::string& text) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw DomainError("cannot write '" + opt.output + "'");
  file << text;
}

NodeId smallest_node(const Graph& g) {
  NodeId best = g.nodes().front();
  for (NodeId n : g.nodes()) best = std::min(best, n);
  return best;
}

void require_complete(const Graph& g) {
  for (const auto& line : g.lines()) {
    if (line.is_half_line()) {
      throw DomainError("graph still has open half-line '" + *line.tag +
                        "'; pair it or run generate");
    }
  }
}

std::string json_table(const CountTable& table, const Tolerance& tol) {
  const CountTable merged = merge_counts(table, tol);
  std::string out = "{";
  bool first_cat = true;
  for (const Category cat :
       {Category::LineCount, Category::Node, Category::LineLength,
        Category::Angle, Category::RelAngle, Category::Proportion}) {
    std::string body;
    bool first = true;
    for (const auto& e : merged.entries) {
      if (e.category != cat) continue;
      std::string key;
      if (cat == Category::LineCount) {
        key = "l";
      } else if (e.node) {
        key = "n" + std::to_string(e.node->value);
      } else {
        key = format_number(e.value);
      }
      if (!first) body += ", ";
      body += "\"" + key + "\": " + std::to_string(e.count);
      first = false;
    }
    if (body.empty()) continue;
    if (!first_cat) out += ", ";
    out += std::string("\"") + category_name(cat) + "\": {" + body + "}";
    first_cat = false;
  }
  return out + "}\n";
}

std::string recognition_lines(const std::vector<Recognition>& rs) {
  std::string out;
  for (const auto& rec : rs) {
    out += rec.motif + " nodes=";
    for (std::size_t i = 0; i < rec.nodes.size(); ++i) {
      if (i > 0) out += ",";
      out += "n" + std::to_string(rec.nodes[i].value);
    }
    out += " scale=" + format_number(rec.scale) +
           " rotation=" + format_number(rec.rotation_deg) + "\n";
  }
  return out;
}

int cmd_analyze(const Options& opt, std::ostream& out) {
  Loaded loaded = load_input(opt.input, 0.0);
  Graph graph = merge_named_pairs(loaded.graph, opt.tol).graph;
  const CountTable table = tally_all(graph, opt.tol, opt.all_incidences);
  write_output(opt, out,
               opt.json ? json_table(table, opt.tol) : report(table, opt.tol));
  return 0;
}

int cmd_recognize(const Options& opt, std::ostream& out) {
  if (opt.builtin.empty() == opt.pattern_file.empty()) {
    throw UsageError("recognize: pass exactly one of --builtin or --pattern");
  }
  Loaded loaded = load_input(opt.input, 0.0);
  Graph graph = merge_named_pairs(loaded.graph, opt.tol).graph;
  require_complete(graph);

  std::vector<Recognition> found;
  if (!opt.builtin.empty()) {
    if (opt.builtin == "parallel") {
      found = find_parallel(graph, opt.tol);
    } else if (opt.builtin == "y_sign") {
      found = match_motif(graph, y_sign_pattern(), opt.tol);
    } else {
      throw UsageError("recognize: unknown builtin '" + opt.builtin +
                       "' (have: parallel, y_sign)");
    }
  } else {
    found = match_motif(graph, parse_pattern(read_file(opt.pattern_file)),
                        opt.tol);
  }
  if (opt.dedupe) found = dedupe_recognitions(found);
  write_output(opt, out, recognition_lines(found));
  return 0;
}

int cmd_generate(const Options& opt, std::ostream& out) {
  Loaded loaded = load_input(opt.input, 0.0);
  std::string text;
  long emitted = 0;
  exhaustive_generate(
      loaded.graph,
      [&](const Graph& result) {
        Graph resolved = resolve_coordinates(result, smallest_node(result),
                                             {0.0, 0.0}, 1.0, opt.tol);
        ++emitted;
        text += serialize_graph(
            resolved, loaded.name + "#" + std::to_string(emitted), true);
        return opt.limit < 0 || emitted < opt.limit;
      },
      opt.tol);
  write_output(opt, out, text);
  return 0;
}

int cmd_random(const Options& opt, std::ostream& out) {
  const NodeCorpus corpus = parse_corpus(read_file(opt.corpus_file));
  std::string text;
  long emitted = 0;
  random_generate(
      corpus, opt.seed, opt.attempts,
      [&](const Graph& result, const RandomDraw&) {
        Graph resolved = resolve_coordinates(result, smallest_node(result),
                                             {0.0, 0.0}, 1.0, opt.tol);
        ++emitted;
        text += serialize_graph(resolved,
                                "seed" + std::to_string(opt.seed) + "#" +
                                    std::to_string(emitted),
                                true);
        return true;
      },
      opt.tol);
  write_output(opt, out, text);
  return 0;
}

int cmd_render(const Options& opt, std::ostream& out) {
  Loaded loaded = load_input(opt.input, opt.base_angle);
  Graph graph = merge_named_pairs(loaded.graph, opt.tol).graph;
  require_complete(graph);

  Point root_point{0.0, 0.0};
  if (!opt.root.empty()) {
    root_point = parse_root(opt.root);
  } else if (loaded.anchor) {
    root_point = *loaded.anchor;
  }
  Graph resolved = resolve_coordinates(graph, smallest_node(graph), root_point,
                                       1.0, opt.tol);
  write_output(opt, out, to_svg(resolved));
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  Options opt;

  CLI::App app{"Mason's mark graphs: analysis, recognition, generation and "
               "SVG rendering"};
  app.require_subcommand(1);

  auto* analyze =
      app.add_subcommand("analyze", "Count-table statistics of a graph");
  analyze->add_option("input", opt.input, "graph JSON file")->required();
  analyze->add_flag("--json", opt.json, "emit JSON instead of a text table");
  analyze->add_flag("--all-incidences", opt.all_incidences,
                    "relative angles for all shared nodes, not only shared "
                    "start nodes");

  auto* recognize =
      app.add_subcommand("recognize", "Find motifs up to scale and rotation");
  recognize->add_option("input", opt.input, "graph JSON file")->required();
  recognize->add_option("--builtin", opt.builtin,
                        "built-in motif: parallel or y_sign");
  recognize->add_option("--pattern", opt.pattern_file, "pattern JSON file");
  recognize->add_flag("--dedupe", opt.dedupe,
                      "collapse recognitions with identical node sets");

  auto* generate = app.add_subcommand(
      "generate", "Exhaustively close open half-lines into valid graphs");
  generate->add_option("input", opt.input, "graph JSON file")->required();
  generate->add_option("--limit", opt.limit, "stop after N graphs");
  generate->add_option("-o,--output", opt.output, "write to a file");

  auto* random = app.add_subcommand(
      "random", "Randomly combine corpus nodes into new marks");
  random->add_option("--corpus", opt.corpus_file, "corpus JSON file")
      ->required();
  random->add_option("--seed", opt.seed, "random seed")->required();
  random->add_option("--attempts", opt.attempts, "number of draws");
  random->add_option("-o,--output", opt.output, "write to a file");

  auto* render = app.add_subcommand("render", "Render a graph as SVG");
  render->add_option("input", opt.input, "graph JSON file")->required();
  render->add_option("-o,--output", opt.output, "write to a file");
  render->add_option("--root", opt.root, "root point X,Y");
  render->add_option("--base-angle", opt.base_angle,
                     "azimuth of each node's first arm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    opt.tol = tolerance_from_env();
    if (analyze->parsed()) return cmd_analyze(opt, out);
    if (recognize->parsed()) return cmd_recognize(opt, out);
    if (generate->parsed()) return cmd_generate(opt, out);
    if (random->parsed()) return cmd_random(opt, out);
    if (render->parsed()) return cmd_render(opt, out);
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace glyphgraph::cli
