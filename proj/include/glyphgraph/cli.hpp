#ifndef GLYPHGRAPH_CLI_HPP
#define GLYPHGRAPH_CLI_HPP

#include <iosfwd>

namespace glyphgraph::cli {

// Runs one subcommand (analyze | recognize | generate | random | render).
// Returns 0 on success, 1 on domain or validation errors, 2 on usage
// errors. Tolerances honor the GLYPHGRAPH_TOLERANCE_ABS/REL/ANGLE
// environment variables.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace glyphgraph::cli

#endif  // GLYPHGRAPH_CLI_HPP
