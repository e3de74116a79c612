#pragma once

namespace copgraph {

/* Command line front end. Exit codes:
 *   0  success (including calibration that reports unreachable)
 *   1  usage, parse or input errors
 *   2  numerical failure */
int run_cli(int argc, char** argv);

} // namespace copgraph
