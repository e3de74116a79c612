#include "copgraph/cli.hpp"

int main(int argc, char** argv) { return copgraph::run_cli(argc, argv); }
