#include "kmetric/cli.hpp"

int main(int argc, char** argv) { return kmetric::run_cli(argc, argv); }
