#include "gidx/cli_commands.hpp"

int main(int argc, char** argv) { return gidx::run_cli(argc, argv); }
