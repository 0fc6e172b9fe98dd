#include "cli.hpp"

int main(int argc, char** argv) { return p3c::cli::cli_main(argc, argv); }
