#include "swcodes/cli.hpp"

int main(int argc, char** argv) { return swcodes::cli::run(argc, argv); }
