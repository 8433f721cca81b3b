#include "esh2d/cli.hpp"

int main(int argc, char** argv) { return esh2d::cli::run(argc, argv); }
