#include "hdiv/cli.hpp"

int main(int argc, char** argv) { return hdiv::run_cli(argc, argv); }
