#include "sca/cli.hpp"

int main(int argc, char** argv) { return sca::run_cli(argc, argv); }
