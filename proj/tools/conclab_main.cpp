#include "conclab/cli.hpp"

int main(int argc, char** argv) { return conclab::cli_main(argc, argv); }
