#include "gcodes/cli.hpp"

int main(int argc, char** argv) { return gcodes::cli_main(argc, argv); }
