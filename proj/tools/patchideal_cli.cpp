#include "patchideal/cli/cli.hpp"

int main(int argc, char** argv) { return patchideal::cli::run(argc, argv); }
