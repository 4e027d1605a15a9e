#include "hua/cli.hpp"

int main(int argc, char** argv) { return hua::cli::main(argc, argv); }
