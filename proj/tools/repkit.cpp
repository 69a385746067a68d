#include "repkit/cli.hpp"

int main(int argc, char** argv) { return repkit::cli::main_entry(argc, argv); }
