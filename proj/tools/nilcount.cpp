#include "nilsemi/cli.hpp"

int main(int argc, char** argv) { return nilsemi::cli::run(argc, argv); }
