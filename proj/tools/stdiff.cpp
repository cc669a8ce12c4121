#include "stdiff/cli.hpp"

int main(int argc, char** argv) { return stdiff::cli::run(argc, argv); }
