#include "starsdym/cli.hpp"

int main(int argc, char** argv) { return starsdym::cli::run(argc, argv); }
