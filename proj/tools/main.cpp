#include "farq/cli.hpp"

int main(int argc, char** argv) { return farq::cli_main(argc, argv); }
