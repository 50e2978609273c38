#include "relwave/cli.hpp"

int main(int argc, char** argv) { return relwave::cli::run(argc, argv); }
