#include "mono/cli.hpp"

int main(int argc, char** argv) { return mono::cli::run(argc, argv); }
