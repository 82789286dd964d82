#include "qheun/cli.hpp"

int main(int argc, char** argv) { return qheun::cli_main(argc, argv); }
