#include "nhnet/scenario.hpp"

int main(int argc, char** argv) { return nhnet::cli_main(argc, argv); }
