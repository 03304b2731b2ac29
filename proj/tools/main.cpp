#include "ntnsim/cli.hpp"

int main(int argc, char** argv) { return ntnsim::runCli(argc, argv); }
