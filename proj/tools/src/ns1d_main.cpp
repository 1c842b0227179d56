#include "ns1d/cli.hpp"

int main(int argc, char** argv) { return ns1d::cli(argc, argv); }
