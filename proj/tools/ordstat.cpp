#include "ordstat/cli.hpp"

int main(int argc, char** argv) { return ordstat::main_cli(argc, argv); }
