#include "eisenpole/cli.hpp"

int main(int argc, char** argv) { return eisenpole::run_cli(argc, argv); }
