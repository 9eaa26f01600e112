#include "gerbe/cli.hpp"

int main(int argc, char** argv) { return gerbe::run_main(argc, argv); }
