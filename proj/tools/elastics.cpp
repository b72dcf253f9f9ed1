#include "elastics/cli/app.hpp"

int main(int argc, char** argv) { return elastics::cli::main(argc, argv); }
