#include "commands.hpp"

int main(int argc, char** argv) { return spectra_cli::run(argc, argv); }
