#include "commands.hpp"

#include <cstdio>

namespace spectra_cli {

int run(int argc, char** argv) {
  (void)argc;
  (void)argv;
  std::puts("placeholder");
  return 2;
}

}  // namespace spectra_cli
