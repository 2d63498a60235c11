#pragma once

namespace spectra_cli {

/// Dispatches the subcommands; exit code 0 on positive verdicts, 1 on
/// negative verdicts, 2 on input/usage errors.
int run(int argc, char** argv);

}  // namespace spectra_cli
