#pragma once

namespace ntnsim {

// Entry point behind the ntnsim executable. Parses argv, runs the requested
// subcommand, and returns the process exit status: 0 on success, 1 when the
// command line or scenario fails validation, 2 on runtime failures.
int runCli(int argc, const char* const* argv);

}  // namespace ntnsim
