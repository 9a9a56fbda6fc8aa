#pragma once

namespace hyperlap {

/// Full command-line entry point; returns the process exit status
/// (0 success, 1 usage or domain error, 2 verification failure).
int run_cli(int argc, char** argv);

}  // namespace hyperlap
