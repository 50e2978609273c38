#pragma once

namespace relwave::cli {

/// Full command-line surface of the relwave tool (subcommands packet, boost,
/// tomo, verify). Exit codes: 0 success, 1 runtime or check failure,
/// 2 invalid configuration.
int run(int argc, const char* const* argv);

}  // namespace relwave::cli
