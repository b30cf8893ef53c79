#pragma once

namespace gaitplan {

/// Command-line entry point (subcommands: plan, sweep, validate, fit).
/// Returns 0 on success, 1 on usage error, 2 on computation error.
int cli_main(int argc, const char* const* argv);

} // namespace gaitplan
