#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace verl {

/**
 * Runs one CLI invocation. args[0] is the program name.
 *
 * Subcommands: show, cosets, transfer, det, sign, verify. Returns 0 on
 * success, 1 when verification finds a failing check, 2 on usage, parse or
 * validation errors (message on err).
 */
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace verl
