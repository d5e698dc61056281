#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wpbc {

// Command dispatch for the weylpbc binary; args excludes the program name.
// Exit codes: 0 success (and verdict "isomorphism"), 1 verdict
// "not-isomorphism" from check/witness, 2 input or usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace wpbc
