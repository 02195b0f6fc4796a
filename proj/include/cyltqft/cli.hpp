// Command-line front end.
//
//   check-fsgrp FILE        validate a fibered semi-group, report rigidity
//   check-bimodule FILE     validate a bimodule and run the law suite on it
//   check-theory            audit a theory over a generated universe
//   verify-functor          audit, then check the double functor laws
//   build FILE              emit E_S for an object or Omega_M for a cobordism
//
// Exit codes: 0 when every check passes, 1 on a mathematical violation,
// 2 on an input or usage error.

#ifndef CYLTQFT_CLI_HPP_
#define CYLTQFT_CLI_HPP_

#include <ostream>

namespace cyltqft::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyltqft::cli

#endif  // CYLTQFT_CLI_HPP_
