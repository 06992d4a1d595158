#pragma once

// The cbtool command-line interface.

#include "cblocks/liealg.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cblocks {

/// Parses a weight list such as "1,1,1,1" (rank-1 algebras), "1,0;0,1",
/// "w1 w2", "w1^6" or "0;w2^3". Tokens are separated by ';' or whitespace;
/// "^k" (also "xk") repeats a token k times.
std::vector<Weight> parse_weight_list(const SimpleAlgebra& alg, std::string_view text);

/// Runs cbtool with the given arguments (argv[0] is the program name).
/// Returns the process exit code: 0 success, 1 failed verification or
/// internal error, 2 bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cblocks
