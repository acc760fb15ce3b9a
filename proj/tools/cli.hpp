#pragma once
// Command-line front end. `run` is the whole program minus process setup,
// so tests can drive it with argument vectors.

#include <iosfwd>
#include <string>
#include <vector>

namespace braidcoh::cli {

/// args excludes the program name. Exit codes: 0 ok, 1 a `verify` criterion
/// failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidcoh::cli
