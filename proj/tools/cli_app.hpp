#ifndef PBZLAT_CLI_APP_HPP
#define PBZLAT_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pbzlat {

/// Runs one command. Exit codes: 0 success / property holds, 1 property
/// fails or countermodel found, 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbzlat

#endif
