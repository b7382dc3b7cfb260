#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conclab {

// Exit codes: 0 success, 1 validation or usage error, 2 numerical assertion
// failure (SpectralLeak).
int cli_main(int argc, char** argv);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conclab
