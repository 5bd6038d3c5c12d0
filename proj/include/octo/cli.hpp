#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace octo {

/// Exit codes: 0 success, 1 classification-count regression, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace octo
