#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brauer {

// Dispatches one CLI invocation. Returns 0 on success, 1 on a domain error
// (message on err), 2 on a usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace brauer
