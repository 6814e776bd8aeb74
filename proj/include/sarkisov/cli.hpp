#pragma once

#include <iosfwd>

namespace sarkisov {

/// Entry point of the `sarkisov` tool. Exit status: 0 on success, 2 on
/// invalid input (bad flags, malformed tables, invalid systems), 1 when a
/// published identity fails to reproduce or the analyses are inconsistent.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sarkisov
