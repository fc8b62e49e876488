#pragma once

#include <string>

namespace qirc {

/// Formats a double with 17 significant digits so that the printed form
/// parses back to the identical bit pattern.
std::string format_double(double value);

}  // namespace qirc
