#pragma once

#include <string>

namespace fracplast::csv {

/// Positional decimal with 17 significant digits, trailing zeros removed
/// ("0" for zero).  Round-trips every finite double exactly.
std::string format_decimal(double value);

}  // namespace fracplast::csv
