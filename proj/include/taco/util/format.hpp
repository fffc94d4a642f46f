#pragma once

#include <string>

namespace taco::fmt {

// Lowercase scientific notation with 6 significant digits, e.g. "3.200000e-09".
// This is the normative number format for feedback lines and exported CSVs.
std::string sci6(double v);

// Shortest representation that round-trips a double exactly.
std::string roundtrip(double v);

} // namespace taco::fmt
