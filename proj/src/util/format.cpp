#include "taco/util/format.hpp"

#include <charconv>
#include <cstdio>

namespace taco::fmt {

std::string sci6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.5e", v);
    return buf;
}

std::string roundtrip(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace taco::fmt
