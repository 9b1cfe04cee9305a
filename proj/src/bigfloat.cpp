#include "skein/bigfloat.hpp"

#include <cstdio>
#include <vector>

namespace skein {

std::string Real::to_string(int digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
    return std::string(buf.data());
}

}  // namespace skein
