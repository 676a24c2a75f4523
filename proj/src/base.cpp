#include "base.hpp"

#include <cstdlib>

namespace mcg {

int worker_count() {
    const char* s = std::getenv("MCG_THREADS");
    if (!s || !*s) return 0;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    require(end && *end == '\0' && v >= 0 && v <= 256, errkind::invalid_input,
            "MCG_THREADS must be an integer in [0, 256]");
    return (int)v;
}

}  // namespace mcg
