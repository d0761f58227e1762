#include "kf/log.hpp"

#include <cstdlib>
#include <iostream>

namespace kf {

int log_level() {
    static int level = [] {
        const char* v = std::getenv("KF_LOG");
        if (!v || !*v) return 0;
        char* end = nullptr;
        long n = std::strtol(v, &end, 10);
        if (end == v || n < 0) return 0;
        return static_cast<int>(n > 2 ? 2 : n);
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[kf] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() >= 2) std::cerr << "[kf:debug] " << msg << "\n";
}

}  // namespace kf
