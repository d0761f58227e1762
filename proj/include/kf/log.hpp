// log.hpp — stderr logging gated by the KF_LOG environment variable:
// unset/0 = quiet, 1 = info, 2 = debug.
#pragma once

#include <string>

namespace kf {

int log_level();
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

}  // namespace kf
