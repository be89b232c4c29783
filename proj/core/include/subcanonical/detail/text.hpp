#pragma once

#include <sstream>
#include <string>

namespace subc::detail {

template <typename... Args>
std::string cat(Args&&... args) {
    std::ostringstream ss;
    (ss << ... << args);
    return ss.str();
}

}  // namespace subc::detail
