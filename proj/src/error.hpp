#pragma once

#include <stdexcept>
#include <string>

namespace moca {

enum class errc {
    ok = 0,
    invalid_argument,
    dimension,
    range,
    precondition,
    verification,
    parse,
    not_an_edge,
    unsupported,
    buffer,
};

class error : public std::runtime_error {
  public:
    error(errc c, const std::string &msg) : std::runtime_error(msg), code(c) {}
    errc code;
};

[[noreturn]] inline void fail(errc c, const std::string &msg) {
    throw error(c, msg);
}

} // namespace moca
