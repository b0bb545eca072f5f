#pragma once

#include <stdexcept>
#include <string>

namespace surfhom {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

}  // namespace surfhom

// Always-on invariant check, independent of NDEBUG. Reserved for cheap
// checks that guard correctness contracts (capacity bounds, build-time
// structure); deep O(n) diagnostics use assert() instead.
#define SURFHOM_CHECK(cond, msg) \
    do {                         \
        if (!(cond)) ::surfhom::fail(msg); \
    } while (0)
