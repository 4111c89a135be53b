#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "olapcube/errors.hpp"

namespace olapcube {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* context) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
        throw ArithmeticOverflow(std::string(context) + ": 64-bit sum overflow");
    }
    return a + b;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* context) {
    if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
        throw ArithmeticOverflow(std::string(context) + ": 64-bit product overflow");
    }
    return a * b;
}

}  // namespace olapcube
