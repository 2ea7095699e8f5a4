#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace finearith {

// Thrown when an internal invariant is violated (divisibility failures,
// term-sign violations). Distinct from std::invalid_argument (bad caller
// input) and std::overflow_error (coefficient left the 64-bit range).
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in multiplication");
    return r;
}

} // namespace finearith
