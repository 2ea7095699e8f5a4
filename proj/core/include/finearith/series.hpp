#pragma once

#include <cstdint>
#include <vector>

#include "finearith/params.hpp"

namespace finearith {

// Truncated formal power series over Z in the variable q. Coefficients of
// q^0 .. q^order are tracked; everything above the order is discarded.
// All arithmetic is exact: any coefficient leaving the signed 64-bit range
// throws std::overflow_error instead of wrapping.
struct PowerSeries {
    std::vector<std::int64_t> coeffs; // coeffs[n] is the coefficient of q^n

    int order() const { return static_cast<int>(coeffs.size()) - 1; }

    bool operator==(const PowerSeries&) const = default;
};

// One factor (1 - q^stride)^exponent of a product expansion.
struct ProductFactor {
    std::int64_t stride;   // >= 1
    int exponent;          // typically +-1 or +-2
};

// The series c * q^0 at the given truncation order.
PowerSeries constant(std::int64_t c, int order);

// Cauchy product truncated to the common order. Orders must match.
PowerSeries multiply(const PowerSeries& a, const PowerSeries& b);

inline PowerSeries square(const PowerSeries& s) { return multiply(s, s); }

// Multiplies s by (1 - q^a)^e in place of a generic division routine:
// e = +1 is c'_n = c_n - c_{n-a}, e = -1 is the prefix recurrence
// c'_n = c_n + c'_{n-a}. Each application is O(order).
PowerSeries apply_factor(PowerSeries s, ProductFactor f);

// Expansion of  prod_{n>=1} (1-q^{pn})^2 / ((1-q^{pn-r})(1-q^{pn-p+r}))
// truncated at the given order. Every factor with stride <= order is applied.
// Only 0 < r < p is required here; the formal product exists without the
// gcd hypotheses, which matter to callers interpreting the coefficients.
PowerSeries fine_product(std::int64_t p, std::int64_t r, int order);
PowerSeries fine_product(const FineParams& params, int order);

// Multiplies by q^r (drops the top r coefficients). Requires r <= order.
PowerSeries shift(const PowerSeries& s, std::int64_t r);

} // namespace finearith
