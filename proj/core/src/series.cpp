#include "finearith/series.hpp"

#include <stdexcept>

#include "finearith/checked.hpp"

namespace finearith {

PowerSeries constant(std::int64_t c, int order) {
    if (order < 0)
        throw std::invalid_argument("constant: order must be >= 0");
    PowerSeries s;
    s.coeffs.assign(static_cast<std::size_t>(order) + 1, 0);
    s.coeffs[0] = c;
    return s;
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("multiply: order mismatch");
    const int n = a.order();
    PowerSeries out = constant(0, n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeffs[i] == 0)
            continue;
        for (int j = 0; i + j <= n; ++j) {
            out.coeffs[i + j] = checked_add(
                out.coeffs[i + j], checked_mul(a.coeffs[i], b.coeffs[j]));
        }
    }
    return out;
}

PowerSeries apply_factor(PowerSeries s, ProductFactor f) {
    if (f.stride < 1)
        throw std::invalid_argument("apply_factor: stride must be >= 1");
    const int n = s.order();
    const std::int64_t a = f.stride;
    for (int rep = 0; rep < (f.exponent < 0 ? -f.exponent : f.exponent); ++rep) {
        if (f.exponent > 0) {
            for (int i = n; i >= a; --i)
                s.coeffs[i] = checked_sub(s.coeffs[i], s.coeffs[i - a]);
        } else {
            for (int i = static_cast<int>(a); i <= n; ++i)
                s.coeffs[i] = checked_add(s.coeffs[i], s.coeffs[i - a]);
        }
    }
    return s;
}

PowerSeries fine_product(std::int64_t p, std::int64_t r, int order) {
    if (p < 2 || r <= 0 || r >= p)
        throw std::invalid_argument("fine_product: need p >= 2 and 0 < r < p");
    if (order < 0)
        throw std::invalid_argument("fine_product: order must be >= 0");
    PowerSeries s = constant(1, order);
    for (std::int64_t n = 1;; ++n) {
        const std::int64_t num = p * n;         // (1-q^{pn})^2
        const std::int64_t den1 = p * n - r;    // (1-q^{pn-r})^{-1}
        const std::int64_t den2 = p * (n - 1) + r; // (1-q^{pn-p+r})^{-1}
        // the smaller denominator stride is den1 when r > p/2
        if (den1 > order && den2 > order)
            break;
        if (num <= order)
            s = apply_factor(std::move(s), {num, +2});
        if (den1 <= order)
            s = apply_factor(std::move(s), {den1, -1});
        if (den2 <= order)
            s = apply_factor(std::move(s), {den2, -1});
    }
    return s;
}

PowerSeries fine_product(const FineParams& params, int order) {
    return fine_product(params.p(), params.r(), order);
}

PowerSeries shift(const PowerSeries& s, std::int64_t r) {
    if (r < 0 || r > s.order())
        throw std::invalid_argument("shift: need 0 <= r <= order");
    PowerSeries out = constant(0, s.order());
    for (int i = 0; i + r <= s.order(); ++i)
        out.coeffs[i + r] = s.coeffs[i];
    return out;
}

} // namespace finearith
