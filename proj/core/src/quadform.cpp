#include "finearith/quadform.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "finearith/checked.hpp"

namespace finearith {

std::int64_t q_value(const FineParams& params, std::int64_t k, std::int64_t l) {
    const std::int64_t p = params.p(), r = params.r();
    // p(k^2 - l^2) + p(k + l) = p (k + l)(k - l + 1)
    const __int128 twice = static_cast<__int128>(p)
        * (static_cast<__int128>(k) + l) * (static_cast<__int128>(k) - l + 1);
    if ((twice & 1) != 0)
        throw invariant_error("q_value: half-integer parts failed to combine");
    const __int128 q = twice / 2 - static_cast<__int128>(l) * r;
    if (q > std::numeric_limits<std::int64_t>::max()
        || q < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("q_value: result exceeds 64-bit range");
    return static_cast<std::int64_t>(q);
}

std::vector<Representation> representations(const FineParams& params, std::int64_t n) {
    if (n < 0)
        throw std::invalid_argument("representations: n must be >= 0");
    const std::int64_t p = params.p(), r = params.r();
    std::vector<Representation> out;
    // 2Q = s(pt + p - r) + t r with s, t >= 0, s = t (mod 2); solve t per s.
    for (std::int64_t s = 0; s * (p - r) <= 2 * n; ++s) {
        const std::int64_t rem = 2 * n - s * (p - r);
        const std::int64_t den = s * p + r;
        if (rem % den != 0)
            continue;
        const std::int64_t t = rem / den;
        if ((s - t) % 2 != 0)
            continue;
        const std::int64_t k = (s + t) / 2;
        const std::int64_t l = (s - t) / 2;
        if (q_value(params, k, l) != n)
            throw invariant_error("representations: cone enumeration mismatch");
        out.push_back({k, l, (s % 2 == 0) ? +1 : -1});
    }
    std::sort(out.begin(), out.end(), [](const Representation& a, const Representation& b) {
        return a.k != b.k ? a.k < b.k : a.l < b.l;
    });
    return out;
}

ParityCounts parity_counts(const FineParams& params, std::int64_t n) {
    ParityCounts pc;
    for (const Representation& rep : representations(params, n))
        (rep.sign > 0 ? pc.even : pc.odd)++;
    return pc;
}

PowerSeries signed_series(const FineParams& params, int order) {
    if (order < 0)
        throw std::invalid_argument("signed_series: order must be >= 0");
    const std::int64_t p = params.p(), r = params.r();
    PowerSeries out = constant(0, order);
    const std::int64_t bound = 2 * static_cast<std::int64_t>(order);
    for (std::int64_t s = 0; s * (p - r) <= bound; ++s) {
        const int w = (s % 2 == 0) ? +1 : -1;
        const std::int64_t step = 2 * (s * p + r);
        // t = s % 2, s % 2 + 2, ...; twice_q is even whenever s = t (mod 2)
        std::int64_t twice_q = s * (p - r) + (s % 2) * (s * p + r);
        for (; twice_q <= bound; twice_q += step) {
            if (twice_q % 2 != 0)
                throw invariant_error("signed_series: odd doubled value");
            out.coeffs[twice_q / 2] = checked_add(out.coeffs[twice_q / 2], w);
        }
    }
    return out;
}

PowerSeries quaternary_signed_series(const FineParams& params, int order) {
    return shift(square(signed_series(params, order)), params.r());
}

std::int64_t quaternary_signed_count(const FineParams& params, std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("quaternary_signed_count: n must be >= 1");
    if (n < params.r())
        return 0;
    const PowerSeries sq = square(signed_series(params, static_cast<int>(n - params.r())));
    return sq.coeffs[static_cast<std::size_t>(n - params.r())];
}

std::int64_t quaternary_signed_count_direct(const FineParams& params, std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("quaternary_signed_count_direct: n must be >= 1");
    if (n < params.r())
        return 0;
    std::int64_t total = 0;
    for (std::int64_t m = 0; m <= n - params.r(); ++m) {
        const auto first = representations(params, m);
        const auto second = representations(params, n - params.r() - m);
        for (const Representation& a : first)
            for (const Representation& b : second)
                total = checked_add(total, static_cast<std::int64_t>(a.sign) * b.sign);
    }
    return total;
}

namespace {

BivariateSeries make_bivariate(int q_order, int z_half_width) {
    if (q_order < 0)
        throw std::invalid_argument("bivariate: q_order must be >= 0");
    if (z_half_width < 2 * q_order + 2)
        throw std::invalid_argument("bivariate: window too small, need L >= 2N + 2");
    BivariateSeries b;
    b.q_order = q_order;
    b.z_half_width = z_half_width;
    b.trusted_half_width = z_half_width - q_order;
    b.coeffs.assign(static_cast<std::size_t>(q_order + 1) * (2 * z_half_width + 1), 0);
    return b;
}

} // namespace

BivariateSeries andrews_product(int q_order, int z_half_width) {
    BivariateSeries b = make_bivariate(q_order, z_half_width);
    const int N = q_order, L = z_half_width;

    // n = 1 denominator: (1 - z^{-1})^{-1} = sum_{j>=0} z^{-j}, truncated.
    for (int j = 0; j <= L; ++j)
        b.at(0, -j) = 1;

    for (int n = 1; n <= N; ++n) {
        // numerator (1 - q^n)^2
        for (int rep = 0; rep < 2; ++rep)
            for (int m = N; m >= n; --m)
                for (int j = -L; j <= L; ++j)
                    b.at(m, j) = checked_sub(b.at(m, j), b.at(m - n, j));
        // (1 - z q^n)^{-1}: c'[m][j] = c[m][j] + c'[m-n][j-1]
        for (int m = n; m <= N; ++m)
            for (int j = -L + 1; j <= L; ++j)
                b.at(m, j) = checked_add(b.at(m, j), b.at(m - n, j - 1));
    }
    // (1 - z^{-1} q^{n-1})^{-1} for n >= 2: stride n - 1
    for (int a = 1; a <= N; ++a)
        for (int m = a; m <= N; ++m)
            for (int j = L - 1; j >= -L; --j)
                b.at(m, j) = checked_add(b.at(m, j), b.at(m - a, j + 1));
    return b;
}

BivariateSeries andrews_sum(int q_order, int z_half_width) {
    BivariateSeries b = make_bivariate(q_order, z_half_width);
    b.trusted_half_width = z_half_width; // finite sum, exact on the full window
    const int N = q_order, L = z_half_width;

    // s = 0: q-exponent 0 for every even t; z-exponent -t/2.
    for (int t = 0; t <= 2 * L; t += 2)
        b.at(0, -t / 2) = checked_add(b.at(0, -t / 2), 1);

    for (std::int64_t s = 1; s * 1 <= 2 * N; ++s) {
        const int w = (s % 2 == 0) ? +1 : -1;
        for (std::int64_t t = s % 2; s * (t + 1) <= 2 * N; t += 2) {
            const std::int64_t q = s * (t + 1) / 2;
            const std::int64_t l = (s - t) / 2;
            if (l < -L || l > L)
                continue;
            auto& c = b.at(static_cast<int>(q), static_cast<int>(l));
            c = checked_add(c, w);
        }
    }
    return b;
}

} // namespace finearith
