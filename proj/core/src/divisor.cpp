#include "finearith/divisor.hpp"

#include <algorithm>
#include <stdexcept>

#include "finearith/checked.hpp"

namespace finearith {

namespace {

std::int64_t norm_mod(std::int64_t x, std::int64_t m) {
    std::int64_t v = x % m;
    return v < 0 ? v + m : v;
}

} // namespace

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<std::int64_t> low, high;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            low.push_back(d);
            if (d != n / d)
                high.push_back(n / d);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::int64_t class_count(std::int64_t n, std::int64_t residue, std::int64_t modulus) {
    if (n < 1)
        throw std::invalid_argument("class_count: n must be >= 1");
    if (modulus < 1)
        throw std::invalid_argument("class_count: modulus must be >= 1");
    const std::int64_t target = norm_mod(residue, modulus);
    std::int64_t count = 0;
    for (std::int64_t d : divisors(n))
        if (d % modulus == target)
            ++count;
    return count;
}

std::int64_t excess(std::int64_t n, std::int64_t r, std::int64_t m) {
    return class_count(n, r, m) - class_count(n, -r, m);
}

std::vector<std::int64_t> excess_table(std::int64_t limit, std::int64_t r, std::int64_t m) {
    if (limit < 0)
        throw std::invalid_argument("excess_table: limit must be >= 0");
    if (m < 1)
        throw std::invalid_argument("excess_table: modulus must be >= 1");
    const std::int64_t pos = norm_mod(r, m);
    const std::int64_t neg = norm_mod(-r, m);
    std::vector<std::int64_t> table(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t d = 1; d <= limit; ++d) {
        const std::int64_t res = d % m;
        std::int64_t w = 0;
        if (res == pos) w += 1;
        if (res == neg) w -= 1;
        if (w == 0)
            continue;
        for (std::int64_t x = d; x <= limit; x += d)
            table[x] += w;
    }
    return table;
}

std::int64_t fine1_coefficient(const FineParams& params, std::int64_t n) {
    params.require_strong();
    if (n < 0)
        throw std::invalid_argument("fine1_coefficient: n must be >= 0");
    const std::int64_t p = params.p(), r = params.r();
    const std::int64_t arg = checked_add(checked_mul(2 * p, n), r * (p - r));
    return excess(arg, r, 2 * p);
}

std::int64_t fine2_coefficient(const FineParams& params, std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("fine2_coefficient: n must be >= 1");
    const std::int64_t p = params.p(), r = params.r();
    const std::int64_t disc = checked_sub(checked_mul(p, n), r * r);
    if (disc == 0)
        throw invariant_error("fine2_coefficient: zero discriminant under gcd(r,p)=1");
    const std::int64_t target = norm_mod(r, p);
    std::int64_t sum = 0;
    for (std::int64_t d : divisors(disc < 0 ? -disc : disc)) {
        if (d % p != target)
            continue;
        const std::int64_t term = checked_add(d, disc / d);
        if (term <= 0)
            throw invariant_error("fine2_coefficient: non-positive summand d + delta");
        sum = checked_add(sum, term);
    }
    if (sum % p != 0)
        throw invariant_error("fine2_coefficient: divisor sum not divisible by p");
    return sum / p;
}

std::vector<std::int64_t> fine2_table(const FineParams& params, std::int64_t n_max) {
    if (n_max < 1)
        throw std::invalid_argument("fine2_table: n_max must be >= 1");
    const std::int64_t p = params.p(), r = params.r();
    std::vector<std::int64_t> table(static_cast<std::size_t>(n_max) + 1, 0);

    // Positive discriminants M = pn - r^2 > 0: enumerate d = r (mod p) and its
    // multiples M; the co-divisor congruence makes (M + r^2)/p an integer n.
    const std::int64_t max_disc = p * n_max - r * r;
    const std::int64_t d0 = norm_mod(r, p) == 0 ? p : norm_mod(r, p);
    for (std::int64_t d = d0; d <= max_disc; d += p) {
        for (std::int64_t m = d; m <= max_disc; m += d) {
            if ((m + r * r) % p != 0)
                continue;
            const std::int64_t n = (m + r * r) / p;
            if (n < 1 || n > n_max)
                continue;
            const std::int64_t term = checked_add(d, m / d);
            if (term <= 0)
                throw invariant_error("fine2_table: non-positive summand");
            table[n] = checked_add(table[n], term);
        }
    }

    // Negative discriminants occur only while pn < r^2; trial-divide those few n.
    for (std::int64_t n = 1; n <= n_max && p * n < r * r; ++n) {
        const std::int64_t disc = p * n - r * r;
        std::int64_t sum = 0;
        for (std::int64_t d : divisors(-disc)) {
            if (d % p != norm_mod(r, p))
                continue;
            const std::int64_t term = checked_add(d, disc / d);
            if (term <= 0)
                throw invariant_error("fine2_table: non-positive summand");
            sum = checked_add(sum, term);
        }
        table[n] = sum;
    }

    for (std::int64_t n = 1; n <= n_max; ++n) {
        if (table[n] % p != 0)
            throw invariant_error("fine2_table: divisor sum not divisible by p");
        table[n] /= p;
    }
    return table;
}

} // namespace finearith
