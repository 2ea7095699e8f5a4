#pragma once

#include <cstdint>
#include <vector>

#include "finearith/params.hpp"
#include "finearith/series.hpp"

namespace finearith {

// One lattice point (k, l) in the cone k >= |l|, weighted by (-1)^{k+l}.
struct Representation {
    std::int64_t k;
    std::int64_t l;
    int sign; // +1 iff k + l is even

    bool operator==(const Representation&) const = default;
};

struct ParityCounts {
    std::int64_t even = 0; // representations with k + l even
    std::int64_t odd = 0;

    bool operator==(const ParityCounts&) const = default;
};

// Q_{r,p}(k, l) = p(k^2 - l^2)/2 + p(k + l)/2 - l r, evaluated exactly.
// The half-integer parts always combine to an integer; asserted.
// Evaluation is total (no cone check).
std::int64_t q_value(const FineParams& params, std::int64_t k, std::int64_t l);

// All (k, l) with k >= |l| and Q_{r,p}(k, l) = n, sorted lexicographically
// by (k, l). Enumerated in cone coordinates s = k+l, t = k-l, where
// 2 Q = s(pt + p - r) + t r gives finite bounds.
std::vector<Representation> representations(const FineParams& params, std::int64_t n);

ParityCounts parity_counts(const FineParams& params, std::int64_t n);

// Coefficient of q^n is (even - odd) over representations of n, for all
// n <= order; computed by one (s, t) sweep, not per-n enumeration.
PowerSeries signed_series(const FineParams& params, int order);

// q^r times the Cauchy square of signed_series, truncated at `order`:
// coefficient of q^n is the signed count of cone quadruples with
// Q(k1,l1) + Q(k2,l2) = n - r.
PowerSeries quaternary_signed_series(const FineParams& params, int order);

// The signed quadruple count for a single n (series route). 0 for n < r.
std::int64_t quaternary_signed_count(const FineParams& params, std::int64_t n);

// Independent oracle: literally enumerates quadruples via pairs of
// representation lists. O(n * area^2); intended for small n only.
std::int64_t quaternary_signed_count_direct(const FineParams& params, std::int64_t n);

// Truncated bivariate Laurent series: q-orders 0..q_order, z-exponents
// -z_half_width..z_half_width. Window truncation can contaminate entries
// near the window edge; only |z-exponent| <= trusted_half_width is certified.
struct BivariateSeries {
    int q_order;
    int z_half_width;
    int trusted_half_width;
    std::vector<std::int64_t> coeffs; // row-major, (q_order+1) x (2*z_half_width+1)

    std::int64_t& at(int q_pow, int z_exp) {
        return coeffs[static_cast<std::size_t>(q_pow) * (2 * z_half_width + 1)
                      + (z_exp + z_half_width)];
    }
    std::int64_t get(int q_pow, int z_exp) const {
        return coeffs[static_cast<std::size_t>(q_pow) * (2 * z_half_width + 1)
                      + (z_exp + z_half_width)];
    }
};

// prod_{n>=1} (1-q^n)^2 / ((1-z q^n)(1-z^{-1} q^{n-1})) as a truncated
// bivariate series. The n=1 denominator is the pure-z factor
// (1-z^{-1})^{-1} = sum_{j>=0} z^{-j}. Requires L >= 2N + 2; the result's
// trusted_half_width is L - N.
BivariateSeries andrews_product(int q_order, int z_half_width);

// The cone double sum  sum_{k >= |l|} (-1)^{k+l} z^l q^{(k^2-l^2)/2 + (k+l)/2},
// clipped to the window. A finite sum, exact on the whole window.
BivariateSeries andrews_sum(int q_order, int z_half_width);

} // namespace finearith
