#pragma once

#include <cstdint>
#include <vector>

#include "finearith/params.hpp"

namespace finearith {

// Ascending positive divisors of n (trial division to sqrt n). n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

// D_{r,m}(n): number of positive divisors of n congruent to residue mod
// modulus. Residues are normalized into [0, modulus-1] first, so negative
// residues mean modulus - |residue|.
std::int64_t class_count(std::int64_t n, std::int64_t residue, std::int64_t modulus);

// E_r(n; m) = D_{r,m}(n) - D_{-r,m}(n).
std::int64_t excess(std::int64_t n, std::int64_t r, std::int64_t m);

// Sieve fast path for range sweeps: table[x] = excess(x, r, m) for
// 1 <= x <= limit (table[0] is 0).
std::vector<std::int64_t> excess_table(std::int64_t limit, std::int64_t r, std::int64_t m);

// Divisor-side coefficient of the unary identity:
// E_r(2pn + r(p-r); 2p). Requires the Strong level gcd(r, 2p) = 1.
std::int64_t fine1_coefficient(const FineParams& params, std::int64_t n);

// Divisor-side coefficient of the squared identity, n >= 1:
//   (1/p) * sum over d > 0, d | pn - r^2, d = r (mod p) of (d + (pn-r^2)/d).
// The discriminant pn - r^2 is never zero under gcd(r, p) = 1. Every summand
// is strictly positive and the sum is divisible by p; both are hard
// assertions (invariant_error), not domain errors.
std::int64_t fine2_coefficient(const FineParams& params, std::int64_t n);

// Sieve fast path: the fine2 coefficients for n = 1..n_max (index 0 unused).
// Asserts the same per-term positivity and divisibility invariants.
std::vector<std::int64_t> fine2_table(const FineParams& params, std::int64_t n_max);

} // namespace finearith
