#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finearith/divisor.hpp"
#include "finearith/params.hpp"
#include "finearith/quadform.hpp"

namespace finearith {

enum class IdentityId { Fine1, Fine2, Thm1, Thm2, Cor1, Cor2, Andrews };

std::string identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(const std::string& name);

// A counterexample: the index n and the disagreeing route values in the
// order the verifier computed them.
struct Counterexample {
    std::int64_t n;
    std::vector<std::int64_t> route_values;
};

struct VerificationReport {
    IdentityId id;
    std::optional<FineParams> params; // absent for the bivariate check
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
    bool pass = true;
    std::int64_t checked_count = 0;
    std::int64_t failure_count = 0;
    std::optional<Counterexample> first_failure;
    // Count of n where pn - r^2 < 0, where the literal "delta d = pn - r^2"
    // reading could differ from the positive-divisor rewriting in use.
    std::int64_t flagged_count = 0;
};

// Product expansion vs divisor excess, 0 <= n <= n_max. Strong level.
VerificationReport verify_fine1(const FineParams& params, std::int64_t n_max);

// Three-way: divisor excess == signed cone count == product coefficient.
VerificationReport verify_thm1(const FineParams& params, std::int64_t n_max);

// Three-way for the squared identity, 1 <= n <= n_max: divisor sum / p ==
// coefficient of q^n in q^r F^2 == signed quadruple count (series route).
VerificationReport verify_thm2(const FineParams& params, std::int64_t n_max);

// Non-negativity of the signed quadruple count, plus per-term positivity of
// the divisor sum, 1 <= n <= n_max. Weak level.
VerificationReport verify_cor2(const FineParams& params, std::int64_t n_max);

// Bivariate product vs cone double sum on all trusted coefficients.
VerificationReport verify_andrews(int q_order, int z_half_width);

enum class Verdict { Balanced, Positive, Negative };

std::string verdict_name(Verdict v);

struct Classification {
    std::int64_t n;
    ParityCounts parity;
    std::int64_t excess_value; // E_r at the divisor-side argument 2pn + r(p-r)
    Verdict verdict;
};

// Per-n classifier: the excess sign equals the parity imbalance of the
// representation list. Internal coherence is asserted.
Classification classify(const FineParams& params, std::int64_t n);

// Default sweep grid used by the CLI and the full self-check.
inline constexpr std::int64_t kDefaultSweepPMax = 12;
inline constexpr std::int64_t kDefaultIdentityRange = 500;
inline constexpr std::int64_t kDefaultCor2Range = 5000;

// All identities over all valid (p, r) with 2 <= p <= p_max: fine1/thm1 for
// Strong pairs, thm2/cor2 for all pairs, plus one Andrews check.
std::vector<VerificationReport> sweep(std::int64_t p_max, std::int64_t n_max);

} // namespace finearith
