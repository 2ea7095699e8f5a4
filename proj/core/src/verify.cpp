#include "finearith/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "finearith/checked.hpp"
#include "finearith/series.hpp"

namespace finearith {

std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::Fine1: return "fine1";
        case IdentityId::Fine2: return "fine2";
        case IdentityId::Thm1: return "thm1";
        case IdentityId::Thm2: return "thm2";
        case IdentityId::Cor1: return "cor1";
        case IdentityId::Cor2: return "cor2";
        case IdentityId::Andrews: return "andrews";
    }
    return "unknown";
}

std::optional<IdentityId> identity_from_name(const std::string& name) {
    if (name == "fine1") return IdentityId::Fine1;
    if (name == "fine2") return IdentityId::Fine2;
    if (name == "thm1") return IdentityId::Thm1;
    if (name == "thm2") return IdentityId::Thm2;
    if (name == "cor1") return IdentityId::Cor1;
    if (name == "cor2") return IdentityId::Cor2;
    if (name == "andrews") return IdentityId::Andrews;
    return std::nullopt;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Balanced: return "balanced";
        case Verdict::Positive: return "positive";
        case Verdict::Negative: return "negative";
    }
    return "unknown";
}

namespace {

// Records a per-n comparison; keeps the first counterexample and counts all.
void record(VerificationReport& rep, std::int64_t n,
            std::vector<std::int64_t> routes) {
    ++rep.checked_count;
    const bool ok = std::all_of(routes.begin(), routes.end(),
                                [&](std::int64_t v) { return v == routes.front(); });
    if (!ok) {
        ++rep.failure_count;
        rep.pass = false;
        if (!rep.first_failure)
            rep.first_failure = Counterexample{n, std::move(routes)};
    }
}

void check_range(std::int64_t n_max) {
    if (n_max < 0)
        throw std::invalid_argument("verify: n_max must be >= 0");
}

} // namespace

VerificationReport verify_fine1(const FineParams& params, std::int64_t n_max) {
    params.require_strong();
    check_range(n_max);
    const std::int64_t p = params.p(), r = params.r();
    VerificationReport rep{IdentityId::Fine1, params, 0, n_max};
    const PowerSeries prod = fine_product(params, static_cast<int>(n_max));
    const auto table = excess_table(2 * p * n_max + r * (p - r), r, 2 * p);
    for (std::int64_t n = 0; n <= n_max; ++n)
        record(rep, n, {prod.coeffs[n], table[2 * p * n + r * (p - r)]});
    return rep;
}

VerificationReport verify_thm1(const FineParams& params, std::int64_t n_max) {
    params.require_strong();
    check_range(n_max);
    const std::int64_t p = params.p(), r = params.r();
    VerificationReport rep{IdentityId::Thm1, params, 0, n_max};
    const auto table = excess_table(2 * p * n_max + r * (p - r), r, 2 * p);
    const PowerSeries cone = signed_series(params, static_cast<int>(n_max));
    const PowerSeries prod = fine_product(params, static_cast<int>(n_max));
    for (std::int64_t n = 0; n <= n_max; ++n)
        record(rep, n, {table[2 * p * n + r * (p - r)], cone.coeffs[n], prod.coeffs[n]});
    return rep;
}

VerificationReport verify_thm2(const FineParams& params, std::int64_t n_max) {
    check_range(n_max);
    if (n_max < params.r())
        throw std::invalid_argument("verify_thm2: n_max must be >= r");
    VerificationReport rep{IdentityId::Thm2, params, 1, n_max};
    const auto divisor_route = fine2_table(params, n_max);
    const PowerSeries product_route =
        shift(square(fine_product(params, static_cast<int>(n_max))), params.r());
    const PowerSeries cone_route = quaternary_signed_series(params, static_cast<int>(n_max));
    for (std::int64_t n = 1; n <= n_max; ++n) {
        if (params.p() * n < params.r() * params.r())
            ++rep.flagged_count;
        record(rep, n, {divisor_route[n], product_route.coeffs[n], cone_route.coeffs[n]});
    }
    return rep;
}

VerificationReport verify_cor2(const FineParams& params, std::int64_t n_max) {
    check_range(n_max);
    VerificationReport rep{IdentityId::Cor2, params, 1, n_max};
    const PowerSeries quat = quaternary_signed_series(params, static_cast<int>(n_max));
    // fine2_table asserts the per-term positivity from the proof en route.
    const auto divisor_route = fine2_table(params, n_max);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        ++rep.checked_count;
        if (quat.coeffs[n] < 0 || divisor_route[n] < 0) {
            ++rep.failure_count;
            rep.pass = false;
            if (!rep.first_failure)
                rep.first_failure = Counterexample{n, {quat.coeffs[n], divisor_route[n]}};
        }
    }
    return rep;
}

VerificationReport verify_andrews(int q_order, int z_half_width) {
    const BivariateSeries prod = andrews_product(q_order, z_half_width);
    const BivariateSeries sum = andrews_sum(q_order, z_half_width);
    const int trusted = prod.trusted_half_width;
    VerificationReport rep{IdentityId::Andrews, std::nullopt, 0, q_order};
    for (int m = 0; m <= q_order; ++m) {
        for (int j = -trusted; j <= trusted; ++j) {
            ++rep.checked_count;
            if (prod.get(m, j) != sum.get(m, j)) {
                ++rep.failure_count;
                rep.pass = false;
                if (!rep.first_failure)
                    rep.first_failure = Counterexample{m, {j, prod.get(m, j), sum.get(m, j)}};
            }
        }
    }
    return rep;
}

Classification classify(const FineParams& params, std::int64_t n) {
    params.require_strong();
    if (n < 0)
        throw std::invalid_argument("classify: n must be >= 0");
    Classification c;
    c.n = n;
    c.parity = parity_counts(params, n);
    c.excess_value = fine1_coefficient(params, n);
    if (c.parity.even - c.parity.odd != c.excess_value)
        throw invariant_error("classify: parity imbalance disagrees with divisor excess");
    c.verdict = c.excess_value == 0 ? Verdict::Balanced
              : c.excess_value > 0  ? Verdict::Positive
                                    : Verdict::Negative;
    return c;
}

std::vector<VerificationReport> sweep(std::int64_t p_max, std::int64_t n_max) {
    if (p_max < 2)
        throw std::invalid_argument("sweep: p_max must be >= 2");
    check_range(n_max);
    std::vector<VerificationReport> reports;
    for (std::int64_t p = 2; p <= p_max; ++p) {
        for (std::int64_t r = 1; r < p; ++r) {
            if (std::gcd(r, p) != 1)
                continue;
            FineParams params(p, r);
            if (params.strong()) {
                reports.push_back(verify_fine1(params, n_max));
                reports.push_back(verify_thm1(params, n_max));
            }
            if (n_max >= r)
                reports.push_back(verify_thm2(params, n_max));
            reports.push_back(verify_cor2(params, n_max));
        }
    }
    const int andrews_order = static_cast<int>(std::min<std::int64_t>(n_max, 20));
    reports.push_back(verify_andrews(andrews_order, 2 * andrews_order + 2));
    return reports;
}

} // namespace finearith
