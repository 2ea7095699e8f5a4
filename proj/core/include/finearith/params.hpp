#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace finearith {

// Hypothesis level for the pair (p, r):
//   Strong: gcd(r, 2p) = 1   (needed by the unary identities and the classifier)
//   Weak:   gcd(r, p)  = 1   (sufficient for the squared identities)
enum class ParamLevel { Weak, Strong };

// The parameter pair (p, r) with 0 < r < p and gcd(r, p) = 1.
// p is not required to be prime.
class FineParams {
public:
    FineParams(std::int64_t p, std::int64_t r) : p_(p), r_(r) {
        if (p < 2)
            throw std::invalid_argument("FineParams: p must be >= 2");
        if (r <= 0 || r >= p)
            throw std::invalid_argument("FineParams: need 0 < r < p");
        if (std::gcd(r, p) != 1)
            throw std::invalid_argument("FineParams: need gcd(r, p) = 1");
        level_ = (std::gcd(r, 2 * p) == 1) ? ParamLevel::Strong : ParamLevel::Weak;
    }

    std::int64_t p() const { return p_; }
    std::int64_t r() const { return r_; }
    ParamLevel level() const { return level_; }
    bool strong() const { return level_ == ParamLevel::Strong; }

    void require_strong() const {
        if (!strong())
            throw std::invalid_argument("parameter pair requires gcd(r, 2p) = 1");
    }

private:
    std::int64_t p_;
    std::int64_t r_;
    ParamLevel level_;
};

} // namespace finearith
