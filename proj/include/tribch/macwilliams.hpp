#pragma once

#include <cstddef>
#include <vector>

#include "tribch/code.hpp"

namespace tribch {

/// Krawtchouk values K_k(x) for length N, one column per requested x, built
/// with the three-term recurrence in k:
///   (k+1) K_{k+1}(x) = (N - 2x) K_k(x) - (N - k + 1) K_{k-1}(x).
class KrawtchoukTable {
public:
    explicit KrawtchoukTable(std::size_t length) : length_(length) {}

    std::size_t length() const noexcept { return length_; }
    // K_0(x) .. K_N(x)
    std::vector<BigInt> column(std::size_t x) const;

private:
    std::size_t length_;
};

// Direct sum_j (-1)^j C(x, j) C(N - x, k - j).
BigInt krawtchouk_direct(std::size_t length, std::size_t k, std::size_t x);
BigInt binomial(std::size_t n, std::size_t k);

/// A_w(C) = 2^{-dual_dim} sum_v A_v(dual) K_w(v), exact. Throws
/// NonIntegralResult when a coefficient is negative or not an integer, and
/// InvalidArgument when the dual does not have 2^{dual_dim} words.
WeightDistribution macwilliams_transform(const WeightDistribution& dual, std::size_t dual_dim);

// A_0 = 1, A_1 .. A_6 = 0 and A_7 > 0.
bool verify_distance7(const WeightDistribution& dist);

} // namespace tribch
