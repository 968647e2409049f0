#include "tribch/macwilliams.hpp"

#include "tribch/error.hpp"

namespace tribch {

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt krawtchouk_direct(std::size_t length, std::size_t k, std::size_t x) {
    BigInt sum = 0;
    for (std::size_t j = 0; j <= k; ++j) {
        const BigInt term = binomial(x, j) * binomial(length - x, k - j);
        if (j % 2 == 0) sum += term; else sum -= term;
    }
    return sum;
}

std::vector<BigInt> KrawtchoukTable::column(std::size_t x) const {
    const std::size_t n = length_;
    std::vector<BigInt> col(n + 1);
    col[0] = 1;
    if (n == 0) return col;
    const BigInt slope = BigInt(static_cast<long long>(n)) - 2 * static_cast<long long>(x);
    col[1] = slope;
    for (std::size_t k = 1; k < n; ++k) {
        BigInt next = slope * col[k] - BigInt(n - k + 1) * col[k - 1];
        col[k + 1] = next / (k + 1);
    }
    return col;
}

WeightDistribution macwilliams_transform(const WeightDistribution& dual, std::size_t dual_dim) {
    const std::size_t n = dual.length();
    const BigInt size = BigInt(1) << dual_dim;
    if (dual.total() != size) {
        throw InvalidArgument("dual distribution has " + dual.total().str() + " words, expected 2^" +
                              std::to_string(dual_dim));
    }
    const KrawtchoukTable table(n);
    std::vector<BigInt> acc(n + 1, 0);
    for (std::size_t v = 0; v <= n; ++v) {
        if (dual.coefficients[v] == 0) continue;
        const std::vector<BigInt> col = table.column(v);
        for (std::size_t w = 0; w <= n; ++w) acc[w] += dual.coefficients[v] * col[w];
    }
    WeightDistribution out(n);
    for (std::size_t w = 0; w <= n; ++w) {
        BigInt quot;
        BigInt rem;
        boost::multiprecision::divide_qr(acc[w], size, quot, rem);
        if (rem != 0 || quot < 0) {
            throw NonIntegralResult("MacWilliams coefficient A_" + std::to_string(w) + " = " +
                                    acc[w].str() + " / 2^" + std::to_string(dual_dim));
        }
        out.coefficients[w] = quot;
    }
    return out;
}

bool verify_distance7(const WeightDistribution& dist) {
    const auto& a = dist.coefficients;
    if (a.size() < 8 || a[0] != 1) return false;
    for (std::size_t w = 1; w <= 6; ++w) {
        if (a[w] != 0) return false;
    }
    return a[7] > 0;
}

} // namespace tribch
