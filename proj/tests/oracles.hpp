#pragma once

// Slow reference implementations shared by the tests. None of them call the
// library's arithmetic; they work on raw GF(2)[x] bitmasks.

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

inline unsigned deg(std::uint64_t p) { return 63 - static_cast<unsigned>(std::countl_zero(p)); }

// Schoolbook carryless product followed by long division.
inline std::uint64_t pmod(std::uint64_t a, std::uint64_t m) {
    const unsigned dm = deg(m);
    while (a != 0 && deg(a) >= dm) a ^= m << (deg(a) - dm);
    return a;
}

inline std::uint64_t pmulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t acc = 0;
    a = pmod(a, m);
    for (unsigned i = 0; i < 64 && (b >> i); ++i) {
        if ((b >> i) & 1) acc ^= a;
        a <<= 1;
        if ((a >> deg(m)) & 1) a ^= m;
    }
    return acc;
}

inline std::uint64_t pgcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a = pmod(a, b);
        std::swap(a, b);
    }
    return a;
}

// Rabin: p of degree n is irreducible iff x^(2^n) = x mod p and
// gcd(x^(2^(n/q)) - x, p) = 1 for each prime q | n.
inline bool rabin_irreducible(std::uint64_t p) {
    const unsigned n = deg(p);
    auto frob = [&](unsigned times) {
        std::uint64_t r = 2;
        for (unsigned i = 0; i < times; ++i) r = pmulmod(r, r, p);
        return r;
    };
    if (frob(n) != pmod(2, p)) return false;
    for (unsigned q = 2; q <= n; ++q) {
        bool prime = true;
        for (unsigned d = 2; d * d <= q; ++d) prime = prime && (q % d != 0);
        if (!prime || n % q != 0) continue;
        if (pgcd(frob(n / q) ^ pmod(2, p), p) != 1) return false;
    }
    return true;
}

struct Field {
    unsigned n;
    std::uint64_t mod;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(pmulmod(a, b, mod));
    }
    std::uint32_t pow(std::uint32_t x, std::uint64_t e) const {
        std::uint32_t r = 1;
        for (std::uint64_t i = 0; i < e; ++i) r = mul(r, x);
        return r;
    }
    // Square-and-multiply, for large exponents.
    std::uint32_t fast_pow(std::uint32_t x, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e != 0) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }
    bool trace(std::uint32_t x) const {
        std::uint32_t acc = 0;
        std::uint32_t y = x;
        for (unsigned i = 0; i < n; ++i) {
            acc ^= y;
            y = mul(y, y);
        }
        return acc != 0;
    }
    std::uint32_t frob(std::uint32_t x, long long k) const {
        const long long kk = ((k % static_cast<long long>(n)) + n) % n;
        for (long long i = 0; i < kk; ++i) x = mul(x, x);
        return x;
    }
    std::uint32_t size() const { return 1u << n; }
};

// O(N^2) Walsh coefficients W(w) = sum_x s(x) (-1)^{<w,x>}.
inline std::vector<std::int64_t> naive_walsh(const std::vector<int>& signs) {
    const std::size_t len = signs.size();
    std::vector<std::int64_t> out(len, 0);
    for (std::size_t w = 0; w < len; ++w) {
        for (std::size_t x = 0; x < len; ++x) {
            out[w] += (std::popcount(w & x) & 1) ? -signs[x] : signs[x];
        }
    }
    return out;
}

// Rank of GF(2) rows stored as vectors of words.
inline unsigned rank_rows(std::vector<std::vector<std::uint64_t>> rows) {
    unsigned r = 0;
    const std::size_t words = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < 64 * words && r < rows.size(); ++col) {
        const std::size_t w = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t piv = r;
        while (piv < rows.size() && !(rows[piv][w] & bit)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && (rows[i][w] & bit)) {
                for (std::size_t j = 0; j < words; ++j) rows[i][j] ^= rows[r][j];
            }
        }
        ++r;
    }
    return r;
}

inline std::map<std::int64_t, std::uint64_t> multiset(const std::vector<std::int64_t>& v) {
    std::map<std::int64_t, std::uint64_t> m;
    for (std::int64_t x : v) ++m[x];
    return m;
}

} // namespace oracle
