#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tribch {

// Polynomial-basis element of GF(2^n): bit i is the coefficient of alpha^i.
using Element = std::uint32_t;

/// Immutable description of GF(2^n) for odd 5 <= n <= 17.
///
/// The modulus is the numerically smallest irreducible polynomial of degree n
/// (bit i = coefficient of x^i, bit n always set), so every table produced by
/// the library is reproducible. Besides the trace table the context caches the
/// "functional masks" m(b) with Tr(b*y) = parity(y & m(b)); they turn every
/// trace-of-product into a popcount in the spectrum and kernel loops.
class FieldCtx {
public:
    static constexpr unsigned kMinDegree = 5;
    static constexpr unsigned kMaxDegree = 17;

    explicit FieldCtx(unsigned n);

    unsigned degree() const noexcept { return n_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::uint32_t size() const noexcept { return 1u << n_; }
    // Order of the multiplicative group, 2^n - 1.
    std::uint32_t order() const noexcept { return (1u << n_) - 1; }

    Element mul(Element x, Element y) const noexcept;
    Element square(Element x) const noexcept { return mul(x, x); }
    // x^e; the exponent is reduced mod 2^n - 1 for x != 0. pow(0, e) = 0 for
    // e > 0 and pow(x, 0) = 1.
    Element pow(Element x, std::uint64_t e) const noexcept;
    // Inverse via x^(2^n - 2); inverse(0) = 0.
    Element inverse(Element x) const noexcept;
    // x^(2^k), k taken mod n (negative k is the inverse automorphism).
    Element frobenius(Element x, long long k) const noexcept;

    bool trace(Element x) const noexcept { return trace_table_[x] != 0; }
    const std::vector<std::uint8_t>& trace_table() const noexcept { return trace_table_; }

    // Mask m with Tr(b*y) = parity(y & m) for all y.
    std::uint32_t functional_mask(Element b) const noexcept { return masks_[b]; }

    // 2^e mod (2^n - 1), e.g. for instantiating family exponents.
    std::uint64_t pow2_mod_order(unsigned long long e) const noexcept {
        return std::uint64_t{1} << (e % n_);
    }

private:
    unsigned n_;
    std::uint32_t modulus_;
    std::vector<std::uint8_t> trace_table_;
    std::vector<std::uint32_t> masks_;
};

// Remainder of a modulo b, both as GF(2)[x] bitmasks (b != 0).
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) noexcept;

// Irreducibility by trial division with every polynomial of degree
// 1..deg(p)/2.
bool is_irreducible(std::uint64_t p) noexcept;

// Smallest irreducible polynomial of exact degree n.
std::uint32_t smallest_irreducible(unsigned n);

FieldCtx make_ctx(unsigned n);

inline bool parity(std::uint64_t v) noexcept { return (std::popcount(v) & 1) != 0; }

} // namespace tribch
