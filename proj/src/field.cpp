#include "tribch/field.hpp"

#include <bit>
#include <string>

#include "tribch/error.hpp"

namespace tribch {

namespace {

int poly_degree(std::uint64_t p) noexcept { return 63 - std::countl_zero(p); }

} // namespace

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) noexcept {
    const int db = poly_degree(b);
    while (a != 0 && poly_degree(a) >= db) {
        a ^= b << (poly_degree(a) - db);
    }
    return a;
}

bool is_irreducible(std::uint64_t p) noexcept {
    const int d = poly_degree(p);
    if (d < 1) return false;
    for (std::uint64_t q = 2; poly_degree(q) <= d / 2; ++q) {
        if (poly_mod(p, q) == 0) return false;
    }
    return true;
}

std::uint32_t smallest_irreducible(unsigned n) {
    const std::uint32_t lo = 1u << n;
    for (std::uint32_t p = lo; p < 2 * lo; ++p) {
        if (is_irreducible(p)) return p;
    }
    throw Error("InternalError", "no irreducible polynomial of degree " + std::to_string(n));
}

FieldCtx::FieldCtx(unsigned n) : n_(n), modulus_(0) {
    if (n % 2 == 0) {
        throw InvalidArgument("field degree must be odd, got n=" + std::to_string(n));
    }
    if (n < kMinDegree || n > kMaxDegree) {
        throw InvalidArgument("field degree must lie in [5, 17], got n=" + std::to_string(n));
    }
    modulus_ = smallest_irreducible(n);

    // Tr is linear, so Tr(alpha^i) for the basis fixes the whole table.
    std::uint32_t basis_trace = 0;
    for (unsigned i = 0; i < n_; ++i) {
        Element x = Element{1} << i;
        Element acc = 0;
        for (unsigned j = 0; j < n_; ++j) {
            acc ^= x;
            x = square(x);
        }
        if (acc == 1) basis_trace |= 1u << i;
    }
    const std::uint32_t q = size();
    trace_table_.resize(q);
    for (std::uint32_t x = 0; x < q; ++x) trace_table_[x] = parity(x & basis_trace) ? 1 : 0;

    // m(alpha^j) has bit i = Tr(alpha^(i+j)); m is linear in b.
    std::vector<std::uint32_t> basis_masks(n_, 0);
    for (unsigned j = 0; j < n_; ++j) {
        const Element aj = Element{1} << j;
        for (unsigned i = 0; i < n_; ++i) {
            if (trace(mul(aj, Element{1} << i))) basis_masks[j] |= 1u << i;
        }
    }
    masks_.assign(q, 0);
    for (std::uint32_t b = 1; b < q; ++b) {
        const unsigned low = static_cast<unsigned>(std::countr_zero(b));
        masks_[b] = masks_[b & (b - 1)] ^ basis_masks[low];
    }
}

Element FieldCtx::mul(Element x, Element y) const noexcept {
    Element acc = 0;
    const Element top = Element{1} << n_;
    while (y != 0) {
        if (y & 1) acc ^= x;
        y >>= 1;
        x <<= 1;
        if (x & top) x ^= modulus_;
    }
    return acc;
}

Element FieldCtx::pow(Element x, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (x == 0) return 0;
    e %= order();
    Element result = 1;
    Element base = x;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        base = square(base);
        e >>= 1;
    }
    return result;
}

Element FieldCtx::inverse(Element x) const noexcept {
    return x == 0 ? 0 : pow(x, order() - 1);
}

Element FieldCtx::frobenius(Element x, long long k) const noexcept {
    const long long nn = static_cast<long long>(n_);
    long long r = k % nn;
    if (r < 0) r += nn;
    for (long long i = 0; i < r; ++i) x = square(x);
    return x;
}

FieldCtx make_ctx(unsigned n) { return FieldCtx(n); }

} // namespace tribch
