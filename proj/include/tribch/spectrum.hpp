#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tribch/field.hpp"
#include "tribch/functions.hpp"

namespace tribch {

// Transform value V -> number of (a, b, c) attaining it.
using ValueHistogram = std::map<std::int64_t, std::uint64_t>;

struct Triple {
    Element a;
    Element b;
    Element c;
};

struct SpectrumReport {
    unsigned n = 0;
    FamilySpec spec{};
    ValueHistogram histogram;
    bool five_valued = false;
    std::optional<Triple> witness;
    // Inline checks over every scanned (b, c): sum_a V^2 = 2^{2n}, sum_a V = 2^n.
    bool parseval_ok = true;
    bool sum_ok = true;
};

// {0, +-2^{(n+1)/2}, +-2^{(n+3)/2}}
std::array<std::int64_t, 5> five_values(unsigned n);
bool is_five_value(unsigned n, std::int64_t v);

/// Direct character sum over all x of (-1)^Tr(a*x + b*f(x) + c*g(x)),
/// evaluated with field multiplications and the trace table.
std::int64_t transform_single(const FieldCtx& ctx, const MonomialPair& pair, Element a, Element b,
                              Element c);

// In-place Walsh-Hadamard transform over the dot-product functional.
void fwht(std::span<std::int32_t> data);

/// All 2^n values F(., b, c) via the fast transform. Entry w is F(a, b, c)
/// for the a whose functional mask equals w, so the returned array is a
/// permutation of the per-a values; only the multiset is relied on.
std::vector<std::int32_t> spectrum_for_bc(const FieldCtx& ctx, const MonomialPair& pair,
                                          Element b, Element c);

// Exhaustive scan over b, c in L*. `workers` threads split the b range.
SpectrumReport full_spectrum(const FieldCtx& ctx, const MonomialPair& pair, unsigned workers = 1);

// Histogram of sum_x (-1)^Tr(a*x + b*h(x)) over a in L, b in L*.
ValueHistogram single_function_spectrum(const FieldCtx& ctx, std::span<const Element> table);

} // namespace tribch
