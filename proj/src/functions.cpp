#include "tribch/functions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "tribch/error.hpp"

namespace tribch {

std::string_view family_name(Family f) noexcept {
    switch (f) {
    case Family::Gold2: return "gold2";
    case Family::Gold3: return "gold3";
    case Family::TH: return "th";
    case Family::Kasami5: return "kasami5";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "gold2") return Family::Gold2;
    if (lower == "gold3") return Family::Gold3;
    if (lower == "th") return Family::TH;
    if (lower == "kasami5") return Family::Kasami5;
    throw InvalidArgument("unknown family '" + std::string(name) +
                          "' (expected gold2, gold3, th or kasami5)");
}

std::uint64_t gold_exponent(const FieldCtx& ctx, unsigned k) {
    return (ctx.pow2_mod_order(k) + 1) % ctx.order();
}

std::uint64_t kasami_exponent(const FieldCtx& ctx, unsigned k) {
    const std::uint64_t m = ctx.order();
    const std::uint64_t p1 = ctx.pow2_mod_order(k);
    const std::uint64_t p2 = ctx.pow2_mod_order(2ull * k);
    return (p2 + m - p1 + 1) % m;
}

ExponentPair family_exponents(const FieldCtx& ctx, const FamilySpec& spec) {
    const std::uint64_t m = ctx.order();
    const unsigned long long k = spec.param;
    auto p = [&](unsigned long long e) { return ctx.pow2_mod_order(e); };
    switch (spec.family) {
    case Family::Gold2: return {(p(k) + 1) % m, (p(2 * k) + 1) % m};
    case Family::Gold3: return {(p(k) + 1) % m, (p(3 * k) + 1) % m};
    case Family::TH: return {(p(k) + 1) % m, (p(k + 2) + 3) % m};
    case Family::Kasami5: {
        // 2^{4k} - 2^{3k} + 2^{2k} - 2^k + 1
        const std::uint64_t d2 = (p(4 * k) + (m - p(3 * k)) + p(2 * k) + (m - p(k)) + 1) % m;
        return {kasami_exponent(ctx, spec.param), d2};
    }
    }
    return {0, 0};
}

FunctionTable power_table(const FieldCtx& ctx, std::uint64_t d) {
    FunctionTable table(ctx.size());
    table[0] = 0;
    for (std::uint32_t x = 1; x < ctx.size(); ++x) table[x] = ctx.pow(x, d);
    return table;
}

MonomialPair instantiate(const FamilySpec& spec, const FieldCtx& ctx) {
    const unsigned n = ctx.degree();
    if (spec.param == 0) throw InvalidArgument("family parameter must be positive");
    if (spec.family == Family::TH) {
        if (n != 2 * spec.param + 1) {
            throw ConditionViolated("n=2t+1 required: n=" + std::to_string(n) +
                                    ", t=" + std::to_string(spec.param));
        }
    } else if (std::gcd(n, spec.param) != 1) {
        throw ConditionViolated("gcd(" + std::to_string(n) + "," + std::to_string(spec.param) +
                                ")≠1");
    }

    const ExponentPair e = family_exponents(ctx, spec);
    if (e.d1 == 0 || e.d2 == 0) {
        throw DegeneratePair("an exponent reduces to 0 mod 2^n-1 (constant map on L*)");
    }
    if (e.d1 == e.d2) {
        throw DegeneratePair("exponents coincide mod 2^n-1: d=" + std::to_string(e.d1));
    }

    MonomialPair pair;
    pair.spec = spec;
    pair.d1 = e.d1;
    pair.d2 = e.d2;
    pair.f = power_table(ctx, e.d1);
    pair.g = power_table(ctx, e.d2);
    return pair;
}

bool is_apn(const FieldCtx& ctx, std::span<const Element> table) {
    const std::uint32_t q_size = ctx.size();
    std::vector<std::uint32_t> count(q_size);
    for (std::uint32_t q = 1; q < q_size; ++q) {
        std::fill(count.begin(), count.end(), 0);
        for (std::uint32_t x = 0; x < q_size; ++x) {
            if (++count[table[x ^ q] ^ table[x]] > 2) return false;
        }
    }
    return true;
}

std::map<std::uint32_t, std::uint64_t> differential_spectrum(const FieldCtx& ctx,
                                                             std::span<const Element> table,
                                                             Element q) {
    if (q == 0) throw InvalidArgument("differential direction q must be nonzero");
    std::vector<std::uint32_t> count(ctx.size());
    for (std::uint32_t x = 0; x < ctx.size(); ++x) ++count[table[x ^ q] ^ table[x]];
    std::map<std::uint32_t, std::uint64_t> hist;
    for (std::uint32_t c : count) ++hist[c];
    return hist;
}

} // namespace tribch
