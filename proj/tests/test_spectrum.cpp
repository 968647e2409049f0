#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tribch/rng.hpp"
#include "tribch/spectrum.hpp"

using namespace tribch;

namespace {

MonomialPair custom_pair(const FieldCtx& ctx, std::uint64_t d1, std::uint64_t d2) {
    MonomialPair p;
    p.spec = {Family::Gold2, 1};
    p.d1 = d1;
    p.d2 = d2;
    p.f = power_table(ctx, d1);
    p.g = power_table(ctx, d2);
    return p;
}

// Character sum with the oracle field: no library arithmetic involved.
std::int64_t oracle_transform(const oracle::Field& o, std::uint64_t d1, std::uint64_t d2,
                              Element a, Element b, Element c) {
    std::int64_t total = 0;
    for (Element x = 0; x < o.size(); ++x) {
        const Element arg = o.mul(a, x) ^ o.mul(b, o.fast_pow(x, d1)) ^ o.mul(c, o.fast_pow(x, d2));
        total += o.trace(arg) ? -1 : 1;
    }
    return total;
}

const Family kFamilies[] = {Family::Gold2, Family::Gold3, Family::TH, Family::Kasami5};

FamilySpec spec_at(Family f, unsigned n) { return {f, f == Family::TH ? (n - 1) / 2 : 1u}; }

} // namespace

TEST_CASE("five_values") {
    const auto v5 = five_values(5);
    CHECK(v5 == std::array<std::int64_t, 5>{-16, -8, 0, 8, 16});
    CHECK(is_five_value(7, 32));
    CHECK(is_five_value(7, -16));
    CHECK_FALSE(is_five_value(7, 8));
    CHECK_FALSE(is_five_value(5, 4));
}

TEST_CASE("fwht matches the quadratic Walsh transform") {
    std::mt19937_64 gen(3);
    for (unsigned bits : {1u, 3u, 5u, 8u}) {
        std::vector<int> signs(std::size_t{1} << bits);
        for (int& s : signs) s = (gen() & 1) ? -1 : 1;
        std::vector<std::int32_t> data(signs.begin(), signs.end());
        fwht(data);
        const auto expected = oracle::naive_walsh(signs);
        for (std::size_t i = 0; i < data.size(); ++i) CHECK(data[i] == expected[i]);
    }
}

TEST_CASE("transform_single agrees with the oracle field") {
    const FieldCtx ctx(5);
    const oracle::Field o{5, ctx.modulus()};
    for (Family f : kFamilies) {
        const auto pair = instantiate(spec_at(f, 5), ctx);
        for (Element a = 0; a < 32; a += 3) {
            for (Element b = 0; b < 32; b += 5) {
                for (Element c = 0; c < 32; c += 7) {
                    CHECK(transform_single(ctx, pair, a, b, c) ==
                          oracle_transform(o, pair.d1, pair.d2, a, b, c));
                }
            }
        }
    }
}

TEST_CASE("pinned transform values at n=5") {
    const FieldCtx ctx(5);
    const auto pair = instantiate({Family::Gold2, 1}, ctx);
    CHECK(transform_single(ctx, pair, 0, 1, 1) == -8);
    CHECK(transform_single(ctx, pair, 0, 0, 0) == 32);
    CHECK(transform_single(ctx, pair, 1, 0, 0) == 0);
}

TEST_CASE("fast spectrum is the per-a spectrum, index by functional mask") {
    for (unsigned n : {5u, 7u}) {
        const FieldCtx ctx(n);
        for (Family f : kFamilies) {
            const auto pair = instantiate(spec_at(f, n), ctx);
            Rng rng(100 + n);
            for (int trial = 0; trial < 100; ++trial) {
                const Element b = 1 + static_cast<Element>(rng.below(ctx.order()));
                const Element c = 1 + static_cast<Element>(rng.below(ctx.order()));
                const auto fast = spectrum_for_bc(ctx, pair, b, c);
                std::vector<std::int64_t> naive(ctx.size());
                std::vector<std::int64_t> fast64(fast.begin(), fast.end());
                for (Element a = 0; a < ctx.size(); ++a) {
                    naive[a] = transform_single(ctx, pair, a, b, c);
                    REQUIRE(fast[ctx.functional_mask(a)] == naive[a]);
                }
                CHECK(oracle::multiset(fast64) == oracle::multiset(naive));
            }
        }
    }
}

TEST_CASE("full spectrum at n=5 is five-valued with pinned histogram") {
    const FieldCtx ctx(5);
    const ValueHistogram expected{{-16, 155}, {-8, 4836}, {0, 17236}, {8, 8060}, {16, 465}};
    for (Family f : kFamilies) {
        const auto rep = full_spectrum(ctx, instantiate(spec_at(f, 5), ctx));
        CHECK(rep.five_valued);
        CHECK(rep.parseval_ok);
        CHECK(rep.sum_ok);
        CHECK_FALSE(rep.witness.has_value());
        CHECK(rep.histogram == expected);
    }
}

TEST_CASE("histogram total and Parseval at n=7") {
    const FieldCtx ctx(7);
    for (Family f : kFamilies) {
        const auto rep = full_spectrum(ctx, instantiate(spec_at(f, 7), ctx));
        std::uint64_t total = 0;
        long double sq = 0;
        for (const auto& [v, c] : rep.histogram) {
            total += c;
            sq += static_cast<long double>(v) * v * c;
        }
        CHECK(total == std::uint64_t{127} * 127 * 128);
        CHECK(sq == static_cast<long double>(127) * 127 * 128 * 128);
        CHECK(rep.five_valued);
    }
}

TEST_CASE("worker count does not change the report") {
    const FieldCtx ctx(7);
    const auto pair = instantiate({Family::Kasami5, 1}, ctx);
    const auto one = full_spectrum(ctx, pair, 1);
    for (unsigned w : {2u, 3u, 8u}) {
        const auto many = full_spectrum(ctx, pair, w);
        CHECK(many.histogram == one.histogram);
        CHECK(many.five_valued == one.five_valued);
    }
    const FieldCtx c5(5);
    const auto bad = custom_pair(c5, 3, 7);
    const auto w1 = full_spectrum(c5, bad, 1);
    const auto w4 = full_spectrum(c5, bad, 4);
    REQUIRE(w1.witness.has_value());
    REQUIRE(w4.witness.has_value());
    CHECK(w1.witness->a == w4.witness->a);
    CHECK(w1.witness->b == w4.witness->b);
    CHECK(w1.witness->c == w4.witness->c);
}

TEST_CASE("a pair outside the families is caught with a witness") {
    const FieldCtx ctx(5);
    const oracle::Field o{5, ctx.modulus()};
    const auto bad = custom_pair(ctx, 3, 7);
    const auto rep = full_spectrum(ctx, bad);
    CHECK_FALSE(rep.five_valued);
    CHECK(rep.parseval_ok);
    CHECK(rep.sum_ok);
    REQUIRE(rep.witness.has_value());
    const auto [a, b, c] = *rep.witness;
    CHECK_FALSE(is_five_value(5, oracle_transform(o, 3, 7, a, b, c)));
    const ValueHistogram expected{{-20, 31},   {-12, 620}, {-8, 2480}, {-4, 5890}, {0, 8370},
                                  {4, 8060},   {8, 3720},  {12, 1271}, {16, 310}};
    CHECK(rep.histogram == expected);
}

TEST_CASE("single-function spectrum of a Gold map is three-valued") {
    for (unsigned n : {5u, 7u, 9u}) {
        const FieldCtx ctx(n);
        const auto h = single_function_spectrum(ctx, power_table(ctx, 3));
        const std::int64_t r = std::int64_t{1} << ((n + 1) / 2);
        CHECK(h.size() == 3);
        CHECK(h.count(0) == 1);
        CHECK(h.count(r) == 1);
        CHECK(h.count(-r) == 1);
        std::uint64_t total = 0;
        for (const auto& [v, c] : h) total += c;
        CHECK(total == std::uint64_t{ctx.order()} * ctx.size());
    }
}

TEST_CASE("b = c = 0 gives the trivial character multiset") {
    const FieldCtx ctx(5);
    const auto pair = instantiate(spec_at(Family::Gold2, 5), ctx);
    const auto v = spectrum_for_bc(ctx, pair, 0, 0);
    std::map<std::int64_t, std::uint64_t> expected{{0, 31}, {32, 1}};
    CHECK(oracle::multiset({v.begin(), v.end()}) == expected);
}
