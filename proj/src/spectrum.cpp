#include "tribch/spectrum.hpp"

#include <algorithm>
#include <thread>

namespace tribch {

namespace {

// Dense counts indexed by V + 2^n.
struct DenseHistogram {
    std::int64_t offset;
    std::vector<std::uint64_t> counts;

    explicit DenseHistogram(std::uint32_t q) : offset(q), counts(2 * std::size_t{q} + 1, 0) {}

    void add(std::int64_t v) { ++counts[static_cast<std::size_t>(v + offset)]; }

    void merge_into(ValueHistogram& out) const {
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (counts[i] != 0) out[static_cast<std::int64_t>(i) - offset] += counts[i];
        }
    }
};

struct ScanResult {
    DenseHistogram hist;
    bool parseval_ok = true;
    bool sum_ok = true;
    std::optional<std::pair<Element, Element>> offending;
};

void sign_sequence(const FieldCtx& ctx, const MonomialPair& pair, Element b, Element c,
                   std::span<std::int32_t> out) {
    const std::uint32_t mb = ctx.functional_mask(b);
    const std::uint32_t mc = ctx.functional_mask(c);
    for (std::uint32_t x = 0; x < ctx.size(); ++x) {
        out[x] = parity((pair.f[x] & mb) ^ (pair.g[x] & mc)) ? -1 : 1;
    }
}

void scan_rows(const FieldCtx& ctx, const MonomialPair& pair, Element b_begin, Element b_end,
               ScanResult& result) {
    const std::uint32_t q = ctx.size();
    const std::int64_t q2 = std::int64_t{q} * q;
    std::vector<std::int32_t> scratch(q);
    for (Element b = b_begin; b < b_end; ++b) {
        for (Element c = 1; c < q; ++c) {
            sign_sequence(ctx, pair, b, c, scratch);
            fwht(scratch);
            std::int64_t sum = 0;
            std::int64_t sum_sq = 0;
            bool offending = false;
            for (std::int32_t v : scratch) {
                sum += v;
                sum_sq += std::int64_t{v} * v;
                result.hist.add(v);
                if (!is_five_value(ctx.degree(), v)) offending = true;
            }
            if (sum_sq != q2) result.parseval_ok = false;
            if (sum != q) result.sum_ok = false;
            if (offending && !result.offending) result.offending = std::make_pair(b, c);
        }
    }
}

} // namespace

std::array<std::int64_t, 5> five_values(unsigned n) {
    const std::int64_t lo = std::int64_t{1} << ((n + 1) / 2);
    const std::int64_t hi = std::int64_t{1} << ((n + 3) / 2);
    return {-hi, -lo, 0, lo, hi};
}

bool is_five_value(unsigned n, std::int64_t v) {
    if (v == 0) return true;
    const std::int64_t a = v < 0 ? -v : v;
    return a == (std::int64_t{1} << ((n + 1) / 2)) || a == (std::int64_t{1} << ((n + 3) / 2));
}

std::int64_t transform_single(const FieldCtx& ctx, const MonomialPair& pair, Element a, Element b,
                              Element c) {
    std::int64_t total = 0;
    for (Element x = 0; x < ctx.size(); ++x) {
        const Element arg = ctx.mul(a, x) ^ ctx.mul(b, pair.f[x]) ^ ctx.mul(c, pair.g[x]);
        total += ctx.trace(arg) ? -1 : 1;
    }
    return total;
}

void fwht(std::span<std::int32_t> data) {
    const std::size_t len = data.size();
    for (std::size_t h = 1; h < len; h <<= 1) {
        for (std::size_t i = 0; i < len; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const std::int32_t u = data[j];
                const std::int32_t v = data[j + h];
                data[j] = u + v;
                data[j + h] = u - v;
            }
        }
    }
}

std::vector<std::int32_t> spectrum_for_bc(const FieldCtx& ctx, const MonomialPair& pair,
                                          Element b, Element c) {
    std::vector<std::int32_t> values(ctx.size());
    sign_sequence(ctx, pair, b, c, values);
    fwht(values);
    return values;
}

SpectrumReport full_spectrum(const FieldCtx& ctx, const MonomialPair& pair, unsigned workers) {
    const std::uint32_t q = ctx.size();
    workers = std::clamp(workers, 1u, q - 1);

    std::vector<ScanResult> results;
    results.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) results.push_back(ScanResult{DenseHistogram(q), true, true, std::nullopt});

    // b ranges are contiguous per worker, so merging in worker order keeps the
    // first offending (b, c) deterministic.
    const std::uint32_t rows = q - 1;
    auto range = [&](unsigned w) {
        return std::pair<Element, Element>{1 + rows * w / workers, 1 + rows * (w + 1) / workers};
    };
    if (workers == 1) {
        scan_rows(ctx, pair, 1, q, results[0]);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            const auto [lo, hi] = range(w);
            threads.emplace_back([&, lo, hi, w] { scan_rows(ctx, pair, lo, hi, results[w]); });
        }
    }

    SpectrumReport report;
    report.n = ctx.degree();
    report.spec = pair.spec;
    std::optional<std::pair<Element, Element>> offending;
    for (const ScanResult& r : results) {
        r.hist.merge_into(report.histogram);
        report.parseval_ok = report.parseval_ok && r.parseval_ok;
        report.sum_ok = report.sum_ok && r.sum_ok;
        if (!offending && r.offending) offending = r.offending;
    }
    report.five_valued = std::all_of(report.histogram.begin(), report.histogram.end(),
                                     [&](const auto& kv) { return is_five_value(report.n, kv.first); });

    if (offending) {
        const auto [b, c] = *offending;
        for (Element a = 0; a < q; ++a) {
            if (!is_five_value(report.n, transform_single(ctx, pair, a, b, c))) {
                report.witness = Triple{a, b, c};
                break;
            }
        }
    }
    return report;
}

ValueHistogram single_function_spectrum(const FieldCtx& ctx, std::span<const Element> table) {
    const std::uint32_t q = ctx.size();
    DenseHistogram hist(q);
    std::vector<std::int32_t> scratch(q);
    for (Element b = 1; b < q; ++b) {
        const std::uint32_t mb = ctx.functional_mask(b);
        for (std::uint32_t x = 0; x < q; ++x) scratch[x] = parity(table[x] & mb) ? -1 : 1;
        fwht(scratch);
        for (std::int32_t v : scratch) hist.add(v);
    }
    ValueHistogram out;
    hist.merge_into(out);
    return out;
}

} // namespace tribch
