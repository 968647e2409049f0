// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tribch/code.hpp"
#include "tribch/decoder.hpp"
#include "tribch/error.hpp"
#include "tribch/kernel.hpp"
#include "tribch/macwilliams.hpp"
#include "tribch/rng.hpp"
#include "tribch/spectrum.hpp"

using namespace tribch;

namespace {

const Family kFamilies[] = {Family::Gold2, Family::Gold3, Family::TH, Family::Kasami5};
const unsigned kDegrees[] = {5, 7, 9};

FamilySpec spec_at(Family f, unsigned n) { return {f, f == Family::TH ? (n - 1) / 2 : 1u}; }

std::string tag(Family f, unsigned n) {
    return std::string(family_name(f)) + "/n=" + std::to_string(n);
}

struct Instance {
    unsigned n;
    Family family;
    SpectrumReport spectrum;
    CodeDimensions dims;
    WeightDistribution dual;
    WeightDistribution code;
};

class Criteria {
public:
    void report(int id, bool ok, const std::string& detail, double seconds) {
        std::printf("criterion %2d: %s  (%.1fs) %s\n", id, ok ? "PASS" : "FAIL", seconds, detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures_;
    }
    int failures() const { return failures_; }

private:
    int failures_ = 0;
};

class Timer {
public:
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double s = std::chrono::duration<double>(now - start_).count();
        start_ = now;
        return s;
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

} // namespace

int main() {
    Criteria out;
    Timer timer;
    std::vector<Instance> instances;

    // 1. Five-valued spectrum.
    {
        bool ok = true;
        std::string bad;
        for (unsigned n : kDegrees) {
            const FieldCtx ctx(n);
            for (Family f : kFamilies) {
                const MonomialPair pair = instantiate(spec_at(f, n), ctx);
                Instance inst{n, f, full_spectrum(ctx, pair), {}, {}, {}};
                if (!inst.spectrum.five_valued) {
                    ok = false;
                    bad += " " + tag(f, n);
                }
                instances.push_back(std::move(inst));
            }
        }
        out.report(1, ok, "12 instances five-valued" + (bad.empty() ? "" : "; not:" + bad), timer.lap());
    }

    // 2. Code parameters.
    {
        bool ok = true;
        for (Instance& inst : instances) {
            const FieldCtx ctx(inst.n);
            const auto h = build_parity_check(ctx, instantiate(spec_at(inst.family, inst.n), ctx));
            try {
                inst.dims = rank_and_dimension(h);
            } catch (const Error&) {
                ok = false;
                continue;
            }
            ok = ok && inst.dims.rank == 3 * inst.n && inst.dims.dim == (std::size_t{1} << inst.n) - 3 * inst.n - 1;
        }
        out.report(2, ok, "rank 3n, dim 2^n-3n-1 ([31,16] [127,106] [511,484])", timer.lap());
    }

    // MacWilliams for every instance, used by 3, 5 and 10.
    bool macwilliams_ok = true;
    for (Instance& inst : instances) {
        const FieldCtx ctx(inst.n);
        const MonomialPair pair = instantiate(spec_at(inst.family, inst.n), ctx);
        const auto h = build_parity_check(ctx, pair);
        try {
            inst.dual = dual_weights_from_spectrum(ctx, pair, inst.spectrum, h);
            inst.code = macwilliams_transform(inst.dual, 3 * inst.n);
        } catch (const Error& e) {
            std::printf("  macwilliams %s: %s\n", tag(inst.family, inst.n).c_str(), e.what());
            macwilliams_ok = false;
        }
    }
    const double macwilliams_time = timer.lap();

    // 3. Brute-force minimum distance at n=5.
    {
        bool ok = macwilliams_ok;
        for (const Instance& inst : instances) {
            if (inst.n != 5) continue;
            const FieldCtx ctx(5);
            const auto brute = weight_distribution_bruteforce(ctx, instantiate(spec_at(inst.family, 5), ctx));
            unsigned d = 0;
            for (std::size_t w = 1; w < brute.coefficients.size() && d == 0; ++w) {
                if (brute.coefficients[w] != 0) d = static_cast<unsigned>(w);
            }
            ok = ok && d == 7 && brute == inst.code && brute.total() == 65536;
        }
        out.report(3, ok, "2^16 codewords per family, d=7, equal to the MacWilliams distribution", timer.lap());
    }

    // 4. Syndrome distinctness.
    {
        bool ok = true;
        std::uint64_t patterns = 0;
        for (unsigned n : {5u, 7u}) {
            const FieldCtx ctx(n);
            for (Family f : kFamilies) {
                const auto sd = check_syndrome_distinctness(build_parity_check(ctx, instantiate(spec_at(f, n), ctx)));
                ok = ok && sd.distinct;
                patterns += sd.patterns;
            }
        }
        out.report(4, ok, std::to_string(patterns) + " patterns of weight <= 3 over n=5,7", timer.lap());
    }

    // 5. Distance-7 signature and family independence.
    {
        bool ok = macwilliams_ok;
        std::map<unsigned, const Instance*> first;
        std::string a7;
        for (const Instance& inst : instances) {
            ok = ok && verify_distance7(inst.code);
            auto [it, fresh] = first.try_emplace(inst.n, &inst);
            if (fresh) {
                a7 += " A_7(n=" + std::to_string(inst.n) + ")=" + inst.code.coefficients[7].str();
            } else {
                ok = ok && inst.code == it->second->code && inst.dual == it->second->dual;
            }
        }
        out.report(5, ok, "A_1..A_6=0, identical across families;" + a7, timer.lap() + macwilliams_time);
    }

    // 6. Theorem 1 kernel bounds, exhaustive at n=5,7.
    {
        bool ok = true;
        std::string detail;
        for (unsigned n : {5u, 7u}) {
            const FieldCtx ctx(n);
            for (Family f : {Family::Gold2, Family::Gold3}) {
                const auto sum = verify_theorem1(ctx, instantiate({f, 1}, ctx), {1000, true}, Rng(2024));
                ok = ok && sum.ok() && sum.pairs_checked == std::uint64_t{ctx.order()} * ctx.order();
                detail += " " + tag(f, n) + ":max_s=" + std::to_string(sum.max_s);
            }
        }
        out.report(6, ok, "s <= 4 (gold2), s <= 3 (gold3), F^2 = 2^(n+s), s odd;" + detail, timer.lap());
    }

    // 7. Theorem 2 machinery.
    {
        bool ok = true;
        std::string detail;
        for (unsigned n : kDegrees) {
            const FieldCtx ctx(n);
            const KernelOptions opts{10000, n == 5};
            const auto sum = verify_theorem2(ctx, instantiate({Family::Kasami5, 1}, ctx), opts, Rng(2024));
            ok = ok && sum.ok() && sum.triples_checked >= (n == 5 ? 31u * 31u * 32u : 10000u);
            detail += " n=" + std::to_string(n) + ":" + std::to_string(sum.triples_checked) + " |S0|{";
            for (const auto& [size, count] : sum.s0_histogram) {
                detail += std::to_string(size) + ":" + std::to_string(count) + ",";
            }
            detail.back() = '}';
        }
        out.report(7, ok, "S1 empty, |S0| in {2,8}, F^2 = 2^n|S0|, bijective x^(2^k+1), G in {0,1};" + detail,
                   timer.lap());
    }

    // 8. APN.
    {
        bool ok = true;
        unsigned checked = 0;
        for (unsigned n = 5; n <= 13; n += 2) {
            const FieldCtx ctx(n);
            for (unsigned k = 1; k < n; ++k) {
                if (std::gcd(n, k) != 1) continue;
                ok = ok && is_apn(ctx, power_table(ctx, gold_exponent(ctx, k)));
                ok = ok && is_apn(ctx, power_table(ctx, kasami_exponent(ctx, k)));
                checked += 2;
            }
            ok = ok && !is_apn(ctx, power_table(ctx, 2));
        }
        out.report(8, ok, std::to_string(checked) + " Gold/Kasami maps APN for n=5..13; x^2 not APN", timer.lap());
    }

    // 9. Decoder trials.
    {
        bool ok = true;
        std::uint64_t total = 0;
        for (unsigned n : kDegrees) {
            const FieldCtx ctx(n);
            for (Family f : kFamilies) {
                const auto h = build_parity_check(ctx, instantiate(spec_at(f, n), ctx));
                const SystematicEncoder enc(h);
                const PairIndex index(h);
                Rng rng = Rng(9).fork(tag(f, n));
                for (unsigned e = 0; e <= 3; ++e) {
                    for (int trial = 0; trial < 1000; ++trial) {
                        BitVec msg(enc.dimension());
                        for (std::size_t i = 0; i < msg.size(); ++i) msg.set(i, rng.next() & 1);
                        const BitVec sent = enc.encode(msg);
                        BitVec received = sent;
                        std::set<std::size_t> pos;
                        while (pos.size() < e) pos.insert(static_cast<std::size_t>(rng.below(h.length())));
                        for (std::size_t p : pos) received.flip(p);
                        const DecodeResult r = decode(h, index, received);
                        ok = ok && r.corrected == sent &&
                             r.status == (e == 0 ? DecodeStatus::Clean : DecodeStatus::Corrected);
                        ++total;
                    }
                }
            }
        }
        out.report(9, ok, std::to_string(total) + " trials, success rate " + (ok ? "1.0" : "< 1.0"), timer.lap());
    }

    // 10. Property suites.
    {
        bool parseval = true, sums = true, multisets = true, involution = macwilliams_ok;
        for (const Instance& inst : instances) {
            parseval = parseval && inst.spectrum.parseval_ok;
            sums = sums && inst.spectrum.sum_ok;
            if (macwilliams_ok) {
                const std::size_t dim = inst.dims.dim;
                involution = involution && macwilliams_transform(inst.code, dim) == inst.dual;
            }
            const FieldCtx ctx(inst.n);
            const MonomialPair pair = instantiate(spec_at(inst.family, inst.n), ctx);
            Rng rng = Rng(10).fork(tag(inst.family, inst.n));
            for (int trial = 0; trial < 100; ++trial) {
                const Element b = 1 + static_cast<Element>(rng.below(ctx.order()));
                const Element c = 1 + static_cast<Element>(rng.below(ctx.order()));
                const auto fast = spectrum_for_bc(ctx, pair, b, c);
                std::vector<std::int64_t> naive(ctx.size());
                for (Element a = 0; a < ctx.size(); ++a) naive[a] = transform_single(ctx, pair, a, b, c);
                multisets = multisets && oracle::multiset({fast.begin(), fast.end()}) == oracle::multiset(naive);
            }
        }
        out.report(10, parseval && sums && multisets && involution,
                   std::string("parseval=") + (parseval ? "ok" : "BAD") + " sum=" + (sums ? "ok" : "BAD") +
                       " fwht-vs-naive(100 per config)=" + (multisets ? "ok" : "BAD") +
                       " involution=" + (involution ? "ok" : "BAD"),
                   timer.lap());
    }

    std::printf("%d criteria failed\n", out.failures());
    return out.failures() == 0 ? 0 : 1;
}
