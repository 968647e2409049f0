#include "tribch/kernel.hpp"

#include <algorithm>
#include <bit>

#include "tribch/error.hpp"

namespace tribch {

namespace {

// Tr(Q(u)) as a 0/1 value, given tables of the three monomials in Q.
struct QuadraticForm {
    const FieldCtx& ctx;
    const FunctionTable& p1;
    const FunctionTable& p2;
    const FunctionTable& p3;
    Triple t;

    bool trace_at(Element u) const {
        return ctx.trace(ctx.mul(t.a, p1[u]) ^ ctx.mul(t.b, p2[u]) ^ ctx.mul(t.c, p3[u]));
    }
};

Triple random_triple(const FieldCtx& ctx, Rng& rng) {
    const std::uint32_t q = ctx.size();
    Triple t;
    t.a = static_cast<Element>(rng.below(q));
    t.b = static_cast<Element>(1 + rng.below(q - 1));
    t.c = static_cast<Element>(1 + rng.below(q - 1));
    return t;
}

// Fills S0/S1 and the consistency flag for a report whose kernel and fw are set.
void split_kernel(KernelReport& r, const QuadraticForm& form, unsigned n) {
    r.s0_size = 0;
    r.s1_size = 0;
    for (Element u : r.kernel) {
        if (form.trace_at(u)) ++r.s1_size; else ++r.s0_size;
    }
    const std::uint64_t k_size = r.kernel.size();
    const std::int64_t diff = static_cast<std::int64_t>(r.s0_size) - static_cast<std::int64_t>(r.s1_size);
    const bool dichotomy = diff == 0 || diff == static_cast<std::int64_t>(k_size);
    const bool square = r.fw * r.fw == (std::int64_t{1} << n) * diff;
    r.consistent = r.s0_size + r.s1_size == k_size && dichotomy && square;
}

} // namespace

LinearizedMap::LinearizedMap(const FieldCtx& ctx, std::vector<LinearTerm> terms)
    : terms_(std::move(terms)), columns_(ctx.degree()) {
    for (unsigned j = 0; j < ctx.degree(); ++j) columns_[j] = evaluate(ctx, Element{1} << j);
}

Element LinearizedMap::apply(Element u) const noexcept {
    Element out = 0;
    for (unsigned j = 0; u != 0; ++j, u >>= 1) {
        if (u & 1) out ^= columns_[j];
    }
    return out;
}

Element LinearizedMap::evaluate(const FieldCtx& ctx, Element u) const noexcept {
    Element out = 0;
    for (const LinearTerm& term : terms_) out ^= ctx.mul(term.coeff, ctx.frobenius(u, term.shift));
    return out;
}

LinearizedMap build_L(const FieldCtx& ctx, const FamilySpec& spec, const Triple& t) {
    const long long k = spec.param;
    auto pair_terms = [&](std::vector<LinearTerm>& out, Element coeff, long long shift) {
        out.push_back({coeff, shift});
        out.push_back({ctx.frobenius(coeff, -shift), -shift});
    };
    std::vector<LinearTerm> terms;
    switch (spec.family) {
    case Family::Gold2:
    case Family::Gold3: {
        if (t.b == 0 && t.c == 0) throw InvalidArgument("build_L: b and c are both zero");
        const long long tk = (spec.family == Family::Gold2 ? 2 : 3) * k;
        pair_terms(terms, t.b, k);
        pair_terms(terms, t.c, tk);
        break;
    }
    case Family::Kasami5:
        if (t.a == 0 && t.b == 0 && t.c == 0) throw InvalidArgument("build_L: a, b, c all zero");
        pair_terms(terms, t.a, k);
        pair_terms(terms, t.b, 3 * k);
        pair_terms(terms, t.c, 5 * k);
        break;
    case Family::TH:
        throw InvalidArgument("build_L: no linearized form for the th family");
    }
    return LinearizedMap(ctx, std::move(terms));
}

std::vector<Element> kernel_basis(const LinearizedMap& map) {
    // Reduce columns against an xor basis keyed by leading bit while tracking
    // which original columns were combined; a column that reduces to zero
    // yields a null vector.
    struct Row {
        std::uint32_t value;
        std::uint32_t combo;
    };
    std::vector<Row> basis;
    std::vector<Element> nulls;
    const auto& cols = map.columns();
    for (unsigned j = 0; j < cols.size(); ++j) {
        Row r{cols[j], 1u << j};
        for (const Row& b : basis) {
            if ((r.value ^ b.value) < r.value) {
                r.value ^= b.value;
                r.combo ^= b.combo;
            }
        }
        if (r.value == 0) {
            nulls.push_back(r.combo);
        } else {
            basis.push_back(r);
            std::sort(basis.begin(), basis.end(),
                      [](const Row& x, const Row& y) { return x.value > y.value; });
        }
    }
    return nulls;
}

std::vector<Element> kernel_of(const LinearizedMap& map) {
    const std::vector<Element> basis = kernel_basis(map);
    std::vector<Element> out(std::size_t{1} << basis.size());
    for (std::size_t i = 1; i < out.size(); ++i) {
        const unsigned low = static_cast<unsigned>(std::countr_zero(i));
        out[i] = out[i & (i - 1)] ^ basis[low];
    }
    std::sort(out.begin(), out.end());
    return out;
}

Element kasami_g(const FieldCtx& ctx, unsigned k, const Triple& t, Element u) {
    const long long kk = k;
    // coeff with top shift m*k contributes coeff^{2^-jk} u^{2^{(m-j)k} + 2^-jk}, j < m.
    auto block = [&](Element coeff, long long m) {
        Element acc = 0;
        for (long long j = 0; j < m; ++j) {
            const Element cj = ctx.frobenius(coeff, -j * kk);
            const Element mono = ctx.mul(ctx.frobenius(u, (m - j) * kk), ctx.frobenius(u, -j * kk));
            acc ^= ctx.mul(cj, mono);
        }
        return acc;
    };
    return block(t.a, 1) ^ block(t.b, 3) ^ block(t.c, 5);
}

Theorem1Summary verify_theorem1(const FieldCtx& ctx, const MonomialPair& pair,
                                const KernelOptions& opts, Rng rng) {
    const Family fam = pair.spec.family;
    if (fam != Family::Gold2 && fam != Family::Gold3) {
        throw InvalidArgument("verify_theorem1 applies to gold2 and gold3 only");
    }
    const unsigned n = ctx.degree();
    const std::uint32_t q = ctx.size();

    Theorem1Summary sum;
    sum.n = n;
    sum.spec = pair.spec;
    sum.t = fam == Family::Gold2 ? 2 : 3;
    sum.s_bound = sum.t == 2 ? 4 : 3;

    auto check_pair = [&](Element b, Element c) {
        const LinearizedMap map = build_L(ctx, pair.spec, Triple{0, b, c});
        const unsigned s = static_cast<unsigned>(kernel_basis(map).size());
        ++sum.pairs_checked;
        ++sum.s_histogram[s];
        sum.max_s = std::max(sum.max_s, s);
        if (s > sum.s_bound) sum.bound_ok = false;
        if ((n + s) % 2 != 0) sum.odd_s_ok = false;

        const std::int64_t square = std::int64_t{1} << (n + s);
        std::uint64_t nonzero = 0;
        for (std::int32_t v : spectrum_for_bc(ctx, pair, b, c)) {
            if (v == 0) continue;
            ++nonzero;
            if (std::int64_t{v} * v != square) sum.square_law_ok = false;
        }
        if (s > n || nonzero != (std::uint64_t{1} << (n - s))) sum.support_count_ok = false;
    };

    if (opts.exhaustive) {
        for (Element b = 1; b < q; ++b) {
            for (Element c = 1; c < q; ++c) check_pair(b, c);
        }
    } else {
        Rng pairs_rng = rng.fork("theorem1.pairs");
        for (std::size_t i = 0; i < opts.samples; ++i) {
            const Triple t = random_triple(ctx, pairs_rng);
            check_pair(t.b, t.c);
        }
    }

    FunctionTable id_table(q);
    for (std::uint32_t x = 0; x < q; ++x) id_table[x] = x;
    Rng report_rng = rng.fork("theorem1.reports");
    for (std::size_t i = 0; i < opts.samples; ++i) {
        KernelReport r;
        r.triple = random_triple(ctx, report_rng);
        const LinearizedMap map = build_L(ctx, pair.spec, r.triple);
        r.kernel = kernel_of(map);
        r.s = static_cast<unsigned>(std::countr_zero(r.kernel.size()));
        r.fw = transform_single(ctx, pair, r.triple.a, r.triple.b, r.triple.c);
        split_kernel(r, QuadraticForm{ctx, id_table, pair.f, pair.g, r.triple}, n);
        if (!r.consistent) sum.reports_ok = false;
        sum.reports.push_back(std::move(r));
    }
    return sum;
}

Theorem2Summary verify_theorem2(const FieldCtx& ctx, const MonomialPair& pair,
                                const KernelOptions& opts, Rng rng) {
    if (pair.spec.family != Family::Kasami5) {
        throw InvalidArgument("verify_theorem2 applies to kasami5 only");
    }
    const unsigned n = ctx.degree();
    const std::uint32_t q = ctx.size();
    const unsigned k = pair.spec.param;

    Theorem2Summary sum;
    sum.n = n;
    sum.spec = pair.spec;

    // x -> x^{2^k+1} and the exponents after substitution.
    const FunctionTable t1 = power_table(ctx, gold_exponent(ctx, k));
    const FunctionTable t3 = power_table(ctx, gold_exponent(ctx, 3 * k));
    const FunctionTable t5 = power_table(ctx, gold_exponent(ctx, 5 * k));
    {
        std::vector<bool> hit(q, false);
        for (Element y : t1) hit[y] = true;
        sum.permutation_ok = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
    }

    Rng probe_rng = rng.fork("theorem2.probe");
    auto check_triple = [&](const Triple& t) {
        KernelReport r;
        r.triple = t;
        const LinearizedMap map = build_L(ctx, pair.spec, t);
        r.kernel = kernel_of(map);
        r.s = static_cast<unsigned>(std::countr_zero(r.kernel.size()));
        r.fw = transform_single(ctx, pair, t.a, t.b, t.c);
        const QuadraticForm form{ctx, t1, t3, t5, t};
        split_kernel(r, form, n);
        ++sum.triples_checked;
        sum.max_s = std::max(sum.max_s, r.s);

        std::int64_t substituted = 0;
        for (Element y = 0; y < q; ++y) substituted += form.trace_at(y) ? -1 : 1;
        if (substituted != r.fw) sum.substitution_ok = false;

        const std::int64_t diff =
            static_cast<std::int64_t>(r.s0_size) - static_cast<std::int64_t>(r.s1_size);
        if (r.fw * r.fw != (std::int64_t{1} << n) * diff) sum.square_law_ok = false;
        if (diff != 0 && diff != static_cast<std::int64_t>(r.kernel.size())) sum.dichotomy_ok = false;
        if (diff >= 32) sum.below_32_ok = false;
        if (r.fw != 0) {
            ++sum.nonzero_triples;
            ++sum.s0_histogram[r.s0_size];
            if (r.s1_size != 0) sum.s1_empty_ok = false;
            if (r.s0_size != 2 && r.s0_size != 8) sum.s0_size_ok = false;
        }

        // chi(u + v) = chi(u) chi(v) on K, checked against every basis vector.
        const std::vector<Element> basis = kernel_basis(map);
        for (Element u : r.kernel) {
            for (Element v : basis) {
                if (form.trace_at(u ^ v) != (form.trace_at(u) != form.trace_at(v))) {
                    sum.character_ok = false;
                }
            }
        }

        std::vector<Element> zeros_of_g;
        for (Element u : r.kernel) {
            const Element gu = kasami_g(ctx, k, t, u);
            if (gu > 1 || (gu == 0) != !form.trace_at(u)) sum.g_values_ok = false;
            if (gu == 0) zeros_of_g.push_back(u);
        }
        // G + G^{2^-k} = u L(u) on random points and on K.
        auto g_identity = [&](Element u) {
            const Element gu = kasami_g(ctx, k, t, u);
            return (gu ^ ctx.frobenius(gu, -static_cast<long long>(k))) ==
                   ctx.mul(u, map.evaluate(ctx, u));
        };
        for (int i = 0; i < 4; ++i) {
            if (!g_identity(static_cast<Element>(probe_rng.below(q)))) sum.g_identity_ok = false;
        }
        for (Element u : r.kernel) {
            if (!g_identity(u)) sum.g_identity_ok = false;
        }

        // (u+v)(v G(u) + u G(v)) + uv G(u+v) on triples of zeros of G.
        for (std::size_t i = 0; i < zeros_of_g.size() && i < 8; ++i) {
            for (std::size_t j = 0; j < zeros_of_g.size() && j < 8; ++j) {
                const Element u = zeros_of_g[i];
                const Element v = zeros_of_g[j];
                if (u == v || v == 0) continue;
                if (kasami_g(ctx, k, t, u ^ v) != 0) {
                    sum.identity1_ok = false;
                    continue;
                }
                const Element lhs =
                    ctx.mul(u ^ v, ctx.mul(v, kasami_g(ctx, k, t, u)) ^ ctx.mul(u, kasami_g(ctx, k, t, v))) ^
                    ctx.mul(ctx.mul(u, v), kasami_g(ctx, k, t, u ^ v));
                if (lhs != 0) sum.identity1_ok = false;
            }
        }
        sum.reports.push_back(std::move(r));
    };

    if (opts.exhaustive) {
        for (Element b = 1; b < q; ++b) {
            for (Element c = 1; c < q; ++c) {
                for (Element a = 0; a < q; ++a) check_triple(Triple{a, b, c});
            }
        }
    } else {
        Rng triples_rng = rng.fork("theorem2.triples");
        for (std::size_t i = 0; i < opts.samples; ++i) check_triple(random_triple(ctx, triples_rng));
    }
    return sum;
}

} // namespace tribch
