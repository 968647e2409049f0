#include "tribch/code.hpp"

#include <bit>

#include "tribch/error.hpp"

namespace tribch {

std::vector<BitVec> ParityCheckMatrix::rows() const {
    std::vector<BitVec> out(row_count(), BitVec(length()));
    for (std::size_t i = 0; i < columns.size(); ++i) {
        for (unsigned r = 0; r < row_count(); ++r) {
            if ((columns[i] >> r) & 1) out[r].set(i);
        }
    }
    return out;
}

std::string ParityCheckMatrix::to_text() const {
    std::string out;
    out.reserve(row_count() * (length() + 1));
    for (unsigned r = 0; r < row_count(); ++r) {
        for (std::uint64_t col : columns) out.push_back(((col >> r) & 1) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

ParityCheckMatrix build_parity_check(const FieldCtx& ctx, const MonomialPair& pair) {
    ParityCheckMatrix h;
    h.n = ctx.degree();
    h.columns.resize(ctx.order());
    for (Element x = 1; x < ctx.size(); ++x) {
        h.columns[x - 1] = std::uint64_t{x} | (std::uint64_t{pair.f[x]} << h.n) |
                           (std::uint64_t{pair.g[x]} << (2 * h.n));
    }
    return h;
}

unsigned gf2_rank(const ParityCheckMatrix& h) {
    // Column rank via an xor basis indexed by leading bit.
    std::vector<std::uint64_t> basis(64, 0);
    unsigned rank = 0;
    for (std::uint64_t v : h.columns) {
        while (v != 0) {
            const int lead = 63 - std::countl_zero(v);
            if (basis[lead] == 0) {
                basis[lead] = v;
                ++rank;
                break;
            }
            v ^= basis[lead];
        }
    }
    return rank;
}

CodeDimensions rank_and_dimension(const ParityCheckMatrix& h) {
    const unsigned rank = gf2_rank(h);
    if (rank < h.row_count()) {
        throw RankDefect("parity-check matrix has rank " + std::to_string(rank) + " < 3n = " +
                         std::to_string(h.row_count()));
    }
    return {rank, h.length() - rank};
}

BigInt WeightDistribution::total() const {
    BigInt sum = 0;
    for (const BigInt& a : coefficients) sum += a;
    return sum;
}

bool is_five_weight(unsigned n, std::size_t w) {
    const std::size_t mid = std::size_t{1} << (n - 1);
    const std::size_t lo = std::size_t{1} << ((n - 1) / 2);
    const std::size_t hi = std::size_t{1} << ((n + 1) / 2);
    return w == mid || w == mid - lo || w == mid + lo || w == mid - hi || w == mid + hi;
}

WeightDistribution dual_weights_from_spectrum(const FieldCtx& ctx, const MonomialPair& pair,
                                              const SpectrumReport& report,
                                              const ParityCheckMatrix& h) {
    rank_and_dimension(h);
    const std::int64_t q = ctx.size();
    WeightDistribution dist(h.length());
    auto add_values = [&](const ValueHistogram& hist) {
        for (const auto& [v, count] : hist) dist.coefficients[static_cast<std::size_t>((q - v) / 2)] += count;
    };

    // b = c = 0: the zero word and the 2^n - 1 words Tr(a x), a != 0.
    dist.coefficients[0] += 1;
    dist.coefficients[static_cast<std::size_t>(q / 2)] += static_cast<std::uint64_t>(q - 1);
    add_values(single_function_spectrum(ctx, pair.f));
    add_values(single_function_spectrum(ctx, pair.g));
    add_values(report.histogram);
    return dist;
}

SystematicEncoder::SystematicEncoder(const ParityCheckMatrix& h) : length_(h.length()) {
    std::vector<BitVec> rows = h.rows();
    std::size_t next = 0;
    for (std::size_t col = 0; col < length_ && next < rows.size(); ++col) {
        std::size_t pick = next;
        while (pick < rows.size() && !rows[pick].get(col)) ++pick;
        if (pick == rows.size()) continue;
        std::swap(rows[next], rows[pick]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && rows[r].get(col)) rows[r] ^= rows[next];
        }
        pivots_.push_back(col);
        ++next;
    }
    std::vector<bool> is_pivot(length_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    for (std::size_t col = 0; col < length_; ++col) {
        if (is_pivot[col]) continue;
        info_.push_back(col);
        std::uint64_t mask = 0;
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            if (rows[r].get(col)) mask |= std::uint64_t{1} << r;
        }
        parity_masks_.push_back(mask);
    }
}

BitVec SystematicEncoder::encode(const BitVec& message) const {
    if (message.size() != dimension()) {
        throw InvalidArgument("message has " + std::to_string(message.size()) + " bits, expected " +
                              std::to_string(dimension()));
    }
    BitVec word(length_);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < info_.size(); ++i) {
        if (!message.get(i)) continue;
        word.set(info_[i]);
        acc ^= parity_masks_[i];
    }
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        if ((acc >> r) & 1) word.set(pivots_[r]);
    }
    return word;
}

BitVec SystematicEncoder::generator_row(std::size_t i) const {
    BitVec m(dimension());
    m.set(i);
    return encode(m);
}

WeightDistribution weight_distribution_bruteforce(const FieldCtx& ctx, const MonomialPair& pair) {
    if (ctx.degree() != 5) {
        throw InvalidArgument("brute-force codeword enumeration supports n = 5 only");
    }
    const ParityCheckMatrix h = build_parity_check(ctx, pair);
    const SystematicEncoder enc(h);
    std::vector<std::uint64_t> gens;
    for (std::size_t i = 0; i < enc.dimension(); ++i) gens.push_back(enc.generator_row(i).words()[0]);

    std::vector<std::uint64_t> counts(h.length() + 1, 0);
    std::uint64_t word = 0;
    counts[0] = 1;
    // Gray code: step i flips generator countr_zero(i).
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << gens.size()); ++i) {
        word ^= gens[static_cast<std::size_t>(std::countr_zero(i))];
        ++counts[static_cast<std::size_t>(std::popcount(word))];
    }
    WeightDistribution dist(h.length());
    for (std::size_t w = 0; w < counts.size(); ++w) dist.coefficients[w] = counts[w];
    return dist;
}

unsigned min_distance_bruteforce(const FieldCtx& ctx, const MonomialPair& pair) {
    const WeightDistribution dist = weight_distribution_bruteforce(ctx, pair);
    for (std::size_t w = 1; w < dist.coefficients.size(); ++w) {
        if (dist.coefficients[w] != 0) return static_cast<unsigned>(w);
    }
    return 0;
}

SyndromeDistinctness check_syndrome_distinctness(const ParityCheckMatrix& h) {
    if (h.n > 9) throw InvalidArgument("syndrome distinctness scan supports n <= 9");
    std::vector<bool> seen(std::size_t{1} << h.row_count(), false);
    SyndromeDistinctness out;
    out.distinct = true;
    auto mark = [&](std::uint64_t s) {
        ++out.patterns;
        if (seen[s]) out.distinct = false;
        seen[s] = true;
    };
    const auto& col = h.columns;
    const std::size_t len = col.size();
    mark(0);
    for (std::size_t i = 0; i < len; ++i) {
        mark(col[i]);
        for (std::size_t j = i + 1; j < len; ++j) {
            const std::uint64_t sij = col[i] ^ col[j];
            mark(sij);
            for (std::size_t k = j + 1; k < len; ++k) mark(sij ^ col[k]);
        }
    }
    return out;
}

std::vector<std::size_t> row_weights(const ParityCheckMatrix& h) {
    std::vector<std::size_t> out;
    for (const BitVec& row : h.rows()) out.push_back(row.popcount());
    return out;
}

} // namespace tribch
