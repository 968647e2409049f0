#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tribch/bitvec.hpp"
#include "tribch/field.hpp"
#include "tribch/functions.hpp"
#include "tribch/spectrum.hpp"

namespace tribch {

using BigInt = boost::multiprecision::cpp_int;

/// The 3n x (2^n - 1) parity-check matrix with columns (x, f(x), g(x)).
///
/// Column i (0-based) belongs to the field element x = i + 1 and is stored
/// packed as x | f(x) << n | g(x) << 2n, so row r of the matrix is bit r of
/// every packed column and a syndrome is the xor of the columns of the error
/// positions.
struct ParityCheckMatrix {
    unsigned n = 0;
    std::vector<std::uint64_t> columns;

    std::size_t length() const noexcept { return columns.size(); }
    unsigned row_count() const noexcept { return 3 * n; }
    std::vector<BitVec> rows() const;
    // One line of '0'/'1' per row.
    std::string to_text() const;
};

ParityCheckMatrix build_parity_check(const FieldCtx& ctx, const MonomialPair& pair);

struct CodeDimensions {
    unsigned rank = 0;
    std::size_t dim = 0;
};

// GF(2) rank of the matrix.
unsigned gf2_rank(const ParityCheckMatrix& h);
// Throws RankDefect when rank < 3n.
CodeDimensions rank_and_dimension(const ParityCheckMatrix& h);

struct WeightDistribution {
    std::vector<BigInt> coefficients; // A_0 .. A_N

    WeightDistribution() = default;
    explicit WeightDistribution(std::size_t length) : coefficients(length + 1) {}

    std::size_t length() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
    BigInt total() const;
    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Weight distribution of the dual code (row space of H), from the spectrum
/// report for b, c in L* plus dedicated passes for the strata where exactly
/// one of b, c is zero. Throws RankDefect unless H has rank 3n.
WeightDistribution dual_weights_from_spectrum(const FieldCtx& ctx, const MonomialPair& pair,
                                              const SpectrumReport& report,
                                              const ParityCheckMatrix& h);

// {2^{n-1}, 2^{n-1} +- 2^{(n-1)/2}, 2^{n-1} +- 2^{(n+1)/2}}
bool is_five_weight(unsigned n, std::size_t w);

/// Systematic encoder from the reduced row echelon form of H with pivots on
/// the lowest-index columns; message bits fill the remaining columns in order.
class SystematicEncoder {
public:
    explicit SystematicEncoder(const ParityCheckMatrix& h);

    std::size_t length() const noexcept { return length_; }
    std::size_t dimension() const noexcept { return info_.size(); }
    const std::vector<std::size_t>& info_positions() const noexcept { return info_; }
    const std::vector<std::size_t>& pivot_positions() const noexcept { return pivots_; }

    BitVec encode(const BitVec& message) const;
    // Codeword for the i-th unit message.
    BitVec generator_row(std::size_t i) const;

private:
    std::size_t length_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> info_;
    std::vector<std::uint64_t> parity_masks_; // per info column: pivot rows it feeds
};

// Exhaustive codeword enumeration; n = 5 only.
WeightDistribution weight_distribution_bruteforce(const FieldCtx& ctx, const MonomialPair& pair);
unsigned min_distance_bruteforce(const FieldCtx& ctx, const MonomialPair& pair);

struct SyndromeDistinctness {
    bool distinct = false;
    std::uint64_t patterns = 0; // error patterns of weight <= 3 examined
};

// All error patterns of weight <= 3 have pairwise distinct syndromes; n <= 9.
SyndromeDistinctness check_syndrome_distinctness(const ParityCheckMatrix& h);

// Weight of every row of H as a word.
std::vector<std::size_t> row_weights(const ParityCheckMatrix& h);

} // namespace tribch
