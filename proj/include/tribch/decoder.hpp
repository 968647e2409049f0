#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tribch/bitvec.hpp"
#include "tribch/code.hpp"

namespace tribch {

// The three n-bit blocks of H r^T: sum x_i, sum f(x_i), sum g(x_i).
struct Syndrome {
    Element s1 = 0;
    Element sf = 0;
    Element sg = 0;

    bool zero() const noexcept { return s1 == 0 && sf == 0 && sg == 0; }
    friend bool operator==(const Syndrome&, const Syndrome&) = default;

    std::uint64_t packed(unsigned n) const noexcept {
        return std::uint64_t{s1} | (std::uint64_t{sf} << n) | (std::uint64_t{sg} << (2 * n));
    }
    static Syndrome unpack(std::uint64_t v, unsigned n) noexcept {
        const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
        return {static_cast<Element>(v & mask), static_cast<Element>((v >> n) & mask),
                static_cast<Element>((v >> (2 * n)) & mask)};
    }
};

Syndrome syndrome_of(const ParityCheckMatrix& h, const BitVec& received);

/// Syndromes of all weight-2 error patterns. Construction throws
/// CollisionDetected when two patterns of weight <= 2 share a syndrome.
class PairIndex {
public:
    explicit PairIndex(const ParityCheckMatrix& h);

    std::size_t size() const noexcept { return index_.size(); }
    // Positions (i < j) whose columns xor to the packed syndrome, if any.
    const std::pair<std::uint32_t, std::uint32_t>* find(std::uint64_t packed) const;
    const std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>>& entries()
        const noexcept {
        return index_;
    }

private:
    std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>> index_;
};

PairIndex build_pair_index(const ParityCheckMatrix& h);

enum class DecodeStatus { Clean, Corrected, Uncorrectable };

struct DecodeResult {
    DecodeStatus status = DecodeStatus::Uncorrectable;
    std::vector<std::size_t> error_positions; // ascending
    BitVec corrected;
};

/// Syndrome decoding up to weight 3: single-column probe, pair-index lookup,
/// then one column plus a pair lookup for every position.
DecodeResult decode(const ParityCheckMatrix& h, const PairIndex& index, const BitVec& received);

const char* status_name(DecodeStatus s) noexcept;

} // namespace tribch
