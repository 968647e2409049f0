#include "tribch/decoder.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>

#include "tribch/error.hpp"

namespace tribch {

namespace {

std::uint64_t packed_syndrome(const ParityCheckMatrix& h, const BitVec& r) {
    std::uint64_t s = 0;
    const auto& words = r.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t bits = words[w];
        while (bits != 0) {
            const std::size_t i = 64 * w + static_cast<std::size_t>(std::countr_zero(bits));
            s ^= h.columns[i];
            bits &= bits - 1;
        }
    }
    return s;
}

// Position whose column equals the syndrome; the first block of column i is i + 1.
std::optional<std::size_t> single_column(const ParityCheckMatrix& h, std::uint64_t s) {
    const std::uint64_t x = s & ((std::uint64_t{1} << h.n) - 1);
    if (x == 0) return std::nullopt;
    if (h.columns[x - 1] != s) return std::nullopt;
    return static_cast<std::size_t>(x - 1);
}

} // namespace

Syndrome syndrome_of(const ParityCheckMatrix& h, const BitVec& received) {
    if (received.size() != h.length()) {
        throw InvalidArgument("received word has " + std::to_string(received.size()) +
                              " bits, expected " + std::to_string(h.length()));
    }
    return Syndrome::unpack(packed_syndrome(h, received), h.n);
}

PairIndex::PairIndex(const ParityCheckMatrix& h) {
    const auto& col = h.columns;
    const std::size_t len = col.size();
    index_.reserve(len * (len - 1) / 2);
    for (std::uint32_t i = 0; i < len; ++i) {
        for (std::uint32_t j = i + 1; j < len; ++j) {
            const std::uint64_t s = col[i] ^ col[j];
            if (s == 0 || single_column(h, s)) {
                throw CollisionDetected("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") has the syndrome of a pattern of weight <= 1");
            }
            const auto [it, inserted] = index_.try_emplace(s, i, j);
            if (!inserted) {
                throw CollisionDetected("pairs (" + std::to_string(it->second.first) + "," +
                                        std::to_string(it->second.second) + ") and (" +
                                        std::to_string(i) + "," + std::to_string(j) +
                                        ") share a syndrome");
            }
        }
    }
}

const std::pair<std::uint32_t, std::uint32_t>* PairIndex::find(std::uint64_t packed) const {
    const auto it = index_.find(packed);
    return it == index_.end() ? nullptr : &it->second;
}

PairIndex build_pair_index(const ParityCheckMatrix& h) { return PairIndex(h); }

DecodeResult decode(const ParityCheckMatrix& h, const PairIndex& index, const BitVec& received) {
    DecodeResult result;
    result.corrected = received;
    const std::uint64_t s = syndrome_of(h, received).packed(h.n);
    if (s == 0) {
        result.status = DecodeStatus::Clean;
        return result;
    }

    if (const auto pos = single_column(h, s)) {
        result.error_positions = {*pos};
    } else if (const auto* p = index.find(s)) {
        result.error_positions = {p->first, p->second};
    } else {
        for (std::size_t i = 0; i < h.length(); ++i) {
            const auto* p = index.find(s ^ h.columns[i]);
            if (p == nullptr || p->first == i || p->second == i) continue;
            result.error_positions = {i, p->first, p->second};
            std::sort(result.error_positions.begin(), result.error_positions.end());
            break;
        }
    }

    if (result.error_positions.empty()) {
        result.status = DecodeStatus::Uncorrectable;
        return result;
    }
    for (std::size_t pos : result.error_positions) result.corrected.flip(pos);
    result.status = DecodeStatus::Corrected;
    return result;
}

const char* status_name(DecodeStatus s) noexcept {
    switch (s) {
    case DecodeStatus::Clean: return "clean";
    case DecodeStatus::Corrected: return "corrected";
    case DecodeStatus::Uncorrectable: return "uncorrectable";
    }
    return "unknown";
}

} // namespace tribch
