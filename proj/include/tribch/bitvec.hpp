#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tribch {

// Fixed-length bit vector packed LSB-first into 64-bit words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }

    bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v = true) noexcept {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) noexcept { return a ^= b; }
    friend bool operator==(const BitVec&, const BitVec&) = default;

    std::size_t popcount() const noexcept {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const noexcept {
        for (std::uint64_t w : words_) {
            if (w != 0) return true;
        }
        return false;
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    // ceil(size/8) bytes, bit i of the vector is bit (i % 8) of byte i / 8;
    // two lowercase hex digits per byte, byte 0 first.
    std::string to_hex() const;
    static BitVec from_hex(std::string_view hex, std::size_t size);

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace tribch
