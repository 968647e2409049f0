#include "tribch/bitvec.hpp"

#include "tribch/error.hpp"

namespace tribch {

namespace {

int hex_value(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    return -1;
}

} // namespace

std::string BitVec::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::size_t bytes = (size_ + 7) / 8;
    std::string out;
    out.reserve(2 * bytes);
    for (std::size_t i = 0; i < bytes; ++i) {
        const unsigned byte = static_cast<unsigned>((words_[i / 8] >> (8 * (i % 8))) & 0xff);
        out.push_back(kDigits[byte >> 4]);
        out.push_back(kDigits[byte & 15]);
    }
    return out;
}

BitVec BitVec::from_hex(std::string_view hex, std::size_t size) {
    const std::size_t bytes = (size + 7) / 8;
    if (hex.size() != 2 * bytes) {
        throw InvalidArgument("hex word of length " + std::to_string(hex.size()) + ", expected " +
                              std::to_string(2 * bytes));
    }
    BitVec v(size);
    for (std::size_t i = 0; i < bytes; ++i) {
        const int hi = hex_value(hex[2 * i]);
        const int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) throw InvalidArgument("invalid hex digit in word");
        const unsigned byte = static_cast<unsigned>(hi * 16 + lo);
        for (unsigned b = 0; b < 8; ++b) {
            if (!((byte >> b) & 1)) continue;
            const std::size_t bit = 8 * i + b;
            if (bit >= size) throw InvalidArgument("hex word sets padding bits");
            v.set(bit);
        }
    }
    return v;
}

} // namespace tribch
