#include "slidesearch/texture.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

#include "slidesearch/errors.hpp"

namespace slidesearch {

namespace {

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

constexpr char kHexDigits[] = "0123456789abcdef";

}  // namespace

TextureCode TextureCode::from_hex(std::string_view hex, std::uint32_t bit_length) {
    const std::size_t n_bytes = (bit_length + 7) / 8;
    if (hex.size() != 2 * n_bytes)
        throw FormatError("texture_bits has " + std::to_string(hex.size()) +
                          " hex digits, expected " + std::to_string(2 * n_bytes) + " for " +
                          std::to_string(bit_length) + " bits");
    TextureCode code(bit_length);
    for (std::size_t j = 0; j < n_bytes; ++j) {
        const int hi = hex_nibble(hex[2 * j]);
        const int lo = hex_nibble(hex[2 * j + 1]);
        if (hi < 0 || lo < 0) throw FormatError("texture_bits contains a non-hex character");
        const auto byte = static_cast<std::uint64_t>(hi << 4 | lo);
        code.words_[j >> 3] |= byte << ((j & 7) * 8);
    }
    // Clear padding above bit_length so word-level comparisons stay exact.
    if (bit_length % 64 != 0 && !code.words_.empty())
        code.words_.back() &= (std::uint64_t{1} << (bit_length % 64)) - 1;
    return code;
}

std::string TextureCode::to_hex() const {
    const std::size_t n_bytes = (bit_length_ + 7) / 8;
    std::string out(2 * n_bytes, '0');
    for (std::size_t j = 0; j < n_bytes; ++j) {
        const auto byte = static_cast<unsigned>((words_[j >> 3] >> ((j & 7) * 8)) & 0xff);
        out[2 * j] = kHexDigits[byte >> 4];
        out[2 * j + 1] = kHexDigits[byte & 0xf];
    }
    return out;
}

int hamming_distance(const TextureCode& a, const TextureCode& b) {
    if (a.bit_length() != b.bit_length())
        throw std::invalid_argument("hamming_distance: code lengths differ (" +
                                    std::to_string(a.bit_length()) + " vs " +
                                    std::to_string(b.bit_length()) + ")");
    return hamming_distance_words(a.words(), b.words());
}

int hamming_distance_words(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    assert(a.size() == b.size());
    int dist = 0;
    for (std::size_t i = 0; i < a.size(); ++i) dist += std::popcount(a[i] ^ b[i]);
    return dist;
}

TextureCode binarize(std::span<const double> features) {
    if (features.size() < 2)
        throw std::invalid_argument("binarize: need at least 2 feature values");
    TextureCode code(static_cast<std::uint32_t>(features.size() - 1));
    for (std::size_t j = 0; j + 1 < features.size(); ++j)
        if (features[j + 1] > features[j]) code.set_bit(static_cast<std::uint32_t>(j), true);
    return code;
}

}  // namespace slidesearch
