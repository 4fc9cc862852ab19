#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace slidesearch {

/// Fixed-length binary texture code, compared by Hamming distance.
///
/// Bit i is stored in word i/64 at position i%64. The hex serialization
/// is byte-wise: byte j holds bits 8j..8j+7 (bit 8j+b at position b) and
/// bytes are printed in ascending order, two lowercase hex digits each,
/// high nibble first. Unused padding bits are always zero.
class TextureCode {
public:
    TextureCode() = default;
    explicit TextureCode(std::uint32_t bit_length)
        : bit_length_(bit_length), words_((bit_length + 63) / 64, 0) {}

    /// Parses the hex form. The string must encode exactly
    /// ceil(bit_length/8) bytes; padding bits beyond bit_length are cleared.
    /// Throws FormatError on a length mismatch or a non-hex character.
    static TextureCode from_hex(std::string_view hex, std::uint32_t bit_length);

    std::string to_hex() const;

    std::uint32_t bit_length() const { return bit_length_; }
    std::span<const std::uint64_t> words() const { return words_; }

    bool bit(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set_bit(std::uint32_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    friend bool operator==(const TextureCode&, const TextureCode&) = default;

private:
    std::uint32_t bit_length_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Number of differing bit positions. Throws std::invalid_argument when
/// the codes have different lengths.
int hamming_distance(const TextureCode& a, const TextureCode& b);

/// Word-level Hamming distance for codes known to share a length
/// (padding bits zero). Used on the search hot path.
int hamming_distance_words(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// Consecutive-difference thresholding: bit j = 1 iff features[j+1] >
/// features[j]. Output length is features.size() - 1; inputs shorter
/// than 2 are rejected.
TextureCode binarize(std::span<const double> features);

}  // namespace slidesearch
