#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace slidesearch {

/// 64x64 grid of codebook indices, one per spatial cell, each in [0, 127].
class LatentCode {
public:
    static constexpr int kGridDim = 64;
    static constexpr int kCells = kGridDim * kGridDim;
    static constexpr int kMaxCell = 127;

    LatentCode() : cells_{} {}

    /// Row-major cells; rejects wrong sizes and out-of-range values.
    static LatentCode from_cells(std::span<const int> cells);

    int cell(int row, int col) const { return cells_[row * kGridDim + col]; }
    void set_cell(int row, int col, int value);

    std::span<const std::uint8_t> cells() const { return cells_; }

private:
    std::array<std::uint8_t, kCells> cells_;
};

/// Square real-valued grid, row-major.
struct RealGrid {
    int dim = 0;
    std::vector<double> values;

    double at(int row, int col) const { return values[row * dim + col]; }
};

/// 2x2 mean pooling with stride 2; halves each dimension. The input
/// dimension must be even and positive. Cell values are dyadic rationals
/// throughout this pipeline, so double arithmetic is exact here.
RealGrid avg_pool_halve(const RealGrid& grid);

/// Smallest power of two above the largest possible mosaic index (2^50).
inline constexpr std::uint64_t kIndexUniverse = 1125899906842624ull;

/// Index of the all-127 grid; no valid latent code exceeds it.
inline constexpr std::uint64_t kMaxMosaicIndex = 812832512130048ull;

/// Integer slide index of one latent code: pool 64->32->16->8, sum each
/// pooled grid, truncate each sum toward zero, and pack the three sums
/// into disjoint decimal digit ranges (units, 10^6, 10^11).
std::uint64_t index_from_latent(const LatentCode& code);

}  // namespace slidesearch
