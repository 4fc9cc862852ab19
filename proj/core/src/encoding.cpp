#include "slidesearch/encoding.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace slidesearch {

LatentCode LatentCode::from_cells(std::span<const int> cells) {
    if (cells.size() != kCells)
        throw std::invalid_argument("latent code needs " + std::to_string(kCells) +
                                    " cells, got " + std::to_string(cells.size()));
    LatentCode code;
    for (int i = 0; i < kCells; ++i) {
        const int v = cells[i];
        if (v < 0 || v > kMaxCell)
            throw std::invalid_argument("latent cell value " + std::to_string(v) +
                                        " outside [0, 127]");
        code.cells_[i] = static_cast<std::uint8_t>(v);
    }
    return code;
}

void LatentCode::set_cell(int row, int col, int value) {
    if (value < 0 || value > kMaxCell)
        throw std::invalid_argument("latent cell value " + std::to_string(value) +
                                    " outside [0, 127]");
    cells_[row * kGridDim + col] = static_cast<std::uint8_t>(value);
}

RealGrid avg_pool_halve(const RealGrid& grid) {
    if (grid.dim <= 0 || grid.dim % 2 != 0)
        throw std::invalid_argument("avg_pool_halve: dimension must be even and positive, got " +
                                    std::to_string(grid.dim));
    RealGrid out;
    out.dim = grid.dim / 2;
    out.values.resize(static_cast<std::size_t>(out.dim) * out.dim);
    for (int r = 0; r < out.dim; ++r)
        for (int c = 0; c < out.dim; ++c)
            out.values[r * out.dim + c] =
                (grid.at(2 * r, 2 * c) + grid.at(2 * r, 2 * c + 1) + grid.at(2 * r + 1, 2 * c) +
                 grid.at(2 * r + 1, 2 * c + 1)) /
                4.0;
    return out;
}

namespace {

std::uint64_t truncated_sum(const RealGrid& grid) {
    const double sum = std::accumulate(grid.values.begin(), grid.values.end(), 0.0);
    return static_cast<std::uint64_t>(std::trunc(sum));
}

}  // namespace

std::uint64_t index_from_latent(const LatentCode& code) {
    RealGrid grid;
    grid.dim = LatentCode::kGridDim;
    grid.values.assign(code.cells().begin(), code.cells().end());

    const RealGrid level1 = avg_pool_halve(grid);
    const RealGrid level2 = avg_pool_halve(level1);
    const RealGrid level3 = avg_pool_halve(level2);

    const std::uint64_t sum1 = truncated_sum(level1);
    const std::uint64_t sum2 = truncated_sum(level2);
    const std::uint64_t sum3 = truncated_sum(level3);
    return sum1 + sum2 * 1000000ull + sum3 * 100000000000ull;
}

}  // namespace slidesearch
