#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pni/raster.hpp"

namespace pni {

// Tile geometry shared by training extraction (stride == tile) and
// inference stitching (stride < tile). Every pixel is covered by at least
// one tile; the last origin per axis slides back instead of padding.
struct TilePlan {
    int tile = 512;
    int stride_y = 512;
    int stride_x = 512;
    int image_h = 0;
    int image_w = 0;
    std::vector<std::pair<int, int>> origins;  // (y, x), row-major sorted
};

TilePlan plan_tiles(int h, int w, int tile, int stride);

// Per-pixel running sum and coverage count; finalize() divides them.
// sum is accumulated in f64 so the mean of equal tile values is exact for
// any coverage count (see finalize).
struct StitchBuffer {
    int height = 0;
    int width = 0;
    std::vector<double> sum;
    std::vector<uint32_t> count;

    StitchBuffer() = default;
    StitchBuffer(int h, int w)
        : height(h), width(w),
          sum(static_cast<size_t>(h) * w, 0.0),
          count(static_cast<size_t>(h) * w, 0) {}
};

void commit_tile(StitchBuffer& buf, int origin_y, int origin_x, const ImageF32& tile_prob);

// Merge per-worker buffers (sums and counts add).
void merge_into(StitchBuffer& dst, const StitchBuffer& src);

ImageF32 finalize(const StitchBuffer& buf);

}  // namespace pni
