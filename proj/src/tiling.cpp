#include "pni/tiling.hpp"

#include <algorithm>

namespace pni {

namespace {

std::vector<int> axis_origins(int extent, int tile, int stride) {
    std::vector<int> origins;
    int o = 0;
    for (;;) {
        if (o + tile >= extent) {
            const int last = std::min(o, std::max(0, extent - tile));
            if (origins.empty() || origins.back() != last) origins.push_back(last);
            break;
        }
        origins.push_back(o);
        o += stride;
    }
    return origins;
}

}  // namespace

TilePlan plan_tiles(int h, int w, int tile, int stride) {
    if (h <= 0 || w <= 0) throw GeometryError("plan_tiles: empty image");
    if (tile < 1) throw GeometryError("plan_tiles: tile must be >= 1");
    if (stride < 1 || stride > tile) throw GeometryError("plan_tiles: stride must be in [1, tile]");

    TilePlan plan;
    plan.tile = tile;
    plan.stride_y = stride;
    plan.stride_x = stride;
    plan.image_h = h;
    plan.image_w = w;

    const auto ys = axis_origins(h, tile, stride);
    const auto xs = axis_origins(w, tile, stride);
    plan.origins.reserve(ys.size() * xs.size());
    for (int y : ys)
        for (int x : xs) plan.origins.emplace_back(y, x);
    return plan;
}

void commit_tile(StitchBuffer& buf, int origin_y, int origin_x, const ImageF32& tile_prob) {
    if (tile_prob.channels != 1) throw GeometryError("commit_tile: tile must be single-channel");
    if (origin_y < 0 || origin_x < 0 || origin_y + tile_prob.height > buf.height ||
        origin_x + tile_prob.width > buf.width)
        throw GeometryError("commit_tile: tile exceeds buffer extent");

    for (int y = 0; y < tile_prob.height; ++y) {
        const size_t row = static_cast<size_t>(origin_y + y) * buf.width + origin_x;
        for (int x = 0; x < tile_prob.width; ++x) {
            buf.sum[row + x] += static_cast<double>(tile_prob.at(y, x));
            buf.count[row + x] += 1;
        }
    }
}

void merge_into(StitchBuffer& dst, const StitchBuffer& src) {
    if (dst.height != src.height || dst.width != src.width)
        throw GeometryError("merge_into: buffer extents differ");
    for (size_t i = 0; i < dst.sum.size(); ++i) {
        dst.sum[i] += src.sum[i];
        dst.count[i] += src.count[i];
    }
}

ImageF32 finalize(const StitchBuffer& buf) {
    ImageF32 out(buf.height, buf.width, 1);
    for (size_t i = 0; i < buf.sum.size(); ++i) {
        if (buf.count[i] == 0) throw GeometryError("finalize: pixel with zero coverage (tile plan bug)");
        out.data[i] = static_cast<float>(buf.sum[i] / static_cast<double>(buf.count[i]));
    }
    return out;
}

}  // namespace pni
