#pragma once

#include <cstdint>
#include <vector>

#include "pni/errors.hpp"

namespace pni {

// Row-major, channel-interleaved pixel plane. u8 for stored images,
// f32 for probability maps; probability rasters stay in [0,1] at module
// boundaries.
template <typename T>
struct Raster {
    int height = 0;
    int width = 0;
    int channels = 1;
    std::vector<T> data;

    Raster() = default;
    Raster(int h, int w, int c, T fill = T{})
        : height(h), width(w), channels(c),
          data(static_cast<size_t>(h) * w * c, fill) {}

    T& at(int y, int x, int c = 0) {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    T at(int y, int x, int c = 0) const {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }

    size_t size() const { return data.size(); }

    bool same_extent(const Raster& o) const {
        return height == o.height && width == o.width && channels == o.channels;
    }

    bool operator==(const Raster& o) const {
        return height == o.height && width == o.width && channels == o.channels &&
               data == o.data;
    }
};

using ImageU8 = Raster<uint8_t>;
using ImageF32 = Raster<float>;

// H×W boolean plane (stored as bytes 0/1). Ground-truth boundary lines,
// dilated training targets, and skeletonized predictions all live here.
struct BinaryMask {
    int height = 0;
    int width = 0;
    std::vector<uint8_t> bits;

    BinaryMask() = default;
    BinaryMask(int h, int w, uint8_t fill = 0)
        : height(h), width(w), bits(static_cast<size_t>(h) * w, fill) {}

    uint8_t& at(int y, int x) { return bits[static_cast<size_t>(y) * width + x]; }
    uint8_t at(int y, int x) const { return bits[static_cast<size_t>(y) * width + x]; }

    bool get(int y, int x) const {
        if (y < 0 || y >= height || x < 0 || x >= width) return false;
        return bits[static_cast<size_t>(y) * width + x] != 0;
    }

    size_t count() const {
        size_t n = 0;
        for (uint8_t b : bits) n += (b != 0);
        return n;
    }

    bool operator==(const BinaryMask& o) const {
        return height == o.height && width == o.width && bits == o.bits;
    }
};

struct Rect {
    int y = 0;
    int x = 0;
    int h = 0;
    int w = 0;
};

enum class PaddingPolicy { None, Zero, Reflect };

// Mirror index into [0, n) without repeating the edge pixel; folds repeatedly
// so regions much larger than the source still resolve.
inline int reflect_index(int i, int n) {
    if (n == 1) return 0;
    const int period = 2 * (n - 1);
    i %= period;
    if (i < 0) i += period;
    return i < n ? i : period - i;
}

template <typename T>
Raster<T> crop(const Raster<T>& src, const Rect& region, PaddingPolicy pad = PaddingPolicy::Reflect) {
    if (region.h <= 0 || region.w <= 0) throw GeometryError("crop: empty region");
    if (src.height <= 0 || src.width <= 0) throw GeometryError("crop: empty source");
    const bool fully_inside = region.y >= 0 && region.x >= 0 &&
                              region.y + region.h <= src.height &&
                              region.x + region.w <= src.width;
    if (pad == PaddingPolicy::None && !fully_inside)
        throw GeometryError("crop: region out of bounds with pad=none");

    Raster<T> out(region.h, region.w, src.channels);
    for (int oy = 0; oy < region.h; ++oy) {
        const int sy = region.y + oy;
        for (int ox = 0; ox < region.w; ++ox) {
            const int sx = region.x + ox;
            const bool inside = sy >= 0 && sy < src.height && sx >= 0 && sx < src.width;
            if (inside) {
                for (int c = 0; c < src.channels; ++c) out.at(oy, ox, c) = src.at(sy, sx, c);
            } else if (pad == PaddingPolicy::Reflect) {
                const int ry = reflect_index(sy, src.height);
                const int rx = reflect_index(sx, src.width);
                for (int c = 0; c < src.channels; ++c) out.at(oy, ox, c) = src.at(ry, rx, c);
            }
            // Zero: already value-initialized
        }
    }
    return out;
}

BinaryMask crop(const BinaryMask& src, const Rect& region, PaddingPolicy pad = PaddingPolicy::Reflect);

ImageF32 to_float(const ImageU8& src);

}  // namespace pni
