#include "pni/raster.hpp"

namespace pni {

BinaryMask crop(const BinaryMask& src, const Rect& region, PaddingPolicy pad) {
    if (region.h <= 0 || region.w <= 0) throw GeometryError("crop: empty region");
    if (src.height <= 0 || src.width <= 0) throw GeometryError("crop: empty source");
    const bool fully_inside = region.y >= 0 && region.x >= 0 &&
                              region.y + region.h <= src.height &&
                              region.x + region.w <= src.width;
    if (pad == PaddingPolicy::None && !fully_inside)
        throw GeometryError("crop: region out of bounds with pad=none");

    BinaryMask out(region.h, region.w);
    for (int oy = 0; oy < region.h; ++oy) {
        const int sy = region.y + oy;
        for (int ox = 0; ox < region.w; ++ox) {
            const int sx = region.x + ox;
            if (sy >= 0 && sy < src.height && sx >= 0 && sx < src.width) {
                out.at(oy, ox) = src.at(sy, sx);
            } else if (pad == PaddingPolicy::Reflect) {
                out.at(oy, ox) = src.at(reflect_index(sy, src.height), reflect_index(sx, src.width));
            }
        }
    }
    return out;
}

ImageF32 to_float(const ImageU8& src) {
    ImageF32 out(src.height, src.width, src.channels);
    for (size_t i = 0; i < src.data.size(); ++i)
        out.data[i] = static_cast<float>(src.data[i]) / 255.0f;
    return out;
}

}  // namespace pni
