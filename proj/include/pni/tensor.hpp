#pragma once

#include <cstdint>
#include <vector>

#include "pni/raster.hpp"

namespace pni {

// NCHW activation tensor.
template <typename T>
struct Tensor4 {
    int n = 0, c = 0, h = 0, w = 0;
    std::vector<T> v;

    Tensor4() = default;
    Tensor4(int n_, int c_, int h_, int w_)
        : n(n_), c(c_), h(h_), w(w_),
          v(static_cast<size_t>(n_) * c_ * h_ * w_, T(0)) {}

    size_t size() const { return v.size(); }
    size_t plane_size() const { return static_cast<size_t>(h) * w; }

    T* plane(int in, int ic) { return v.data() + (static_cast<size_t>(in) * c + ic) * plane_size(); }
    const T* plane(int in, int ic) const {
        return v.data() + (static_cast<size_t>(in) * c + ic) * plane_size();
    }

    T& at(int in, int ic, int iy, int ix) { return plane(in, ic)[static_cast<size_t>(iy) * w + ix]; }
    T at(int in, int ic, int iy, int ix) const {
        return plane(in, ic)[static_cast<size_t>(iy) * w + ix];
    }

    bool same_shape(const Tensor4& o) const { return n == o.n && c == o.c && h == o.h && w == o.w; }
};

// HWC interleaved raster stack -> NCHW batch.
template <typename T>
Tensor4<T> batch_from_rasters(const std::vector<ImageF32>& images) {
    if (images.empty()) return {};
    const int n = static_cast<int>(images.size());
    const int c = images[0].channels, h = images[0].height, w = images[0].width;
    Tensor4<T> out(n, c, h, w);
    for (int i = 0; i < n; ++i) {
        const ImageF32& img = images[i];
        if (img.channels != c || img.height != h || img.width != w)
            throw GeometryError("batch_from_rasters: mixed extents in batch");
        for (int ic = 0; ic < c; ++ic) {
            T* dst = out.plane(i, ic);
            for (int y = 0; y < h; ++y)
                for (int x = 0; x < w; ++x)
                    dst[static_cast<size_t>(y) * w + x] = static_cast<T>(img.at(y, x, ic));
        }
    }
    return out;
}

template <typename T>
ImageF32 raster_from_plane(const Tensor4<T>& t, int sample, int channel) {
    ImageF32 out(t.h, t.w, 1);
    const T* src = t.plane(sample, channel);
    for (size_t i = 0; i < out.data.size(); ++i) out.data[i] = static_cast<float>(src[i]);
    return out;
}

}  // namespace pni
