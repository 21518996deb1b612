#include "pni/augment.hpp"

#include <algorithm>
#include <cmath>

#include "pni/errors.hpp"
#include "pni/rng.hpp"

namespace pni {

namespace {

void check_range(const Range& r, const char* what) {
    if (r.lo > r.hi) throw ConfigError(std::string("augment: ill-ordered range for ") + what);
}

// --- exact grid symmetries ---------------------------------------------

template <typename T>
Raster<T> remap_rot90(const Raster<T>& in) {  // counterclockwise
    if (in.height != in.width) throw GeometryError("rot90: tile must be square");
    Raster<T> out(in.height, in.width, in.channels);
    const int n = in.height;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            for (int c = 0; c < in.channels; ++c)
                out.at(y, x, c) = in.at(x, n - 1 - y, c);
    return out;
}

template <typename T>
Raster<T> remap_rot270(const Raster<T>& in) {
    if (in.height != in.width) throw GeometryError("rot270: tile must be square");
    Raster<T> out(in.height, in.width, in.channels);
    const int n = in.height;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            for (int c = 0; c < in.channels; ++c)
                out.at(y, x, c) = in.at(n - 1 - x, y, c);
    return out;
}

template <typename T>
Raster<T> remap_rot180(const Raster<T>& in) {
    Raster<T> out(in.height, in.width, in.channels);
    for (int y = 0; y < in.height; ++y)
        for (int x = 0; x < in.width; ++x)
            for (int c = 0; c < in.channels; ++c)
                out.at(y, x, c) = in.at(in.height - 1 - y, in.width - 1 - x, c);
    return out;
}

template <typename T>
Raster<T> remap_flip_h(const Raster<T>& in) {  // mirror across the vertical axis
    Raster<T> out(in.height, in.width, in.channels);
    for (int y = 0; y < in.height; ++y)
        for (int x = 0; x < in.width; ++x)
            for (int c = 0; c < in.channels; ++c)
                out.at(y, x, c) = in.at(y, in.width - 1 - x, c);
    return out;
}

template <typename T>
Raster<T> remap_flip_v(const Raster<T>& in) {
    Raster<T> out(in.height, in.width, in.channels);
    for (int y = 0; y < in.height; ++y)
        for (int x = 0; x < in.width; ++x)
            for (int c = 0; c < in.channels; ++c)
                out.at(y, x, c) = in.at(in.height - 1 - y, x, c);
    return out;
}

template <typename T>
Raster<T> apply_geometry(const Raster<T>& in, TtaKind kind, bool inverse) {
    switch (kind) {
        case TtaKind::Rot90: return inverse ? remap_rot270(in) : remap_rot90(in);
        case TtaKind::Rot270: return inverse ? remap_rot90(in) : remap_rot270(in);
        case TtaKind::Rot180: return remap_rot180(in);
        case TtaKind::FlipH: return remap_flip_h(in);
        case TtaKind::FlipV: return remap_flip_v(in);
        default: return in;
    }
}

inline float clamp01(float v) { return std::min(1.0f, std::max(0.0f, v)); }

// --- continuous warp for training augmentation --------------------------

struct Warp {
    double theta = 0.0;  // radians, counterclockwise
    double scale = 1.0;
    double ty = 0.0;
    double tx = 0.0;
    bool active = false;
};

// Inverse map: p_in = R(-theta) * ((p_out - c - t) / s) + c
inline void warp_source(const Warp& wp, double cy, double cx, int y, int x, double& sy,
                        double& sx) {
    const double dy = (static_cast<double>(y) - cy - wp.ty) / wp.scale;
    const double dx = (static_cast<double>(x) - cx - wp.tx) / wp.scale;
    const double c = std::cos(wp.theta);
    const double s = std::sin(wp.theta);
    sy = c * dy + s * dx + cy;
    sx = -s * dy + c * dx + cx;
}

// Snap near-integer coordinates so exact grid rotations sample exactly.
inline double snap(double v) {
    const double r = std::round(v);
    return std::abs(v - r) < 1e-6 ? r : v;
}

ImageU8 warp_image(const ImageU8& in, const Warp& wp) {
    ImageU8 out(in.height, in.width, in.channels);
    const double cy = (in.height - 1) / 2.0;
    const double cx = (in.width - 1) / 2.0;
    for (int y = 0; y < in.height; ++y) {
        for (int x = 0; x < in.width; ++x) {
            double sy, sx;
            warp_source(wp, cy, cx, y, x, sy, sx);
            sy = snap(sy);
            sx = snap(sx);
            const int y0 = static_cast<int>(std::floor(sy));
            const int x0 = static_cast<int>(std::floor(sx));
            const double wy = sy - y0;
            const double wx = sx - x0;
            const int y0r = reflect_index(y0, in.height);
            const int y1r = reflect_index(y0 + 1, in.height);
            const int x0r = reflect_index(x0, in.width);
            const int x1r = reflect_index(x0 + 1, in.width);
            for (int c = 0; c < in.channels; ++c) {
                const double v = (1 - wy) * ((1 - wx) * in.at(y0r, x0r, c) + wx * in.at(y0r, x1r, c)) +
                                 wy * ((1 - wx) * in.at(y1r, x0r, c) + wx * in.at(y1r, x1r, c));
                out.at(y, x, c) = static_cast<uint8_t>(std::lround(std::min(255.0, std::max(0.0, v))));
            }
        }
    }
    return out;
}

BinaryMask warp_mask(const BinaryMask& in, const Warp& wp) {
    BinaryMask out(in.height, in.width);
    const double cy = (in.height - 1) / 2.0;
    const double cx = (in.width - 1) / 2.0;
    for (int y = 0; y < in.height; ++y) {
        for (int x = 0; x < in.width; ++x) {
            double sy, sx;
            warp_source(wp, cy, cx, y, x, sy, sx);
            const int iy = reflect_index(static_cast<int>(std::lround(sy)), in.height);
            const int ix = reflect_index(static_cast<int>(std::lround(sx)), in.width);
            out.at(y, x) = in.at(iy, ix);
        }
    }
    return out;
}

ImageU8 blur_u8(const ImageU8& in, double sigma) {
    ImageF32 tmp(in.height, in.width, in.channels);
    for (size_t i = 0; i < in.data.size(); ++i) tmp.data[i] = static_cast<float>(in.data[i]);
    tmp = gaussian_blur(tmp, sigma);
    ImageU8 out(in.height, in.width, in.channels);
    for (size_t i = 0; i < out.data.size(); ++i)
        out.data[i] = static_cast<uint8_t>(std::lround(std::min(255.0f, std::max(0.0f, tmp.data[i]))));
    return out;
}

}  // namespace

void AugmentConfig::validate() const {
    check_range(rotation_deg, "rotation_deg");
    check_range(translate_frac, "translate_frac");
    check_range(scale, "scale");
    check_range(brightness_delta, "brightness_delta");
    check_range(rgb_shift, "rgb_shift");
    check_range(smooth_sigma, "smooth_sigma");
    if (probability < 0.0 || probability > 1.0)
        throw ConfigError("augment: probability must be in [0,1]");
    if (scale.lo <= 0.0) throw ConfigError("augment: scale must be positive");
}

std::pair<ImageU8, BinaryMask> augment_pair(const ImageU8& image, const BinaryMask& mask,
                                            const AugmentConfig& cfg, uint64_t rng_seed) {
    if (image.height != mask.height || image.width != mask.width)
        throw GeometryError("augment_pair: image and mask extents differ");
    cfg.validate();
    if (!cfg.enabled) return {image, mask};

    Rng rng(rng_seed);

    // Draw in a fixed order so the stream is a pure function of the seed.
    Warp wp;
    if (rng.bernoulli(cfg.probability)) {
        wp.theta = rng.uniform(cfg.rotation_deg.lo, cfg.rotation_deg.hi) * (M_PI / 180.0);
        wp.active = true;
    }
    if (rng.bernoulli(cfg.probability)) {
        wp.ty = rng.uniform(cfg.translate_frac.lo, cfg.translate_frac.hi) * image.height;
        wp.tx = rng.uniform(cfg.translate_frac.lo, cfg.translate_frac.hi) * image.width;
        wp.active = true;
    }
    if (rng.bernoulli(cfg.probability)) {
        wp.scale = rng.uniform(cfg.scale.lo, cfg.scale.hi);
        wp.active = true;
    }
    const bool do_brightness = rng.bernoulli(cfg.probability);
    const double brightness = do_brightness ? rng.uniform(cfg.brightness_delta.lo, cfg.brightness_delta.hi) : 0.0;
    const bool do_rgb = rng.bernoulli(cfg.probability) && image.channels == 3;
    double shift[3] = {0, 0, 0};
    if (do_rgb)
        for (double& s : shift) s = rng.uniform(cfg.rgb_shift.lo, cfg.rgb_shift.hi);
    const bool do_smooth = rng.bernoulli(cfg.probability);
    const double sigma = do_smooth ? rng.uniform(cfg.smooth_sigma.lo, cfg.smooth_sigma.hi) : 0.0;

    ImageU8 img = wp.active ? warp_image(image, wp) : image;
    BinaryMask msk = wp.active ? warp_mask(mask, wp) : mask;

    if (do_brightness || do_rgb) {
        for (int y = 0; y < img.height; ++y)
            for (int x = 0; x < img.width; ++x)
                for (int c = 0; c < img.channels; ++c) {
                    double v = img.at(y, x, c) + 255.0 * (brightness + (do_rgb ? shift[c] : 0.0));
                    img.at(y, x, c) = static_cast<uint8_t>(std::lround(std::min(255.0, std::max(0.0, v))));
                }
    }
    if (do_smooth && sigma > 0.0) img = blur_u8(img, sigma);

    return {std::move(img), std::move(msk)};
}

std::string TtaTransform::name() const {
    switch (kind) {
        case TtaKind::Identity: return "identity";
        case TtaKind::Rot90: return "rot90";
        case TtaKind::Rot180: return "rot180";
        case TtaKind::Rot270: return "rot270";
        case TtaKind::FlipH: return "flip_h";
        case TtaKind::FlipV: return "flip_v";
        case TtaKind::Brightness: return "brightness";
        case TtaKind::Contrast: return "contrast";
        case TtaKind::RgbShift: return "rgb_shift";
        case TtaKind::Smooth: return "smooth";
    }
    return "identity";
}

TtaTransform TtaTransform::parse(const std::string& name) {
    TtaTransform t;
    if (name == "identity") t.kind = TtaKind::Identity;
    else if (name == "rot90") t.kind = TtaKind::Rot90;
    else if (name == "rot180") t.kind = TtaKind::Rot180;
    else if (name == "rot270") t.kind = TtaKind::Rot270;
    else if (name == "flip_h") t.kind = TtaKind::FlipH;
    else if (name == "flip_v") t.kind = TtaKind::FlipV;
    else if (name == "brightness") { t.kind = TtaKind::Brightness; t.delta = 0.1f; }
    else if (name == "contrast") { t.kind = TtaKind::Contrast; t.gamma = 1.1f; }
    else if (name == "rgb_shift") { t.kind = TtaKind::RgbShift; t.dr = 0.05f; t.dg = -0.05f; t.db = 0.05f; }
    else if (name == "smooth") { t.kind = TtaKind::Smooth; t.sigma = 1.0f; }
    else throw ConfigError("unknown TTA transform: " + name);
    return t;
}

std::vector<TtaTransform> default_tta_set() {
    std::vector<TtaTransform> set;
    for (const char* n : {"identity", "rot90", "rot180", "rot270", "flip_h", "flip_v",
                          "brightness", "smooth"})
        set.push_back(TtaTransform::parse(n));
    return set;
}

ImageF32 tta_forward(const ImageF32& image, const TtaTransform& t) {
    if (t.geometric()) return apply_geometry(image, t.kind, /*inverse=*/false);
    ImageF32 out = image;
    switch (t.kind) {
        case TtaKind::Brightness:
            for (float& v : out.data) v = clamp01(v + t.delta);
            break;
        case TtaKind::Contrast:
            for (float& v : out.data) v = clamp01(0.5f + t.gamma * (v - 0.5f));
            break;
        case TtaKind::RgbShift: {
            if (out.channels != 3) throw GeometryError("rgb_shift: image must have 3 channels");
            const float d[3] = {t.dr, t.dg, t.db};
            for (size_t i = 0; i < out.data.size(); ++i)
                out.data[i] = clamp01(out.data[i] + d[i % 3]);
            break;
        }
        case TtaKind::Smooth:
            out = gaussian_blur(out, t.sigma);
            break;
        default: break;
    }
    return out;
}

ImageF32 tta_forward_geometry(const ImageF32& raster, const TtaTransform& t) {
    return apply_geometry(raster, t.kind, /*inverse=*/false);
}

ImageF32 tta_inverse(const ImageF32& prob, const TtaTransform& t) {
    if (!t.geometric()) return prob;
    return apply_geometry(prob, t.kind, /*inverse=*/true);
}

ImageF32 gaussian_blur(const ImageF32& image, double sigma) {
    if (sigma <= 0.0) return image;
    const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
    std::vector<double> kernel(2 * radius + 1);
    double norm = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        kernel[i + radius] = std::exp(-0.5 * (i * i) / (sigma * sigma));
        norm += kernel[i + radius];
    }
    for (double& k : kernel) k /= norm;

    const int h = image.height, w = image.width, ch = image.channels;
    ImageF32 tmp(h, w, ch), out(h, w, ch);
    for (int y = 0; y < h; ++y)  // horizontal pass
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < ch; ++c) {
                double acc = 0.0;
                for (int i = -radius; i <= radius; ++i)
                    acc += kernel[i + radius] * image.at(y, reflect_index(x + i, w), c);
                tmp.at(y, x, c) = static_cast<float>(acc);
            }
    for (int y = 0; y < h; ++y)  // vertical pass
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < ch; ++c) {
                double acc = 0.0;
                for (int i = -radius; i <= radius; ++i)
                    acc += kernel[i + radius] * tmp.at(reflect_index(y + i, h), x, c);
                out.at(y, x, c) = static_cast<float>(acc);
            }
    return out;
}

}  // namespace pni
