#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pni/raster.hpp"

namespace pni {

struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

// Stochastic training augmentation. Geometric transforms hit image and mask
// identically (image bilinear, mask nearest-neighbor); photometric transforms
// hit the image only. Ranges are toolkit defaults; per-transform apply
// probability defaults to 0.5.
struct AugmentConfig {
    bool enabled = true;
    Range rotation_deg{-30.0, 30.0};
    Range translate_frac{-0.1, 0.1};
    Range scale{0.9, 1.1};
    Range brightness_delta{-0.2, 0.2};  // on [0,1] scale
    Range rgb_shift{-0.1, 0.1};         // per channel, [0,1] scale
    Range smooth_sigma{0.0, 1.5};       // px
    double probability = 0.5;

    void validate() const;
};

std::pair<ImageU8, BinaryMask> augment_pair(const ImageU8& image, const BinaryMask& mask,
                                            const AugmentConfig& cfg, uint64_t rng_seed);

// Test-time augmentation: geometric kinds are exact grid symmetries with
// exact inverses; photometric kinds have identity as their mask-space inverse.
enum class TtaKind {
    Identity,
    Rot90,
    Rot180,
    Rot270,
    FlipH,
    FlipV,
    Brightness,
    Contrast,
    RgbShift,
    Smooth,
};

struct TtaTransform {
    TtaKind kind = TtaKind::Identity;
    float delta = 0.0f;                       // brightness
    float gamma = 1.0f;                       // contrast (pivot 0.5)
    float dr = 0.0f, dg = 0.0f, db = 0.0f;    // rgb shift
    float sigma = 0.0f;                       // smooth

    bool geometric() const {
        return kind == TtaKind::Identity || kind == TtaKind::Rot90 || kind == TtaKind::Rot180 ||
               kind == TtaKind::Rot270 || kind == TtaKind::FlipH || kind == TtaKind::FlipV;
    }

    std::string name() const;
    static TtaTransform parse(const std::string& name);
};

// identity, rot90, rot180, rot270, flip_h, flip_v, brightness(+0.1), smooth(1.0)
std::vector<TtaTransform> default_tta_set();

ImageF32 tta_forward(const ImageF32& image, const TtaTransform& t);

// Geometric part only (identity for photometric kinds); this is the
// transform that applies to mask-space / probability rasters.
ImageF32 tta_forward_geometry(const ImageF32& raster, const TtaTransform& t);

ImageF32 tta_inverse(const ImageF32& prob, const TtaTransform& t);

// Gaussian blur with reflect borders, shared by augmentation and TTA.
ImageF32 gaussian_blur(const ImageF32& image, double sigma);

}  // namespace pni
