#pragma once

#include <cstdint>
#include <vector>

#include "pni/raster.hpp"

namespace pni {

// Tolerance-based boundary precision/recall/F1 between two thin masks.
// A predicted pixel is a hit if it lies within Euclidean distance tau of
// any ground-truth pixel, and vice versa for recall.
struct BoundaryScore {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    int tolerance = 3;
    uint64_t tp_pred = 0;
    uint64_t n_pred = 0;
    uint64_t tp_gt = 0;
    uint64_t n_gt = 0;
};

BoundaryScore boundary_f1(const BinaryMask& pred, const BinaryMask& gt, int tolerance);

BoundaryScore dataset_f1(const std::vector<std::pair<const BinaryMask*, const BinaryMask*>>& pairs,
                         int tolerance);

// Shared convention: both masks empty scores 1.0, a one-sided empty mask 0.0.
BoundaryScore score_from_counts(uint64_t tp_pred, uint64_t n_pred, uint64_t tp_gt, uint64_t n_gt,
                                int tolerance);

}  // namespace pni
