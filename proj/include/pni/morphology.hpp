#pragma once

#include <utility>
#include <vector>

#include "pni/raster.hpp"

namespace pni {

// Euclidean disk neighborhood: all integer offsets with dy²+dx² <= radius².
struct StructuringElement {
    int radius = 0;
    std::vector<std::pair<int, int>> offsets;  // (dy, dx), sorted
};

StructuringElement disk(int radius);

// Out-of-bounds pixels are false; boundaries at image edges do not
// self-thicken via phantom pixels.
BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se);

// Two-subiteration boundary peeling that keeps 8-connectivity and line
// endpoints. Deletions are applied sequentially with re-checking so an
// isolated 2x2 block shrinks instead of vanishing; a cleanup pass removes
// one simple pixel from any 2x2 block left at convergence. The result is a
// global fixed point: thin, a subset of the input, idempotent.
BinaryMask skeletonize(const BinaryMask& mask);

// True iff no 2x2 window is entirely set — the 1-px-line output contract.
bool is_thin(const BinaryMask& mask);

}  // namespace pni
