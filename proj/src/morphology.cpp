#include "pni/morphology.hpp"

#include <algorithm>

namespace pni {

StructuringElement disk(int radius) {
    if (radius < 0) throw GeometryError("disk: negative radius");
    StructuringElement se;
    se.radius = radius;
    const int r2 = radius * radius;
    for (int dy = -radius; dy <= radius; ++dy)
        for (int dx = -radius; dx <= radius; ++dx)
            if (dy * dy + dx * dx <= r2) se.offsets.emplace_back(dy, dx);
    std::sort(se.offsets.begin(), se.offsets.end());
    return se;
}

BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se) {
    BinaryMask out(mask.height, mask.width);
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (!mask.at(y, x)) continue;
            for (const auto& [dy, dx] : se.offsets) {
                const int ny = y + dy;
                const int nx = x + dx;
                if (ny >= 0 && ny < mask.height && nx >= 0 && nx < mask.width)
                    out.at(ny, nx) = 1;
            }
        }
    }
    return out;
}

namespace {

// Neighbors in Zhang-Suen order p2..p9: N, NE, E, SE, S, SW, W, NW.
constexpr int kNy[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
constexpr int kNx[8] = {0, 1, 1, 1, 0, -1, -1, -1};

struct Neighborhood {
    int p[8];
    int set_count;       // B(P)
    int transitions;     // A(P): 0->1 transitions in cyclic p2..p9 order
};

Neighborhood probe(const BinaryMask& m, int y, int x) {
    Neighborhood nb{};
    nb.set_count = 0;
    for (int k = 0; k < 8; ++k) {
        nb.p[k] = m.get(y + kNy[k], x + kNx[k]) ? 1 : 0;
        nb.set_count += nb.p[k];
    }
    nb.transitions = 0;
    for (int k = 0; k < 8; ++k)
        if (nb.p[k] == 0 && nb.p[(k + 1) % 8] == 1) ++nb.transitions;
    return nb;
}

// Zhang-Suen deletability for one subiteration (0 or 1), evaluated against
// the current image state.
bool deletable(const BinaryMask& m, int y, int x, int sub) {
    const Neighborhood nb = probe(m, y, x);
    if (nb.set_count < 2 || nb.set_count > 6) return false;
    if (nb.transitions != 1) return false;
    // p2=p[0], p4=p[2], p6=p[4], p8=p[6]
    if (sub == 0) {
        if (nb.p[0] * nb.p[2] * nb.p[4] != 0) return false;
        if (nb.p[2] * nb.p[4] * nb.p[6] != 0) return false;
    } else {
        if (nb.p[0] * nb.p[2] * nb.p[6] != 0) return false;
        if (nb.p[0] * nb.p[4] * nb.p[6] != 0) return false;
    }
    return true;
}

// Remove one simple (A==1), non-endpoint pixel from every remaining
// 2x2 all-true block. Returns whether anything was deleted.
bool cleanup_squares(BinaryMask& m) {
    bool changed = false;
    for (int y = 0; y + 1 < m.height; ++y) {
        for (int x = 0; x + 1 < m.width; ++x) {
            if (!(m.at(y, x) && m.at(y, x + 1) && m.at(y + 1, x) && m.at(y + 1, x + 1)))
                continue;
            const int cand[4][2] = {{y, x}, {y, x + 1}, {y + 1, x}, {y + 1, x + 1}};
            int pick = -1;
            for (int i = 0; i < 4 && pick < 0; ++i) {
                const Neighborhood nb = probe(m, cand[i][0], cand[i][1]);
                if (nb.transitions == 1 && nb.set_count >= 2) pick = i;
            }
            if (pick < 0) pick = 0;  // no simple pixel; break the block anyway
            m.at(cand[pick][0], cand[pick][1]) = 0;
            changed = true;
        }
    }
    return changed;
}

}  // namespace

BinaryMask skeletonize(const BinaryMask& mask) {
    BinaryMask m = mask;
    std::vector<std::pair<int, int>> candidates;
    for (;;) {
        bool any_change = false;
        // Thin to convergence.
        for (;;) {
            bool deleted = false;
            for (int sub = 0; sub < 2; ++sub) {
                candidates.clear();
                for (int y = 0; y < m.height; ++y)
                    for (int x = 0; x < m.width; ++x)
                        if (m.at(y, x) && deletable(m, y, x, sub))
                            candidates.emplace_back(y, x);
                // Sequential application with re-check: a pixel whose
                // neighborhood changed since marking is kept.
                for (const auto& [y, x] : candidates) {
                    if (deletable(m, y, x, sub)) {
                        m.at(y, x) = 0;
                        deleted = true;
                    }
                }
            }
            if (!deleted) break;
            any_change = true;
        }
        if (cleanup_squares(m)) {
            any_change = true;
            continue;  // cleanup may expose new thinnable pixels
        }
        if (!any_change) break;
    }
    return m;
}

bool is_thin(const BinaryMask& mask) {
    for (int y = 0; y + 1 < mask.height; ++y)
        for (int x = 0; x + 1 < mask.width; ++x)
            if (mask.at(y, x) && mask.at(y, x + 1) && mask.at(y + 1, x) && mask.at(y + 1, x + 1))
                return false;
    return true;
}

}  // namespace pni
