#include "pni/metrics.hpp"

#include "pni/morphology.hpp"

namespace pni {

namespace {

uint64_t count_inside(const BinaryMask& points, const BinaryMask& zone) {
    uint64_t n = 0;
    for (size_t i = 0; i < points.bits.size(); ++i)
        n += (points.bits[i] && zone.bits[i]);
    return n;
}

}  // namespace

BoundaryScore score_from_counts(uint64_t tp_pred, uint64_t n_pred, uint64_t tp_gt, uint64_t n_gt,
                                int tolerance) {
    BoundaryScore s;
    s.tolerance = tolerance;
    s.tp_pred = tp_pred;
    s.n_pred = n_pred;
    s.tp_gt = tp_gt;
    s.n_gt = n_gt;
    if (n_pred > 0)
        s.precision = static_cast<double>(tp_pred) / static_cast<double>(n_pred);
    else
        s.precision = (n_gt == 0) ? 1.0 : 0.0;
    if (n_gt > 0)
        s.recall = static_cast<double>(tp_gt) / static_cast<double>(n_gt);
    else
        s.recall = (n_pred == 0) ? 1.0 : 0.0;
    s.f1 = (s.precision + s.recall > 0.0)
               ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
               : 0.0;
    return s;
}

BoundaryScore boundary_f1(const BinaryMask& pred, const BinaryMask& gt, int tolerance) {
    if (pred.height != gt.height || pred.width != gt.width)
        throw GeometryError("boundary_f1: mask extents differ");
    const StructuringElement se = disk(tolerance);
    const BinaryMask gt_zone = dilate(gt, se);
    const BinaryMask pred_zone = dilate(pred, se);
    return score_from_counts(count_inside(pred, gt_zone), pred.count(),
                             count_inside(gt, pred_zone), gt.count(), tolerance);
}

BoundaryScore dataset_f1(const std::vector<std::pair<const BinaryMask*, const BinaryMask*>>& pairs,
                         int tolerance) {
    if (pairs.empty()) throw ConfigError("dataset_f1: no mask pairs");
    uint64_t tp_pred = 0, n_pred = 0, tp_gt = 0, n_gt = 0;
    for (const auto& [pred, gt] : pairs) {
        const BoundaryScore s = boundary_f1(*pred, *gt, tolerance);
        tp_pred += s.tp_pred;
        n_pred += s.n_pred;
        tp_gt += s.tp_gt;
        n_gt += s.n_gt;
    }
    return score_from_counts(tp_pred, n_pred, tp_gt, n_gt, tolerance);
}

}  // namespace pni
