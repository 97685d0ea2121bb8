#include "mosaic/tile_metrics.hpp"

#include <cstdlib>
#include <string>
#include <unordered_map>

#include "mosaic/error.hpp"

namespace mosaic {

namespace {

void check_same_shape(const char* what, int aw, int ah, int bw, int bh) {
    if (aw != bw || ah != bh) {
        throw ShapeError(std::string(what) + ": " + std::to_string(aw) + "x" + std::to_string(ah) +
                         " vs " + std::to_string(bw) + "x" + std::to_string(bh));
    }
}

std::vector<std::uint64_t> label_sizes(const LabeledMask& m) {
    std::vector<std::uint64_t> sizes(m.region_count + 1, 0);
    for (std::uint32_t l : m.labels) ++sizes[l];
    return sizes;
}

}  // namespace

std::vector<TileAssignment> best_match(const LabeledMask& gt, const LabeledMask& pred,
                                       std::uint64_t min_region_px) {
    check_same_shape("best_match", gt.width, gt.height, pred.width, pred.height);

    const std::vector<std::uint64_t> tile_sizes = label_sizes(gt);
    const std::vector<std::uint64_t> pred_sizes = label_sizes(pred);

    std::vector<bool> pred_active(pred.region_count + 1, false);
    for (std::uint32_t j = 1; j <= pred.region_count; ++j) {
        pred_active[j] = pred_sizes[j] >= min_region_px;
    }

    // Sparse intersection table keyed by (gt_label, pred_label).
    std::unordered_map<std::uint64_t, std::uint64_t> inter;
    for (std::size_t i = 0; i < gt.labels.size(); ++i) {
        std::uint32_t ti = gt.labels[i];
        std::uint32_t rj = pred.labels[i];
        if (ti == 0 || rj == 0 || !pred_active[rj]) continue;
        std::uint64_t key = (static_cast<std::uint64_t>(ti) << 32) | rj;
        ++inter[key];
    }

    // Per-tile arg max; the (count desc, label asc) order makes the result
    // independent of hash iteration order.
    std::vector<TileAssignment> out(gt.region_count);
    for (std::uint32_t i = 1; i <= gt.region_count; ++i) {
        out[i - 1].gt_label = i;
        out[i - 1].tile_size = tile_sizes[i];
    }
    for (const auto& [key, count] : inter) {
        std::uint32_t ti = static_cast<std::uint32_t>(key >> 32);
        std::uint32_t rj = static_cast<std::uint32_t>(key & 0xffffffffULL);
        TileAssignment& a = out[ti - 1];
        if (!a.matched_pred_label || count > a.intersection ||
            (count == a.intersection && rj < *a.matched_pred_label)) {
            a.matched_pred_label = rj;
            a.intersection = count;
            a.region_size = pred_sizes[rj];
        }
    }
    return out;
}

TileMetrics tile_metrics(const LabeledMask& gt, const LabeledMask& pred,
                         std::uint64_t min_region_px) {
    if (gt.region_count == 0) {
        throw InvalidArgumentError("tile_metrics: ground truth has no tiles");
    }
    TileMetrics m;
    m.assignments = best_match(gt, pred, min_region_px);
    m.n_gt = gt.region_count;

    const std::vector<std::uint64_t> pred_sizes = label_sizes(pred);
    m.n_pred = 0;
    for (std::uint32_t j = 1; j <= pred.region_count; ++j) {
        if (pred_sizes[j] >= min_region_px) ++m.n_pred;
    }

    const double n_gt = static_cast<double>(m.n_gt);
    m.count_error = std::abs(static_cast<double>(m.n_gt) - static_cast<double>(m.n_pred)) / n_gt;

    double prec_sum = 0.0;
    double rec_sum = 0.0;
    for (const TileAssignment& a : m.assignments) {
        if (!a.matched_pred_label) continue;
        prec_sum += static_cast<double>(a.intersection) / static_cast<double>(a.region_size);
        rec_sum += static_cast<double>(a.intersection) / static_cast<double>(a.tile_size);
    }
    m.precision = prec_sum / n_gt;
    m.recall = rec_sum / n_gt;
    m.f_measure = (m.precision + m.recall) == 0.0
                      ? 0.0
                      : 2.0 * m.precision * m.recall / (m.precision + m.recall);
    return m;
}

std::pair<PixelMetrics, TileMetrics> evaluate_pair(const BinaryMask& gt, const BinaryMask& pred,
                                                   Connectivity conn,
                                                   std::uint64_t min_region_px) {
    return evaluate_pair(connected_components(gt, conn), pred, conn, min_region_px);
}

std::pair<PixelMetrics, TileMetrics> evaluate_pair(const LabeledMask& gt, const BinaryMask& pred,
                                                   Connectivity conn,
                                                   std::uint64_t min_region_px) {
    check_same_shape("evaluate_pair", gt.width, gt.height, pred.width, pred.height);
    PixelMetrics px = pixel_metrics(pred, to_binary(gt));
    TileMetrics tm = tile_metrics(gt, connected_components(pred, conn), min_region_px);
    return {px, tm};
}

}  // namespace mosaic
