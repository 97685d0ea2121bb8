#ifndef MOSAIC_TILE_METRICS_HPP
#define MOSAIC_TILE_METRICS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mosaic/mask.hpp"
#include "mosaic/pixel_metrics.hpp"

namespace mosaic {

/// Best-match record for one ground-truth tile. matched_pred_label is empty
/// when the tile overlaps no predicted region; intersection and region_size
/// are 0 in that case.
struct TileAssignment {
    std::uint32_t gt_label = 0;
    std::optional<std::uint32_t> matched_pred_label;
    std::uint64_t intersection = 0;
    std::uint64_t tile_size = 0;
    std::uint64_t region_size = 0;
};

struct TileMetrics {
    std::uint64_t n_gt = 0;
    std::uint64_t n_pred = 0;
    double count_error = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
    std::vector<TileAssignment> assignments;
};

/// For each ground-truth tile, the predicted region with maximal pixel
/// intersection. Ties break toward the smallest predicted label. Predicted
/// regions smaller than min_region_px are dropped before matching
/// (min_region_px = 1 keeps everything). Background is never a candidate.
std::vector<TileAssignment> best_match(const LabeledMask& gt, const LabeledMask& pred,
                                       std::uint64_t min_region_px = 1);

/// Count error |n_gt - n_pred| / n_gt, per-tile precision/recall means and
/// their harmonic mean. Unmatched tiles contribute 0 to both means. Errors
/// if gt has no tiles.
TileMetrics tile_metrics(const LabeledMask& gt, const LabeledMask& pred,
                         std::uint64_t min_region_px = 1);

/// Labels both masks via connected components and computes both metric
/// families. The min-region filter applies to tile metrics only.
std::pair<PixelMetrics, TileMetrics> evaluate_pair(const BinaryMask& gt, const BinaryMask& pred,
                                                   Connectivity conn,
                                                   std::uint64_t min_region_px = 1);

/// As above with an already-labeled ground truth (tile identities preserved
/// even where tiles touch).
std::pair<PixelMetrics, TileMetrics> evaluate_pair(const LabeledMask& gt, const BinaryMask& pred,
                                                   Connectivity conn,
                                                   std::uint64_t min_region_px = 1);

}  // namespace mosaic

#endif
