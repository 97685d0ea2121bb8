#ifndef MOSAIC_PIXEL_METRICS_HPP
#define MOSAIC_PIXEL_METRICS_HPP

#include <cstdint>
#include <vector>

#include "mosaic/mask.hpp"

namespace mosaic {

struct ConfusionCounts {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    std::uint64_t tn = 0;

    std::uint64_t total() const { return tp + fp + fn + tn; }
};

/// Pixel-level overlap scores, all in [0, 1].
struct PixelMetrics {
    double iou = 0.0;
    double dice = 0.0;
    double accuracy = 0.0;
    double recall = 0.0;
};

ConfusionCounts confusion(const BinaryMask& pred, const BinaryMask& gt);

/// IoU = tp/(tp+fp+fn), Dice = 2tp/(2tp+fp+fn), Accuracy = (tp+tn)/total,
/// Recall = tp/(tp+fn). Degenerate cases: both masks empty -> all four are 1;
/// gt empty but pred nonempty -> IoU = Dice = Recall = 0.
PixelMetrics metrics_from_confusion(const ConfusionCounts& c);

PixelMetrics pixel_metrics(const BinaryMask& pred, const BinaryMask& gt);

/// Unweighted per-field mean, summed in record order. Errors on empty input.
PixelMetrics average_metrics(const std::vector<PixelMetrics>& records);

}  // namespace mosaic

#endif
