#include "mosaic/pixel_metrics.hpp"

#include <string>

#include "mosaic/error.hpp"

namespace mosaic {

ConfusionCounts confusion(const BinaryMask& pred, const BinaryMask& gt) {
    if (pred.width != gt.width || pred.height != gt.height) {
        throw ShapeError("confusion: prediction " + std::to_string(pred.width) + "x" +
                         std::to_string(pred.height) + " vs ground truth " +
                         std::to_string(gt.width) + "x" + std::to_string(gt.height));
    }
    ConfusionCounts c;
    for (std::size_t i = 0; i < pred.data.size(); ++i) {
        bool p = pred.data[i] != 0;
        bool g = gt.data[i] != 0;
        if (p && g)
            ++c.tp;
        else if (p && !g)
            ++c.fp;
        else if (!p && g)
            ++c.fn;
        else
            ++c.tn;
    }
    return c;
}

PixelMetrics metrics_from_confusion(const ConfusionCounts& c) {
    PixelMetrics m;
    const std::uint64_t overlap_denom = c.tp + c.fp + c.fn;
    if (overlap_denom == 0) {
        // Both masks empty: perfect agreement.
        m.iou = 1.0;
        m.dice = 1.0;
    } else {
        m.iou = static_cast<double>(c.tp) / static_cast<double>(overlap_denom);
        m.dice = static_cast<double>(2 * c.tp) / static_cast<double>(2 * c.tp + c.fp + c.fn);
    }
    m.accuracy = static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
    if (c.tp + c.fn == 0) {
        m.recall = c.fp == 0 ? 1.0 : 0.0;
    } else {
        m.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
    }
    return m;
}

PixelMetrics pixel_metrics(const BinaryMask& pred, const BinaryMask& gt) {
    return metrics_from_confusion(confusion(pred, gt));
}

PixelMetrics average_metrics(const std::vector<PixelMetrics>& records) {
    if (records.empty()) {
        throw InvalidArgumentError("average_metrics: empty record list");
    }
    double iou = 0.0, dice = 0.0, accuracy = 0.0, recall = 0.0;
    for (const PixelMetrics& r : records) {
        iou += r.iou;
        dice += r.dice;
        accuracy += r.accuracy;
        recall += r.recall;
    }
    const double n = static_cast<double>(records.size());
    return PixelMetrics{iou / n, dice / n, accuracy / n, recall / n};
}

}  // namespace mosaic
