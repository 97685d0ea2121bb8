#include "mosaic/losses.hpp"

#include <cmath>
#include <string>

#include "mosaic/error.hpp"
#include "mosaic/pixel_metrics.hpp"

namespace mosaic {

namespace {

struct DiceTerms {
    double numerator = 0.0;    // 2*sum(P*G) + smooth
    double denominator = 0.0;  // sum(P) + sum(G) + smooth
};

DiceTerms dice_terms(const SoftMask& pred, const BinaryMask& gt, double smooth) {
    if (pred.width != gt.width || pred.height != gt.height) {
        throw ShapeError("dice: prediction " + std::to_string(pred.width) + "x" +
                         std::to_string(pred.height) + " vs ground truth " +
                         std::to_string(gt.width) + "x" + std::to_string(gt.height));
    }
    if (smooth < 0.0) {
        throw InvalidArgumentError("dice: smooth must be non-negative");
    }
    double inter = 0.0, sum_p = 0.0, sum_g = 0.0;
    for (std::size_t i = 0; i < pred.data.size(); ++i) {
        double p = pred.data[i];
        double g = gt.data[i] != 0 ? 1.0 : 0.0;
        inter += p * g;
        sum_p += p;
        sum_g += g;
    }
    return DiceTerms{2.0 * inter + smooth, sum_p + sum_g + smooth};
}

}  // namespace

double dice_loss(const SoftMask& pred, const BinaryMask& gt, double smooth) {
    DiceTerms t = dice_terms(pred, gt, smooth);
    if (t.denominator == 0.0) return 0.0;
    return 1.0 - t.numerator / t.denominator;
}

std::vector<double> dice_loss_gradient(const SoftMask& pred, const BinaryMask& gt, double smooth) {
    DiceTerms t = dice_terms(pred, gt, smooth);
    if (t.denominator == 0.0) {
        throw InvalidArgumentError("dice gradient: degenerate input, both masks empty with no smoothing");
    }
    const double d2 = t.denominator * t.denominator;
    std::vector<double> grad(pred.data.size());
    for (std::size_t i = 0; i < pred.data.size(); ++i) {
        double g = gt.data[i] != 0 ? 1.0 : 0.0;
        grad[i] = -(2.0 * g * t.denominator - t.numerator) / d2;
    }
    return grad;
}

double score_loss(const PredictionOutput& output, const BinaryMask& gt) {
    PixelMetrics m = pixel_metrics(threshold(output.soft_mask, 0.5), gt);
    return std::abs(output.confidence - m.iou);
}

LossBreakdown total_loss(const PredictionOutput& output, const BinaryMask& gt,
                         const LossWeights& weights, double smooth) {
    if (weights.lambda_score < 0.0) {
        throw InvalidArgumentError("total_loss: lambda_score must be non-negative");
    }
    LossBreakdown b;
    b.dice_loss = dice_loss(output.soft_mask, gt, smooth);
    PixelMetrics m = pixel_metrics(threshold(output.soft_mask, 0.5), gt);
    b.iou_at_half = m.iou;
    b.score_loss = std::abs(output.confidence - m.iou);
    b.total = b.dice_loss + weights.lambda_score * b.score_loss;
    return b;
}

}  // namespace mosaic
