#ifndef MOSAIC_LOSSES_HPP
#define MOSAIC_LOSSES_HPP

#include <vector>

#include "mosaic/mask.hpp"

namespace mosaic {

struct LossWeights {
    double lambda_score = 1.0;
};

struct PredictionOutput {
    SoftMask soft_mask;
    double confidence = 0.0;  // predicted mask score s in [0, 1]
};

struct LossBreakdown {
    double dice_loss = 0.0;
    double score_loss = 0.0;
    double total = 0.0;
    double iou_at_half = 0.0;  // IoU of ground truth vs prediction thresholded at 0.5
};

/// 1 - (2*sum(P*G) + smooth) / (sum(P) + sum(G) + smooth). With smooth = 0
/// and both sums zero, returns 0 (perfect empty agreement).
double dice_loss(const SoftMask& pred, const BinaryMask& gt, double smooth = 0.0);

/// Analytic d(dice_loss)/dP per pixel, row-major:
///   -(2*G_k*D - N) / D^2, N = 2*sum(P*G) + smooth, D = sum(P) + sum(G) + smooth.
/// Errors when D = 0.
std::vector<double> dice_loss_gradient(const SoftMask& pred, const BinaryMask& gt,
                                       double smooth = 0.0);

/// |s - IoU(G, threshold(P, 0.5))|. Value only; not differentiable at
/// s = IoU or through the threshold, so no gradient is provided.
double score_loss(const PredictionOutput& output, const BinaryMask& gt);

/// total = dice_loss + lambda_score * score_loss.
LossBreakdown total_loss(const PredictionOutput& output, const BinaryMask& gt,
                         const LossWeights& weights, double smooth = 0.0);

}  // namespace mosaic

#endif
