#ifndef MOSAIC_REPORT_HPP
#define MOSAIC_REPORT_HPP

#include <string>
#include <vector>

#include "mosaic/image.hpp"
#include "mosaic/mask.hpp"
#include "mosaic/pixel_metrics.hpp"
#include "mosaic/tile_metrics.hpp"

namespace mosaic {

struct EvaluationRecord {
    std::string image_id;
    PixelMetrics pixel;
    TileMetrics tile;
};

enum class TableStyle { pixel, tile };
enum class TableFormat { csv, markdown };

/// Display value rounding: metric * 100 rounded half away from zero.
long percent_value(double v);

/// Count error rounded half away from zero to 2 decimals, e.g. "0.02".
std::string format_count_error(double v);

/// Per-image rows plus an Average row. Percentages print as integers and
/// count errors with 2 decimals; averages are computed from the unrounded
/// values first and rounded for display only.
/// Pixel columns: IoU, Accuracy, Dice, Recall. Tile columns: Cnt, Prec,
/// Rec, Fm. Errors on empty input.
std::string emit_table(const std::vector<EvaluationRecord>& records, TableStyle style,
                       TableFormat format);

/// Full-precision CSV (6 decimals) with an average row:
///   image_id,iou,dice,accuracy,recall
std::string pixel_csv(const std::vector<EvaluationRecord>& records);

/// Full-precision CSV (6 decimals) with an average row:
///   image_id,n_gt,n_pred,cnt,prec,rec,fm
std::string tile_csv(const std::vector<EvaluationRecord>& records);

/// Per-image best-match dump: {"image_id": ..., "assignments": [{"tile": i,
/// "region": j|null, "intersection": n}, ...]} as a JSON array.
std::string assignments_json(const std::vector<EvaluationRecord>& records);

/// Four-class comparison of two predictions against a ground truth.
/// Ground-truth foreground renders white when both predictions cover the
/// pixel, green when only pred_b does, red when only pred_a does, and blue
/// when neither does; background is black. With show_false_positives,
/// background pixels predicted by exactly one model render dim red/green
/// (background predicted by both stays black).
ImageRGB overlay(const BinaryMask& gt, const BinaryMask& pred_a, const BinaryMask& pred_b,
                 bool show_false_positives = false);

struct ComparisonReport {
    std::vector<std::pair<std::string, std::vector<EvaluationRecord>>> methods;
};

/// Markdown comparison: one tile-style table per method plus a summary of
/// per-method averages where the best value per metric (lowest Cnt,
/// highest Prec/Rec/Fm, ties shared) is starred. Requires at least two
/// methods covering the same image ids.
std::string compare_methods(const ComparisonReport& report);

}  // namespace mosaic

#endif
