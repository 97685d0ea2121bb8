#ifndef MOSAIC_MASK_HPP
#define MOSAIC_MASK_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace mosaic {

// Pixel coordinate convention used throughout: x = column, y = row,
// origin at the top-left corner, pixel centers at integer coordinates.

enum class Connectivity : int {
    four = 4,
    eight = 8,
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Row-major boolean grid. Data values are 0 (background) or 1 (foreground).
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    BinaryMask() = default;
    BinaryMask(int w, int h, std::uint8_t fill = 0);
    BinaryMask(int w, int h, std::vector<std::uint8_t> values);

    bool at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool v) { data[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
    std::size_t pixel_count() const { return data.size(); }

    void validate() const;
};

/// Row-major grid of per-pixel probabilities in [0, 1].
struct SoftMask {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    SoftMask() = default;
    SoftMask(int w, int h, double fill = 0.0);
    SoftMask(int w, int h, std::vector<double> values);

    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    void set(int x, int y, double v) { data[static_cast<std::size_t>(y) * width + x] = v; }

    void validate() const;
};

/// Row-major grid of raw (unbounded) prediction scores.
struct LogitMask {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    LogitMask() = default;
    LogitMask(int w, int h, double fill = 0.0);
    LogitMask(int w, int h, std::vector<double> values);

    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }

    void validate() const;
};

/// Integer region map. Label 0 is background; positive labels are exactly
/// {1, ..., region_count} with no gaps, each one a connected pixel set.
struct LabeledMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint32_t> labels;
    std::uint32_t region_count = 0;

    LabeledMask() = default;
    LabeledMask(int w, int h);
    LabeledMask(int w, int h, std::vector<std::uint32_t> values, std::uint32_t regions);

    std::uint32_t at(int x, int y) const { return labels[static_cast<std::size_t>(y) * width + x]; }
    void set(int x, int y, std::uint32_t v) { labels[static_cast<std::size_t>(y) * width + x] = v; }

    void validate() const;
};

/// Per-pixel sigmoid 1 / (1 + exp(-v)).
SoftMask sigmoid_transform(const LogitMask& logits);

/// Foreground iff value > tau (strict). Requires 0 < tau < 1.
BinaryMask threshold(const SoftMask& soft, double tau);

/// Maximal connected foreground regions, labels assigned in raster-scan
/// first-encounter order starting at 1.
LabeledMask connected_components(const BinaryMask& mask, Connectivity conn);

/// Arithmetic mean of the pixel coordinates of one region.
Point centroid(const LabeledMask& labeled, std::uint32_t label);

/// Centroids of all regions, indexed by label - 1. One pass over the mask.
std::vector<Point> centroids(const LabeledMask& labeled);

/// (label, pixel count) per region, ascending by label.
std::vector<std::pair<std::uint32_t, std::uint64_t>> region_sizes(const LabeledMask& labeled);

/// Foreground where label > 0.
BinaryMask to_binary(const LabeledMask& labeled);

}  // namespace mosaic

#endif
