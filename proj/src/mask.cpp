#include "mosaic/mask.hpp"

#include <array>
#include <cmath>
#include <string>

#include "mosaic/error.hpp"

namespace mosaic {

namespace {

void check_dims(int w, int h, std::size_t n) {
    if (w < 1 || h < 1) {
        throw InvalidArgumentError("mask dimensions must be at least 1x1, got " +
                                   std::to_string(w) + "x" + std::to_string(h));
    }
    if (n != static_cast<std::size_t>(w) * static_cast<std::size_t>(h)) {
        throw ShapeError("data length " + std::to_string(n) + " does not match " +
                         std::to_string(w) + "x" + std::to_string(h));
    }
}

}  // namespace

BinaryMask::BinaryMask(int w, int h, std::uint8_t fill)
    : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill ? 1 : 0) {
    check_dims(w, h, data.size());
}

BinaryMask::BinaryMask(int w, int h, std::vector<std::uint8_t> values)
    : width(w), height(h), data(std::move(values)) {
    validate();
}

void BinaryMask::validate() const {
    check_dims(width, height, data.size());
    for (std::uint8_t v : data) {
        if (v > 1) throw InvalidArgumentError("binary mask values must be 0 or 1");
    }
}

SoftMask::SoftMask(int w, int h, double fill)
    : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {
    validate();
}

SoftMask::SoftMask(int w, int h, std::vector<double> values)
    : width(w), height(h), data(std::move(values)) {
    validate();
}

void SoftMask::validate() const {
    check_dims(width, height, data.size());
    for (double v : data) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw InvalidArgumentError("soft mask value " + std::to_string(v) +
                                       " outside [0, 1]");
        }
    }
}

LogitMask::LogitMask(int w, int h, double fill)
    : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {
    check_dims(w, h, data.size());
}

LogitMask::LogitMask(int w, int h, std::vector<double> values)
    : width(w), height(h), data(std::move(values)) {
    validate();
}

void LogitMask::validate() const { check_dims(width, height, data.size()); }

LabeledMask::LabeledMask(int w, int h)
    : width(w), height(h), labels(static_cast<std::size_t>(w) * h, 0), region_count(0) {
    check_dims(w, h, labels.size());
}

LabeledMask::LabeledMask(int w, int h, std::vector<std::uint32_t> values, std::uint32_t regions)
    : width(w), height(h), labels(std::move(values)), region_count(regions) {
    validate();
}

void LabeledMask::validate() const {
    check_dims(width, height, labels.size());
    std::vector<bool> seen(region_count + 1, false);
    for (std::uint32_t v : labels) {
        if (v > region_count) {
            throw InvalidArgumentError("label " + std::to_string(v) + " exceeds region count " +
                                       std::to_string(region_count));
        }
        seen[v] = true;
    }
    for (std::uint32_t l = 1; l <= region_count; ++l) {
        if (!seen[l]) throw InvalidArgumentError("label " + std::to_string(l) + " has no pixels");
    }
}

SoftMask sigmoid_transform(const LogitMask& logits) {
    SoftMask out;
    out.width = logits.width;
    out.height = logits.height;
    out.data.resize(logits.data.size());
    for (std::size_t i = 0; i < logits.data.size(); ++i) {
        out.data[i] = 1.0 / (1.0 + std::exp(-logits.data[i]));
    }
    return out;
}

BinaryMask threshold(const SoftMask& soft, double tau) {
    if (!(tau > 0.0 && tau < 1.0)) {
        throw InvalidArgumentError("threshold tau must lie in (0, 1), got " + std::to_string(tau));
    }
    BinaryMask out(soft.width, soft.height);
    for (std::size_t i = 0; i < soft.data.size(); ++i) {
        out.data[i] = soft.data[i] > tau ? 1 : 0;
    }
    return out;
}

LabeledMask connected_components(const BinaryMask& mask, Connectivity conn) {
    // Offsets ordered so the first four entries are the 4-neighborhood.
    static constexpr std::array<std::array<int, 2>, 8> kOffsets = {{
        {-1, 0}, {1, 0}, {0, -1}, {0, 1}, {-1, -1}, {1, -1}, {-1, 1}, {1, 1},
    }};
    const int n_offsets = conn == Connectivity::four ? 4 : 8;

    LabeledMask out(mask.width, mask.height);
    std::vector<std::pair<int, int>> queue;
    std::uint32_t next_label = 0;
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (!mask.at(x, y) || out.at(x, y) != 0) continue;
            ++next_label;
            out.set(x, y, next_label);
            queue.clear();
            queue.emplace_back(x, y);
            while (!queue.empty()) {
                auto [cx, cy] = queue.back();
                queue.pop_back();
                for (int k = 0; k < n_offsets; ++k) {
                    int nx = cx + kOffsets[k][0];
                    int ny = cy + kOffsets[k][1];
                    if (nx < 0 || ny < 0 || nx >= mask.width || ny >= mask.height) continue;
                    if (!mask.at(nx, ny) || out.at(nx, ny) != 0) continue;
                    out.set(nx, ny, next_label);
                    queue.emplace_back(nx, ny);
                }
            }
        }
    }
    out.region_count = next_label;
    return out;
}

Point centroid(const LabeledMask& labeled, std::uint32_t label) {
    if (label < 1 || label > labeled.region_count) {
        throw NotFoundError("label " + std::to_string(label) + " not present (region count " +
                            std::to_string(labeled.region_count) + ")");
    }
    double sx = 0.0, sy = 0.0;
    std::uint64_t n = 0;
    for (int y = 0; y < labeled.height; ++y) {
        for (int x = 0; x < labeled.width; ++x) {
            if (labeled.at(x, y) == label) {
                sx += x;
                sy += y;
                ++n;
            }
        }
    }
    return Point{sx / static_cast<double>(n), sy / static_cast<double>(n)};
}

std::vector<Point> centroids(const LabeledMask& labeled) {
    std::vector<double> sx(labeled.region_count, 0.0), sy(labeled.region_count, 0.0);
    std::vector<std::uint64_t> n(labeled.region_count, 0);
    for (int y = 0; y < labeled.height; ++y) {
        for (int x = 0; x < labeled.width; ++x) {
            std::uint32_t l = labeled.at(x, y);
            if (l == 0) continue;
            sx[l - 1] += x;
            sy[l - 1] += y;
            ++n[l - 1];
        }
    }
    std::vector<Point> out(labeled.region_count);
    for (std::uint32_t i = 0; i < labeled.region_count; ++i) {
        out[i] = Point{sx[i] / static_cast<double>(n[i]), sy[i] / static_cast<double>(n[i])};
    }
    return out;
}

std::vector<std::pair<std::uint32_t, std::uint64_t>> region_sizes(const LabeledMask& labeled) {
    std::vector<std::uint64_t> counts(labeled.region_count, 0);
    for (std::uint32_t l : labeled.labels) {
        if (l > 0) ++counts[l - 1];
    }
    std::vector<std::pair<std::uint32_t, std::uint64_t>> out;
    out.reserve(labeled.region_count);
    for (std::uint32_t i = 0; i < labeled.region_count; ++i) {
        out.emplace_back(i + 1, counts[i]);
    }
    return out;
}

BinaryMask to_binary(const LabeledMask& labeled) {
    BinaryMask out(labeled.width, labeled.height);
    for (std::size_t i = 0; i < labeled.labels.size(); ++i) {
        out.data[i] = labeled.labels[i] > 0 ? 1 : 0;
    }
    return out;
}

}  // namespace mosaic
