#include "mosaic/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "mosaic/error.hpp"
#include "mosaic/rng.hpp"

namespace mosaic {

namespace {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Inset containment test: point is inside the quad with margin h from every
// edge line. Quad vertices are ordered around the boundary.
bool inside_with_margin(const Vec2* quad, const Vec2& center, double px, double py, double h) {
    for (int e = 0; e < 4; ++e) {
        const Vec2& a = quad[e];
        const Vec2& b = quad[(e + 1) % 4];
        double ex = b.x - a.x;
        double ey = b.y - a.y;
        double len = std::sqrt(ex * ex + ey * ey);
        if (len == 0.0) return false;
        double nx = -ey / len;
        double ny = ex / len;
        // Orient the normal toward the quad interior.
        if (nx * (center.x - a.x) + ny * (center.y - a.y) < 0.0) {
            nx = -nx;
            ny = -ny;
        }
        if (nx * (px - a.x) + ny * (py - a.y) < h) return false;
    }
    return true;
}

void hsv_to_rgb(double hue, double sat, double val, std::uint8_t* rgb) {
    double c = val * sat;
    double hp = hue * 6.0;
    double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(hp) % 6) {
        case 0: r = c; g = x; break;
        case 1: r = x; g = c; break;
        case 2: g = c; b = x; break;
        case 3: g = x; b = c; break;
        case 4: r = x; b = c; break;
        default: r = c; b = x; break;
    }
    double m = val - c;
    rgb[0] = static_cast<std::uint8_t>(std::lround((r + m) * 255.0));
    rgb[1] = static_cast<std::uint8_t>(std::lround((g + m) * 255.0));
    rgb[2] = static_cast<std::uint8_t>(std::lround((b + m) * 255.0));
}

void draw_line(BinaryMask& mask, int x0, int y0, int x1, int y1) {
    int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
    int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    while (true) {
        mask.set(x0, y0, true);
        if (x0 == x1 && y0 == y1) break;
        int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x0 += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y0 += sy;
        }
    }
}

}  // namespace

void MosaicSpec::validate() const {
    if (width < 1 || height < 1) throw InvalidArgumentError("synth: image dimensions must be positive");
    if (tile_rows < 1 || tile_cols < 1) throw InvalidArgumentError("synth: tile grid must be at least 1x1");
    if (grout_px < 1) throw InvalidArgumentError("synth: grout must be at least 1 pixel");
    if (jitter_px < 0.0) throw InvalidArgumentError("synth: jitter must be non-negative");
    const double cell_w = static_cast<double>(width) / tile_cols;
    const double cell_h = static_cast<double>(height) / tile_rows;
    const double min_cell = std::min(cell_w, cell_h);
    if (jitter_px >= min_cell / 2.0) {
        throw InvalidArgumentError("synth: jitter " + std::to_string(jitter_px) +
                                   " must stay below half the cell dimension " +
                                   std::to_string(min_cell / 2.0));
    }
    if (grout_px >= min_cell) {
        throw InvalidArgumentError("synth: grout exceeds cell dimension");
    }
}

SynthResult generate_mosaic(const MosaicSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);

    const int rows = spec.tile_rows;
    const int cols = spec.tile_cols;
    const double cell_w = static_cast<double>(spec.width) / cols;
    const double cell_h = static_cast<double>(spec.height) / rows;
    const double j = spec.jitter_px;

    // Shared lattice of jittered vertices. Border vertices move only along
    // the border so every tile stays inside the image.
    std::vector<Vec2> verts(static_cast<std::size_t>(rows + 1) * (cols + 1));
    for (int i = 0; i <= rows; ++i) {
        for (int c = 0; c <= cols; ++c) {
            double dx = rng.next_real(-j, j);
            double dy = rng.next_real(-j, j);
            if (c == 0 || c == cols) dx = 0.0;
            if (i == 0 || i == rows) dy = 0.0;
            verts[static_cast<std::size_t>(i) * (cols + 1) + c] =
                Vec2{c * cell_w + dx, i * cell_h + dy};
        }
    }

    // Rasterize each cell quad inset by half the grout. cell_of keeps the
    // cell index per pixel so the final labeling can be cross-checked.
    const std::size_t n_px = static_cast<std::size_t>(spec.width) * spec.height;
    std::vector<std::int32_t> cell_of(n_px, -1);
    BinaryMask binary(spec.width, spec.height);
    const double margin = spec.grout_px / 2.0;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const Vec2 quad[4] = {
                verts[static_cast<std::size_t>(r) * (cols + 1) + c],
                verts[static_cast<std::size_t>(r) * (cols + 1) + c + 1],
                verts[static_cast<std::size_t>(r + 1) * (cols + 1) + c + 1],
                verts[static_cast<std::size_t>(r + 1) * (cols + 1) + c],
            };
            Vec2 center{(quad[0].x + quad[1].x + quad[2].x + quad[3].x) / 4.0,
                        (quad[0].y + quad[1].y + quad[2].y + quad[3].y) / 4.0};
            int x0 = std::max(0, static_cast<int>(std::floor(c * cell_w - j)));
            int x1 = std::min(spec.width - 1, static_cast<int>(std::ceil((c + 1) * cell_w + j)));
            int y0 = std::max(0, static_cast<int>(std::floor(r * cell_h - j)));
            int y1 = std::min(spec.height - 1, static_cast<int>(std::ceil((r + 1) * cell_h + j)));
            for (int y = y0; y <= y1; ++y) {
                for (int x = x0; x <= x1; ++x) {
                    if (inside_with_margin(quad, center, x, y, margin)) {
                        binary.set(x, y, true);
                        cell_of[static_cast<std::size_t>(y) * spec.width + x] = r * cols + c;
                    }
                }
            }
        }
    }

    LabeledMask gt = connected_components(binary, Connectivity::eight);
    const std::uint32_t expected = static_cast<std::uint32_t>(rows) * cols;
    if (gt.region_count != expected) {
        throw InvalidArgumentError("synth: geometry produced " + std::to_string(gt.region_count) +
                                   " regions instead of " + std::to_string(expected) +
                                   "; reduce grout or jitter");
    }
    // Every connected region must coincide with exactly one cell.
    std::vector<std::int32_t> label_cell(expected + 1, -1);
    std::vector<std::int32_t> cell_label(expected, -1);
    for (std::size_t i = 0; i < n_px; ++i) {
        std::uint32_t l = gt.labels[i];
        if (l == 0) continue;
        std::int32_t cell = cell_of[i];
        if (label_cell[l] == -1) label_cell[l] = cell;
        if (cell_label[cell] == -1) cell_label[cell] = static_cast<std::int32_t>(l);
        if (label_cell[l] != cell || cell_label[cell] != static_cast<std::int32_t>(l)) {
            throw InvalidArgumentError("synth: tiles merged or split; reduce grout or jitter");
        }
    }
    for (std::uint32_t c = 0; c < expected; ++c) {
        if (cell_label[c] == -1) {
            throw InvalidArgumentError("synth: grout swallowed a tile; enlarge cells");
        }
    }

    // Tile colors on a dark grout background.
    ImageRGB image(spec.width, spec.height);
    for (std::size_t i = 0; i < n_px; ++i) {
        image.data[i * 3 + 0] = 52;
        image.data[i * 3 + 1] = 48;
        image.data[i * 3 + 2] = 44;
    }
    std::vector<std::array<std::uint8_t, 3>> palette(expected);
    for (std::uint32_t l = 0; l < expected; ++l) {
        double hue = rng.next_double();
        double sat = 0.25 + 0.5 * rng.next_double();
        double val = 0.55 + 0.4 * rng.next_double();
        hsv_to_rgb(hue, sat, val, palette[l].data());
    }
    for (std::size_t i = 0; i < n_px; ++i) {
        std::uint32_t l = gt.labels[i];
        if (l == 0) continue;
        image.data[i * 3 + 0] = palette[l - 1][0];
        image.data[i * 3 + 1] = palette[l - 1][1];
        image.data[i * 3 + 2] = palette[l - 1][2];
    }
    return SynthResult{std::move(image), std::move(gt)};
}

void PerturbationSpec::validate(std::uint32_t total_tiles) const {
    if (drop_tiles < 0 || merge_pairs < 0 || dilate_px < 0 || erode_px < 0 || speckle_count < 0) {
        throw InvalidArgumentError("perturb: counts must be non-negative");
    }
    if (static_cast<std::uint32_t>(drop_tiles) > total_tiles) {
        throw InvalidArgumentError("perturb: cannot drop " + std::to_string(drop_tiles) +
                                   " of " + std::to_string(total_tiles) + " tiles");
    }
}

BinaryMask dilate(const BinaryMask& mask, int r) {
    BinaryMask cur = mask;
    for (int it = 0; it < r; ++it) {
        BinaryMask next = cur;
        for (int y = 0; y < cur.height; ++y) {
            for (int x = 0; x < cur.width; ++x) {
                if (cur.at(x, y)) continue;
                bool any = false;
                for (int dy = -1; dy <= 1 && !any; ++dy) {
                    for (int dx = -1; dx <= 1 && !any; ++dx) {
                        int nx = x + dx, ny = y + dy;
                        if (nx < 0 || ny < 0 || nx >= cur.width || ny >= cur.height) continue;
                        any = cur.at(nx, ny);
                    }
                }
                if (any) next.set(x, y, true);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

BinaryMask erode(const BinaryMask& mask, int r) {
    // Out-of-image neighbors count as foreground, so erosion mirrors the
    // infinite-plane operator on a clipped window and closing stays
    // extensive (dilate r then erode r never loses original pixels).
    BinaryMask cur = mask;
    for (int it = 0; it < r; ++it) {
        BinaryMask next = cur;
        for (int y = 0; y < cur.height; ++y) {
            for (int x = 0; x < cur.width; ++x) {
                if (!cur.at(x, y)) continue;
                bool all = true;
                for (int dy = -1; dy <= 1 && all; ++dy) {
                    for (int dx = -1; dx <= 1 && all; ++dx) {
                        int nx = x + dx, ny = y + dy;
                        if (nx < 0 || ny < 0 || nx >= cur.width || ny >= cur.height) continue;
                        all = cur.at(nx, ny);
                    }
                }
                if (!all) next.set(x, y, false);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

BinaryMask perturb(const LabeledMask& gt, const PerturbationSpec& spec) {
    spec.validate(gt.region_count);
    Rng rng(spec.seed);
    BinaryMask out = to_binary(gt);

    // Tile drops.
    std::vector<std::uint32_t> labels(gt.region_count);
    std::iota(labels.begin(), labels.end(), 1u);
    rng.shuffle(labels);
    std::vector<bool> dropped(gt.region_count + 1, false);
    for (int k = 0; k < spec.drop_tiles; ++k) dropped[labels[k]] = true;
    if (spec.drop_tiles > 0) {
        for (std::size_t i = 0; i < gt.labels.size(); ++i) {
            if (gt.labels[i] != 0 && dropped[gt.labels[i]]) out.data[i] = 0;
        }
    }

    // Merges: bridge a random surviving tile to its nearest surviving
    // neighbor with a 1-px line between centroids.
    if (spec.merge_pairs > 0) {
        std::vector<std::uint32_t> survivors;
        for (std::uint32_t l = 1; l <= gt.region_count; ++l) {
            if (!dropped[l]) survivors.push_back(l);
        }
        if (survivors.size() >= 2) {
            std::vector<Point> centers = centroids(gt);
            for (int k = 0; k < spec.merge_pairs; ++k) {
                std::uint32_t a = survivors[rng.next_below(survivors.size())];
                std::uint32_t best = 0;
                double best_d2 = 0.0;
                for (std::uint32_t b : survivors) {
                    if (b == a) continue;
                    double dx = centers[b - 1].x - centers[a - 1].x;
                    double dy = centers[b - 1].y - centers[a - 1].y;
                    double d2 = dx * dx + dy * dy;
                    if (best == 0 || d2 < best_d2) {
                        best = b;
                        best_d2 = d2;
                    }
                }
                draw_line(out, static_cast<int>(std::lround(centers[a - 1].x)),
                          static_cast<int>(std::lround(centers[a - 1].y)),
                          static_cast<int>(std::lround(centers[best - 1].x)),
                          static_cast<int>(std::lround(centers[best - 1].y)));
            }
        }
    }

    out = dilate(out, spec.dilate_px);
    out = erode(out, spec.erode_px);

    // Isolated background speckles: a 5x5 clear neighborhood keeps each one
    // its own eight-neighbor region.
    int placed = 0;
    std::uint64_t attempts = 0;
    const std::uint64_t max_attempts = 1000ULL * (spec.speckle_count + 1) + 1000ULL;
    while (placed < spec.speckle_count && attempts < max_attempts) {
        ++attempts;
        int x = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(out.width)));
        int y = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(out.height)));
        bool clear = true;
        for (int dy = -2; dy <= 2 && clear; ++dy) {
            for (int dx = -2; dx <= 2 && clear; ++dx) {
                int nx = x + dx, ny = y + dy;
                if (nx < 0 || ny < 0 || nx >= out.width || ny >= out.height) continue;
                clear = !out.at(nx, ny);
            }
        }
        if (clear) {
            out.set(x, y, true);
            ++placed;
        }
    }
    if (placed < spec.speckle_count) {
        throw InvalidArgumentError("perturb: no room left for " +
                                   std::to_string(spec.speckle_count) + " isolated speckles");
    }
    return out;
}

}  // namespace mosaic
