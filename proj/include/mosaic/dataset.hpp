#ifndef MOSAIC_DATASET_HPP
#define MOSAIC_DATASET_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "mosaic/image.hpp"
#include "mosaic/mask.hpp"
#include "mosaic/transforms.hpp"

namespace mosaic {

struct CropRect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
};

/// Raster-order crop windows at stride offsets. Trailing partial windows are
/// snapped to the image edge, so the final window is always flush with the
/// right/bottom border. Errors if the tile exceeds the image.
std::vector<CropRect> crop_positions(int img_w, int img_h, int tile_w, int tile_h, int stride_w,
                                     int stride_h);

template <typename Grid>
Grid crop(const Grid& g, const CropRect& r) {
    static_assert(!std::is_same_v<Grid, LabeledMask>,
                  "crop a BinaryMask and relabel; cropping can split regions");
    Grid out;
    out.width = r.w;
    out.height = r.h;
    detail::grid_values(out).resize(static_cast<std::size_t>(r.w) * r.h);
    for (int y = 0; y < r.h; ++y) {
        for (int x = 0; x < r.w; ++x) {
            detail::grid_values(out)[static_cast<std::size_t>(y) * r.w + x] =
                detail::grid_values(g)[static_cast<std::size_t>(y + r.y) * g.width + (x + r.x)];
        }
    }
    return out;
}

ImageRGB crop(const ImageRGB& img, const CropRect& r);

/// Systematic cropping: every stride window of the grid, with the edge-snap
/// rule above.
template <typename Grid>
std::vector<std::pair<CropRect, Grid>> crop_grid(const Grid& g, int tile_w, int tile_h,
                                                 int stride_w, int stride_h) {
    std::vector<std::pair<CropRect, Grid>> out;
    for (const CropRect& r : crop_positions(g.width, g.height, tile_w, tile_h, stride_w, stride_h)) {
        out.emplace_back(r, crop(g, r));
    }
    return out;
}

struct Prompt {
    std::uint32_t label = 0;
    Point point;
};

/// One prompt point per region: the centroid, or when the centroid falls
/// outside the region (concave tiles) the region pixel nearest to it
/// (Euclidean, ties by raster order).
std::vector<Prompt> generate_prompts(const LabeledMask& gt);

enum class Split { train, val, test };

std::string_view split_name(Split s);
Split parse_split(std::string_view name);

struct Provenance {
    std::string source_id;
    Transform transform = Transform::identity;
    CropRect crop;
};

/// One dataset sample. Paths are stored relative to the manifest location.
struct SampleEntry {
    std::string image_path;
    std::string mask_path;
    Split split = Split::train;
    std::vector<Prompt> prompts;
    Provenance provenance;
};

struct SplitSpec {
    double train_fraction = 0.8;
    std::uint64_t seed = 0;
};

/// Deterministic seeded shuffle, then the first floor(train_fraction * N)
/// entries go to train and the rest to val. Split fields are set on return.
std::pair<std::vector<SampleEntry>, std::vector<SampleEntry>> split_dataset(
    std::vector<SampleEntry> entries, const SplitSpec& spec);

/// In-memory sample used by the augmentation pipeline.
struct Sample {
    ImageRGB image;
    BinaryMask mask;
    std::vector<Prompt> prompts;
};

/// Transforms image and mask identically and remaps prompt points through
/// the same geometry. Prompt labels are re-derived from the transformed
/// mask's connected-component labeling (raster relabeling changes ids).
Sample augment(const Sample& s, Transform t, Connectivity conn);

/// File-level augmentation: loads the entry's image/mask, applies each
/// transform, writes the results under out_dir (images/, masks/, prompts/)
/// and returns one entry per transform with paths relative to out_dir.
/// entry_root is the base directory of the entry's own relative paths.
std::vector<SampleEntry> augment_sample(const SampleEntry& entry,
                                        std::span<const Transform> transforms,
                                        const std::filesystem::path& entry_root,
                                        const std::filesystem::path& out_dir, Connectivity conn);

/// JSON-lines manifest, one SampleEntry per line.
void write_manifest(const std::filesystem::path& path, std::span<const SampleEntry> entries);
std::vector<SampleEntry> read_manifest(const std::filesystem::path& path,
                                       bool check_files_exist = false);

/// Per-image prompt file: a JSON array of {label, x, y}.
void write_prompts_json(const std::filesystem::path& path, std::span<const Prompt> prompts);
std::vector<Prompt> read_prompts_json(const std::filesystem::path& path);

}  // namespace mosaic

#endif
