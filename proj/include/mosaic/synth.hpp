#ifndef MOSAIC_SYNTH_HPP
#define MOSAIC_SYNTH_HPP

#include <cstdint>

#include "mosaic/image.hpp"
#include "mosaic/mask.hpp"

namespace mosaic {

/// Jittered-grid mosaic description. grout_px keeps tiles separated so a
/// connected-component pass recovers exactly tile_rows * tile_cols regions.
struct MosaicSpec {
    int width = 256;
    int height = 256;
    int tile_rows = 4;
    int tile_cols = 4;
    int grout_px = 2;
    double jitter_px = 2.0;
    std::uint64_t seed = 0;

    void validate() const;
};

struct SynthResult {
    ImageRGB image;
    LabeledMask gt;  // labels in raster first-encounter order
};

/// Deterministic per seed. The ground-truth labeling always equals the
/// eight-neighbor connected components of its own binarization; generation
/// fails with an invalid-parameter error if the geometry cannot honor that
/// (grout swallowing a tile, for example).
SynthResult generate_mosaic(const MosaicSpec& spec);

/// Controlled prediction corruptions, applied in the listed field order:
/// tile drops, merges (1-px bridge between two nearby tiles), uniform
/// dilation, uniform erosion, background speckles. Deterministic per seed.
struct PerturbationSpec {
    int drop_tiles = 0;
    int merge_pairs = 0;
    int dilate_px = 0;
    int erode_px = 0;
    int speckle_count = 0;
    std::uint64_t seed = 0;

    void validate(std::uint32_t total_tiles) const;
};

BinaryMask perturb(const LabeledMask& gt, const PerturbationSpec& spec);

/// 3x3 (eight-neighbor) morphology, r iterations.
BinaryMask dilate(const BinaryMask& mask, int r);
BinaryMask erode(const BinaryMask& mask, int r);

}  // namespace mosaic

#endif
