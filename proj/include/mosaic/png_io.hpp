#ifndef MOSAIC_PNG_IO_HPP
#define MOSAIC_PNG_IO_HPP

#include <filesystem>

#include "mosaic/image.hpp"
#include "mosaic/mask.hpp"

namespace mosaic {

struct PngInfo {
    int width = 0;
    int height = 0;
    int bit_depth = 0;
    int channels = 0;
};

PngInfo probe_png(const std::filesystem::path& path);

/// Reads any PNG as an 8-bit gray image and binarizes it: value >= 128 is
/// foreground. Color inputs are converted to luminance first.
BinaryMask read_mask_png(const std::filesystem::path& path);

/// Writes foreground as 255 and background as 0, 8-bit single channel.
void write_mask_png(const std::filesystem::path& path, const BinaryMask& mask);

/// Reads a 16-bit single-channel PNG as a region map (pixel value = label).
/// Labels must be contiguous 1..K.
LabeledMask read_labeled_png(const std::filesystem::path& path);

/// Writes label values as 16-bit gray. Errors if region_count > 65535.
void write_labeled_png(const std::filesystem::path& path, const LabeledMask& mask);

ImageRGB read_rgb_png(const std::filesystem::path& path);
void write_rgb_png(const std::filesystem::path& path, const ImageRGB& image);

}  // namespace mosaic

#endif
