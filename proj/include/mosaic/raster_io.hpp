#ifndef MOSAIC_RASTER_IO_HPP
#define MOSAIC_RASTER_IO_HPP

#include <filesystem>

#include "mosaic/mask.hpp"

namespace mosaic {

// Soft masks travel as a little-endian binary raster: a 16-byte header
// (8-byte magic "MOSSOFT1", uint32 width, uint32 height) followed by
// width*height float32 values, row-major.

SoftMask read_soft_raster(const std::filesystem::path& path);
void write_soft_raster(const std::filesystem::path& path, const SoftMask& mask);

}  // namespace mosaic

#endif
