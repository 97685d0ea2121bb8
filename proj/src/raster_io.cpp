#include "mosaic/raster_io.hpp"

#include <cstring>
#include <fstream>
#include <vector>

#include "mosaic/error.hpp"

namespace mosaic {

namespace {
constexpr char kMagic[8] = {'M', 'O', 'S', 'S', 'O', 'F', 'T', '1'};
}

SoftMask read_soft_raster(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());

    char magic[8];
    std::uint32_t w = 0, h = 0;
    in.read(magic, 8);
    in.read(reinterpret_cast<char*>(&w), 4);
    in.read(reinterpret_cast<char*>(&h), 4);
    if (!in || std::memcmp(magic, kMagic, 8) != 0) {
        throw IoError(path.string() + ": not a soft-mask raster");
    }
    if (w == 0 || h == 0 || static_cast<std::uint64_t>(w) * h > (1ULL << 32)) {
        throw IoError(path.string() + ": implausible raster dimensions");
    }

    std::vector<float> raw(static_cast<std::size_t>(w) * h);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size() * 4));
    if (!in) throw IoError(path.string() + ": truncated raster data");

    SoftMask mask;
    mask.width = static_cast<int>(w);
    mask.height = static_cast<int>(h);
    mask.data.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        double v = raw[i];
        if (!(v >= 0.0 && v <= 1.0)) {
            throw IoError(path.string() + ": value outside [0, 1] at index " + std::to_string(i));
        }
        mask.data[i] = v;
    }
    return mask;
}

void write_soft_raster(const std::filesystem::path& path, const SoftMask& mask) {
    mask.validate();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");

    const std::uint32_t w = static_cast<std::uint32_t>(mask.width);
    const std::uint32_t h = static_cast<std::uint32_t>(mask.height);
    out.write(kMagic, 8);
    out.write(reinterpret_cast<const char*>(&w), 4);
    out.write(reinterpret_cast<const char*>(&h), 4);

    std::vector<float> raw(mask.data.size());
    for (std::size_t i = 0; i < mask.data.size(); ++i) {
        raw[i] = static_cast<float>(mask.data[i]);
    }
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size() * 4));
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace mosaic
