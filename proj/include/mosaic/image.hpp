#ifndef MOSAIC_IMAGE_HPP
#define MOSAIC_IMAGE_HPP

#include <cstdint>
#include <vector>

namespace mosaic {

/// Row-major interleaved 8-bit RGB image.
struct ImageRGB {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // 3 bytes per pixel

    ImageRGB() = default;
    ImageRGB(int w, int h)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, 0) {}

    const std::uint8_t* at(int x, int y) const {
        return data.data() + (static_cast<std::size_t>(y) * width + x) * 3;
    }
    void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
        std::uint8_t* p = data.data() + (static_cast<std::size_t>(y) * width + x) * 3;
        p[0] = r;
        p[1] = g;
        p[2] = b;
    }
};

}  // namespace mosaic

#endif
