#ifndef MOSAIC_TRANSFORMS_HPP
#define MOSAIC_TRANSFORMS_HPP

#include <array>
#include <string_view>
#include <type_traits>

#include "mosaic/image.hpp"
#include "mosaic/mask.hpp"

namespace mosaic {

/// Orientation-preserving augmentations. Rotations are clockwise; rot90 and
/// rot270 swap width and height.
enum class Transform {
    identity,
    rot90,
    rot180,
    rot270,
    hflip,  // mirror across the vertical axis
    vflip,  // mirror across the horizontal axis
};

inline constexpr std::array<Transform, 6> kDefaultTransforms = {
    Transform::identity, Transform::rot90, Transform::rot180,
    Transform::rot270,   Transform::hflip, Transform::vflip,
};

Transform inverse_transform(Transform t);
std::string_view transform_name(Transform t);
Transform parse_transform(std::string_view name);

/// Maps a point through the same geometry as the pixel grids. width/height
/// are the dimensions of the grid the point lives in before the transform.
Point transform_point(const Point& p, Transform t, int width, int height);

namespace detail {

inline std::vector<std::uint8_t>& grid_values(BinaryMask& m) { return m.data; }
inline const std::vector<std::uint8_t>& grid_values(const BinaryMask& m) { return m.data; }
inline std::vector<double>& grid_values(SoftMask& m) { return m.data; }
inline const std::vector<double>& grid_values(const SoftMask& m) { return m.data; }
inline std::vector<double>& grid_values(LogitMask& m) { return m.data; }
inline const std::vector<double>& grid_values(const LogitMask& m) { return m.data; }
inline std::vector<std::uint32_t>& grid_values(LabeledMask& m) { return m.labels; }
inline const std::vector<std::uint32_t>& grid_values(const LabeledMask& m) { return m.labels; }

/// Destination pixel of source pixel (x, y) in a width x height grid.
inline std::pair<int, int> map_pixel(Transform t, int x, int y, int width, int height) {
    switch (t) {
        case Transform::identity: return {x, y};
        case Transform::rot90: return {height - 1 - y, x};
        case Transform::rot180: return {width - 1 - x, height - 1 - y};
        case Transform::rot270: return {y, width - 1 - x};
        case Transform::hflip: return {width - 1 - x, y};
        case Transform::vflip: return {x, height - 1 - y};
    }
    return {x, y};
}

inline bool swaps_dims(Transform t) { return t == Transform::rot90 || t == Transform::rot270; }

}  // namespace detail

/// Applies a transform to any single-channel grid type. Labels and values
/// ride along with their pixels; no relabeling happens.
template <typename Grid>
Grid apply_transform(const Grid& g, Transform t) {
    Grid out;
    out.width = detail::swaps_dims(t) ? g.height : g.width;
    out.height = detail::swaps_dims(t) ? g.width : g.height;
    detail::grid_values(out).resize(detail::grid_values(g).size());
    if constexpr (std::is_same_v<Grid, LabeledMask>) {
        out.region_count = g.region_count;
    }
    const auto& src = detail::grid_values(g);
    auto& dst = detail::grid_values(out);
    for (int y = 0; y < g.height; ++y) {
        for (int x = 0; x < g.width; ++x) {
            auto [nx, ny] = detail::map_pixel(t, x, y, g.width, g.height);
            dst[static_cast<std::size_t>(ny) * out.width + nx] =
                src[static_cast<std::size_t>(y) * g.width + x];
        }
    }
    return out;
}

ImageRGB apply_transform(const ImageRGB& img, Transform t);

}  // namespace mosaic

#endif
