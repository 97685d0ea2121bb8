#include "mosaic/transforms.hpp"

#include <string>

#include "mosaic/error.hpp"

namespace mosaic {

Transform inverse_transform(Transform t) {
    switch (t) {
        case Transform::rot90: return Transform::rot270;
        case Transform::rot270: return Transform::rot90;
        default: return t;  // identity, rot180 and the flips are involutions
    }
}

std::string_view transform_name(Transform t) {
    switch (t) {
        case Transform::identity: return "identity";
        case Transform::rot90: return "rot90";
        case Transform::rot180: return "rot180";
        case Transform::rot270: return "rot270";
        case Transform::hflip: return "hflip";
        case Transform::vflip: return "vflip";
    }
    return "identity";
}

Transform parse_transform(std::string_view name) {
    for (Transform t : kDefaultTransforms) {
        if (transform_name(t) == name) return t;
    }
    throw NotFoundError("unknown transform '" + std::string(name) + "'");
}

Point transform_point(const Point& p, Transform t, int width, int height) {
    const double w1 = static_cast<double>(width - 1);
    const double h1 = static_cast<double>(height - 1);
    switch (t) {
        case Transform::identity: return p;
        case Transform::rot90: return Point{h1 - p.y, p.x};
        case Transform::rot180: return Point{w1 - p.x, h1 - p.y};
        case Transform::rot270: return Point{p.y, w1 - p.x};
        case Transform::hflip: return Point{w1 - p.x, p.y};
        case Transform::vflip: return Point{p.x, h1 - p.y};
    }
    return p;
}

ImageRGB apply_transform(const ImageRGB& img, Transform t) {
    ImageRGB out;
    out.width = detail::swaps_dims(t) ? img.height : img.width;
    out.height = detail::swaps_dims(t) ? img.width : img.height;
    out.data.resize(img.data.size());
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            auto [nx, ny] = detail::map_pixel(t, x, y, img.width, img.height);
            const std::uint8_t* s = img.at(x, y);
            out.set(nx, ny, s[0], s[1], s[2]);
        }
    }
    return out;
}

}  // namespace mosaic
