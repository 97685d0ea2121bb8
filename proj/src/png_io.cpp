#include "mosaic/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <csetjmp>
#include <string>
#include <vector>

#include "mosaic/error.hpp"

namespace mosaic {

namespace {

struct FileHandle {
    std::FILE* fp = nullptr;
    explicit FileHandle(const std::filesystem::path& path, const char* mode) {
        fp = std::fopen(path.string().c_str(), mode);
    }
    ~FileHandle() {
        if (fp) std::fclose(fp);
    }
    FileHandle(const FileHandle&) = delete;
    FileHandle& operator=(const FileHandle&) = delete;
};

// Decoded grayscale or RGB rows plus the mode they were requested in.
enum class ReadMode { gray8, gray16, rgb8 };

struct Decoded {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bytes;  // row-major, native channel layout
};

Decoded read_png(const std::filesystem::path& path, ReadMode mode) {
    FileHandle file(path, "rb");
    if (!file.fp) {
        throw IoError("cannot open " + path.string());
    }

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("libpng init failed");
    }

    Decoded out;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("failed to decode PNG " + path.string());
    }

    png_init_io(png, file.fp);
    png_read_info(png, info);

    const int bit_depth = png_get_bit_depth(png, info);
    const int color_type = png_get_color_type(png, info);

    if (mode == ReadMode::gray16) {
        if (bit_depth != 16 || color_type != PNG_COLOR_TYPE_GRAY) {
            png_destroy_read_struct(&png, &info, nullptr);
            throw IoError(path.string() + ": expected 16-bit single-channel PNG");
        }
        png_set_swap(png);  // file is big-endian, we want host little-endian
    } else {
        if (bit_depth == 16) png_set_strip_16(png);
        if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
        if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
        if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
        if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
        if (mode == ReadMode::gray8) {
            if (color_type & PNG_COLOR_MASK_COLOR) png_set_rgb_to_gray(png, 1, -1, -1);
        } else {
            if (!(color_type & PNG_COLOR_MASK_COLOR)) png_set_gray_to_rgb(png);
        }
    }

    png_read_update_info(png, info);
    out.width = static_cast<int>(png_get_image_width(png, info));
    out.height = static_cast<int>(png_get_image_height(png, info));
    const std::size_t row_bytes = png_get_rowbytes(png, info);
    out.bytes.resize(row_bytes * out.height);
    rows.resize(out.height);
    for (int y = 0; y < out.height; ++y) {
        rows[y] = out.bytes.data() + row_bytes * y;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return out;
}

void write_png(const std::filesystem::path& path, int width, int height, int bit_depth,
               int color_type, const std::uint8_t* bytes, std::size_t row_bytes) {
    FileHandle file(path, "wb");
    if (!file.fp) {
        throw IoError("cannot open " + path.string() + " for writing");
    }

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("libpng init failed");
    }

    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y) {
        rows[y] = const_cast<png_bytep>(bytes + row_bytes * y);
    }

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("failed to write PNG " + path.string());
    }

    png_init_io(png, file.fp);
    png_set_IHDR(png, info, width, height, bit_depth, color_type, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    if (bit_depth == 16) png_set_swap(png);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

}  // namespace

PngInfo probe_png(const std::filesystem::path& path) {
    FileHandle file(path, "rb");
    if (!file.fp) {
        throw IoError("cannot open " + path.string());
    }
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("failed to read PNG header of " + path.string());
    }
    png_init_io(png, file.fp);
    png_read_info(png, info);
    PngInfo out;
    out.width = static_cast<int>(png_get_image_width(png, info));
    out.height = static_cast<int>(png_get_image_height(png, info));
    out.bit_depth = png_get_bit_depth(png, info);
    out.channels = png_get_channels(png, info);
    png_destroy_read_struct(&png, &info, nullptr);
    return out;
}

BinaryMask read_mask_png(const std::filesystem::path& path) {
    Decoded d = read_png(path, ReadMode::gray8);
    BinaryMask mask(d.width, d.height);
    for (std::size_t i = 0; i < mask.data.size(); ++i) {
        mask.data[i] = d.bytes[i] >= 128 ? 1 : 0;
    }
    return mask;
}

void write_mask_png(const std::filesystem::path& path, const BinaryMask& mask) {
    std::vector<std::uint8_t> bytes(mask.data.size());
    for (std::size_t i = 0; i < mask.data.size(); ++i) {
        bytes[i] = mask.data[i] ? 255 : 0;
    }
    write_png(path, mask.width, mask.height, 8, PNG_COLOR_TYPE_GRAY, bytes.data(),
              static_cast<std::size_t>(mask.width));
}

LabeledMask read_labeled_png(const std::filesystem::path& path) {
    Decoded d = read_png(path, ReadMode::gray16);
    std::vector<std::uint32_t> labels(static_cast<std::size_t>(d.width) * d.height);
    const std::uint16_t* px = reinterpret_cast<const std::uint16_t*>(d.bytes.data());
    std::uint32_t max_label = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        labels[i] = px[i];
        if (labels[i] > max_label) max_label = labels[i];
    }
    try {
        return LabeledMask(d.width, d.height, std::move(labels), max_label);
    } catch (const Error& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

void write_labeled_png(const std::filesystem::path& path, const LabeledMask& mask) {
    if (mask.region_count > 65535) {
        throw InvalidArgumentError("labeled PNG: region count " +
                                   std::to_string(mask.region_count) + " exceeds 16-bit range");
    }
    std::vector<std::uint8_t> bytes(mask.labels.size() * 2);
    std::uint16_t* px = reinterpret_cast<std::uint16_t*>(bytes.data());
    for (std::size_t i = 0; i < mask.labels.size(); ++i) {
        px[i] = static_cast<std::uint16_t>(mask.labels[i]);
    }
    write_png(path, mask.width, mask.height, 16, PNG_COLOR_TYPE_GRAY, bytes.data(),
              static_cast<std::size_t>(mask.width) * 2);
}

ImageRGB read_rgb_png(const std::filesystem::path& path) {
    Decoded d = read_png(path, ReadMode::rgb8);
    ImageRGB img(d.width, d.height);
    img.data = std::move(d.bytes);
    return img;
}

void write_rgb_png(const std::filesystem::path& path, const ImageRGB& image) {
    write_png(path, image.width, image.height, 8, PNG_COLOR_TYPE_RGB, image.data.data(),
              static_cast<std::size_t>(image.width) * 3);
}

}  // namespace mosaic
