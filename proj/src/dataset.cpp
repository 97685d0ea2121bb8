#include "mosaic/dataset.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <string>

#include <json.hpp>

#include "mosaic/error.hpp"
#include "mosaic/png_io.hpp"
#include "mosaic/rng.hpp"

namespace mosaic {

namespace {

std::vector<int> axis_positions(int img, int tile, int stride) {
    std::vector<int> pos;
    for (int p = 0; p + tile <= img; p += stride) pos.push_back(p);
    if (pos.back() != img - tile) pos.push_back(img - tile);
    return pos;
}

}  // namespace

std::vector<CropRect> crop_positions(int img_w, int img_h, int tile_w, int tile_h, int stride_w,
                                     int stride_h) {
    if (tile_w < 1 || tile_h < 1 || stride_w < 1 || stride_h < 1) {
        throw InvalidArgumentError("crop: tile and stride must be at least 1");
    }
    if (tile_w > img_w || tile_h > img_h) {
        throw InvalidArgumentError("crop: tile " + std::to_string(tile_w) + "x" +
                                   std::to_string(tile_h) + " exceeds image " +
                                   std::to_string(img_w) + "x" + std::to_string(img_h));
    }
    std::vector<int> xs = axis_positions(img_w, tile_w, stride_w);
    std::vector<int> ys = axis_positions(img_h, tile_h, stride_h);
    std::vector<CropRect> out;
    out.reserve(xs.size() * ys.size());
    for (int y : ys) {
        for (int x : xs) {
            out.push_back(CropRect{x, y, tile_w, tile_h});
        }
    }
    return out;
}

ImageRGB crop(const ImageRGB& img, const CropRect& r) {
    ImageRGB out(r.w, r.h);
    for (int y = 0; y < r.h; ++y) {
        const std::uint8_t* src = img.at(r.x, y + r.y);
        std::uint8_t* dst = out.data.data() + static_cast<std::size_t>(y) * r.w * 3;
        std::copy(src, src + static_cast<std::size_t>(r.w) * 3, dst);
    }
    return out;
}

std::vector<Prompt> generate_prompts(const LabeledMask& gt) {
    const std::vector<Point> centers = centroids(gt);

    // One pass finds, for every region, the pixel nearest to its centroid;
    // raster order breaks ties because only strict improvements replace.
    std::vector<double> best_d2(gt.region_count, std::numeric_limits<double>::infinity());
    std::vector<Point> best_px(gt.region_count);
    for (int y = 0; y < gt.height; ++y) {
        for (int x = 0; x < gt.width; ++x) {
            std::uint32_t l = gt.at(x, y);
            if (l == 0) continue;
            double dx = x - centers[l - 1].x;
            double dy = y - centers[l - 1].y;
            double d2 = dx * dx + dy * dy;
            if (d2 < best_d2[l - 1]) {
                best_d2[l - 1] = d2;
                best_px[l - 1] = Point{static_cast<double>(x), static_cast<double>(y)};
            }
        }
    }

    std::vector<Prompt> out;
    out.reserve(gt.region_count);
    for (std::uint32_t l = 1; l <= gt.region_count; ++l) {
        const Point& c = centers[l - 1];
        int px = static_cast<int>(std::lround(c.x));
        int py = static_cast<int>(std::lround(c.y));
        if (gt.at(px, py) == l) {
            out.push_back(Prompt{l, c});
        } else {
            out.push_back(Prompt{l, best_px[l - 1]});
        }
    }
    return out;
}

std::string_view split_name(Split s) {
    switch (s) {
        case Split::train: return "train";
        case Split::val: return "val";
        case Split::test: return "test";
    }
    return "train";
}

Split parse_split(std::string_view name) {
    if (name == "train") return Split::train;
    if (name == "val") return Split::val;
    if (name == "test") return Split::test;
    throw NotFoundError("unknown split '" + std::string(name) + "'");
}

std::pair<std::vector<SampleEntry>, std::vector<SampleEntry>> split_dataset(
    std::vector<SampleEntry> entries, const SplitSpec& spec) {
    if (entries.empty()) {
        throw InvalidArgumentError("split_dataset: no entries");
    }
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
        throw InvalidArgumentError("split_dataset: train fraction must lie in (0, 1)");
    }
    Rng rng(spec.seed);
    rng.shuffle(entries);
    const std::size_t n_train = static_cast<std::size_t>(
        std::floor(spec.train_fraction * static_cast<double>(entries.size())));
    std::vector<SampleEntry> train(entries.begin(), entries.begin() + n_train);
    std::vector<SampleEntry> val(entries.begin() + n_train, entries.end());
    for (SampleEntry& e : train) e.split = Split::train;
    for (SampleEntry& e : val) e.split = Split::val;
    return {std::move(train), std::move(val)};
}

Sample augment(const Sample& s, Transform t, Connectivity conn) {
    Sample out;
    out.image = apply_transform(s.image, t);
    out.mask = apply_transform(s.mask, t);
    out.prompts.reserve(s.prompts.size());
    LabeledMask relabeled = connected_components(out.mask, conn);
    for (const Prompt& p : s.prompts) {
        Point q = transform_point(p.point, t, s.mask.width, s.mask.height);
        int px = static_cast<int>(std::lround(q.x));
        int py = static_cast<int>(std::lround(q.y));
        out.prompts.push_back(Prompt{relabeled.at(px, py), q});
    }
    return out;
}

namespace {

std::string stem_of(const std::string& rel_path) {
    return std::filesystem::path(rel_path).stem().string();
}

}  // namespace

std::vector<SampleEntry> augment_sample(const SampleEntry& entry,
                                        std::span<const Transform> transforms,
                                        const std::filesystem::path& entry_root,
                                        const std::filesystem::path& out_dir, Connectivity conn) {
    if (transforms.empty()) {
        throw InvalidArgumentError("augment_sample: transform list is empty");
    }
    Sample base;
    base.image = read_rgb_png(entry_root / entry.image_path);
    base.mask = read_mask_png(entry_root / entry.mask_path);
    base.prompts = entry.prompts;

    std::filesystem::create_directories(out_dir / "images");
    std::filesystem::create_directories(out_dir / "masks");
    std::filesystem::create_directories(out_dir / "prompts");

    const std::string stem = stem_of(entry.image_path);
    std::vector<SampleEntry> out;
    out.reserve(transforms.size());
    for (Transform t : transforms) {
        Sample s = augment(base, t, conn);
        std::string name = stem + "_" + std::string(transform_name(t));
        SampleEntry e;
        e.image_path = "images/" + name + ".png";
        e.mask_path = "masks/" + name + ".png";
        e.split = entry.split;
        e.prompts = s.prompts;
        e.provenance = entry.provenance;
        e.provenance.transform = t;
        write_rgb_png(out_dir / e.image_path, s.image);
        write_mask_png(out_dir / e.mask_path, s.mask);
        write_prompts_json(out_dir / "prompts" / (name + ".json"), s.prompts);
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

using nlohmann::json;

json prompt_to_json(const Prompt& p) {
    return json{{"label", p.label}, {"x", p.point.x}, {"y", p.point.y}};
}

Prompt prompt_from_json(const json& j) {
    Prompt p;
    p.label = j.at("label").get<std::uint32_t>();
    p.point.x = j.at("x").get<double>();
    p.point.y = j.at("y").get<double>();
    return p;
}

json entry_to_json(const SampleEntry& e) {
    json prompts = json::array();
    for (const Prompt& p : e.prompts) prompts.push_back(prompt_to_json(p));
    return json{
        {"image", e.image_path},
        {"mask", e.mask_path},
        {"split", std::string(split_name(e.split))},
        {"prompts", std::move(prompts)},
        {"provenance",
         json{{"source", e.provenance.source_id},
              {"transform", std::string(transform_name(e.provenance.transform))},
              {"crop", json{{"x", e.provenance.crop.x},
                            {"y", e.provenance.crop.y},
                            {"w", e.provenance.crop.w},
                            {"h", e.provenance.crop.h}}}}},
    };
}

SampleEntry entry_from_json(const json& j) {
    SampleEntry e;
    e.image_path = j.at("image").get<std::string>();
    e.mask_path = j.at("mask").get<std::string>();
    e.split = parse_split(j.at("split").get<std::string>());
    for (const json& p : j.at("prompts")) e.prompts.push_back(prompt_from_json(p));
    const json& prov = j.at("provenance");
    e.provenance.source_id = prov.at("source").get<std::string>();
    e.provenance.transform = parse_transform(prov.at("transform").get<std::string>());
    const json& c = prov.at("crop");
    e.provenance.crop = CropRect{c.at("x").get<int>(), c.at("y").get<int>(), c.at("w").get<int>(),
                                 c.at("h").get<int>()};
    return e;
}

}  // namespace

void write_manifest(const std::filesystem::path& path, std::span<const SampleEntry> entries) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    for (const SampleEntry& e : entries) {
        out << entry_to_json(e).dump() << "\n";
    }
    if (!out) throw IoError("failed writing " + path.string());
}

std::vector<SampleEntry> read_manifest(const std::filesystem::path& path, bool check_files_exist) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<SampleEntry> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            out.push_back(entry_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (check_files_exist) {
        const std::filesystem::path root = path.parent_path();
        for (const SampleEntry& e : out) {
            for (const std::string& rel : {e.image_path, e.mask_path}) {
                if (!std::filesystem::exists(root / rel)) {
                    throw IoError("manifest references missing file " + (root / rel).string());
                }
            }
        }
    }
    return out;
}

void write_prompts_json(const std::filesystem::path& path, std::span<const Prompt> prompts) {
    json arr = json::array();
    for (const Prompt& p : prompts) arr.push_back(prompt_to_json(p));
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << arr.dump(2) << "\n";
    if (!out) throw IoError("failed writing " + path.string());
}

std::vector<Prompt> read_prompts_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    json arr;
    try {
        in >> arr;
    } catch (const json::exception& e) {
        throw IoError(path.string() + ": " + e.what());
    }
    std::vector<Prompt> out;
    for (const json& p : arr) out.push_back(prompt_from_json(p));
    return out;
}

}  // namespace mosaic
