#include "sharpgan/png_io.hpp"

#include <cmath>
#include <cstdio>
#include <memory>

#include <png.h>

namespace sharpgan {

namespace {

struct FileCloser {
    void operator()(FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
    FilePtr f(std::fopen(path.c_str(), mode));
    if (!f) throw IoError("cannot open " + path.string());
    return f;
}

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;

    PngReader() {
        png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
        if (png) info = png_create_info_struct(png);
        if (!png || !info) throw IoError("libpng allocation failed");
    }
    ~PngReader() { png_destroy_read_struct(&png, &info, nullptr); }
};

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;

    PngWriter() {
        png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
        if (png) info = png_create_info_struct(png);
        if (!png || !info) throw IoError("libpng allocation failed");
    }
    ~PngWriter() { png_destroy_write_struct(&png, &info); }
};

// Reads any PNG into 8-bit interleaved channels; bit_depth16 selects raw
// 16-bit gray reads for instance maps.
std::vector<uint16_t> read_png(const std::filesystem::path& path, int& width,
                               int& height, int& channels, bool keep16) {
    FilePtr file = open_file(path, "rb");
    PngReader reader;
    if (setjmp(png_jmpbuf(reader.png)))
        throw FormatError("malformed PNG: " + path.string());

    png_init_io(reader.png, file.get());
    png_read_info(reader.png, reader.info);

    const int bit_depth = png_get_bit_depth(reader.png, reader.info);
    const int color_type = png_get_color_type(reader.png, reader.info);

    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(reader.png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(reader.png);
    if (png_get_valid(reader.png, reader.info, PNG_INFO_tRNS))
        png_set_tRNS_to_alpha(reader.png);
    png_set_strip_alpha(reader.png);
    if (!keep16 && bit_depth == 16) png_set_strip_16(reader.png);
    png_read_update_info(reader.png, reader.info);

    width = static_cast<int>(png_get_image_width(reader.png, reader.info));
    height = static_cast<int>(png_get_image_height(reader.png, reader.info));
    channels = png_get_channels(reader.png, reader.info);
    const int depth = png_get_bit_depth(reader.png, reader.info);

    const size_t row_bytes = png_get_rowbytes(reader.png, reader.info);
    std::vector<uint8_t> raw(row_bytes * height);
    std::vector<png_bytep> rows(height);
    for (int r = 0; r < height; ++r) rows[r] = raw.data() + row_bytes * r;
    png_read_image(reader.png, rows.data());
    png_read_end(reader.png, nullptr);

    std::vector<uint16_t> out(static_cast<size_t>(width) * height * channels);
    if (depth == 16) {
        for (size_t i = 0; i < out.size(); ++i)
            out[i] = static_cast<uint16_t>((raw[2 * i] << 8) | raw[2 * i + 1]);  // PNG is big-endian
    } else {
        for (size_t i = 0; i < out.size(); ++i) out[i] = raw[i];
    }
    return out;
}

void write_png(const std::filesystem::path& path, int width, int height,
               int bit_depth, int color_type, const std::vector<uint8_t>& raw) {
    FilePtr file = open_file(path, "wb");
    PngWriter writer;
    if (setjmp(png_jmpbuf(writer.png)))
        throw IoError("PNG write failed: " + path.string());

    png_init_io(writer.png, file.get());
    // Fixed encoder settings keep outputs byte-identical across runs.
    png_set_compression_level(writer.png, 6);
    png_set_filter(writer.png, 0, PNG_FILTER_NONE);
    png_set_IHDR(writer.png, writer.info, width, height, bit_depth, color_type,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(writer.png, writer.info);

    const size_t row_bytes = raw.size() / height;
    std::vector<png_bytep> rows(height);
    for (int r = 0; r < height; ++r)
        rows[r] = const_cast<png_bytep>(raw.data() + row_bytes * r);
    png_write_image(writer.png, rows.data());
    png_write_end(writer.png, nullptr);
}

uint8_t to_byte(double v) {
    return static_cast<uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

}  // namespace

RgbImage read_rgb_png(const std::filesystem::path& path) {
    int w, h, ch;
    const auto raw = read_png(path, w, h, ch, false);
    RgbImage img(w, h);
    const size_t n = img.pixel_count();
    for (size_t i = 0; i < n; ++i) {
        if (ch >= 3) {
            img.data[3 * i] = raw[ch * i] / 255.0;
            img.data[3 * i + 1] = raw[ch * i + 1] / 255.0;
            img.data[3 * i + 2] = raw[ch * i + 2] / 255.0;
        } else {
            const double v = raw[ch * i] / 255.0;
            img.data[3 * i] = img.data[3 * i + 1] = img.data[3 * i + 2] = v;
        }
    }
    return img;
}

GrayImage read_gray_png(const std::filesystem::path& path) {
    int w, h, ch;
    const auto raw = read_png(path, w, h, ch, false);
    GrayImage img(w, h);
    const size_t n = img.pixel_count();
    for (size_t i = 0; i < n; ++i) {
        if (ch >= 3) {
            img.data[i] = kLumaR * raw[ch * i] / 255.0 +
                          kLumaG * raw[ch * i + 1] / 255.0 +
                          kLumaB * raw[ch * i + 2] / 255.0;
        } else {
            img.data[i] = raw[ch * i] / 255.0;
        }
    }
    return img;
}

void write_gray_png(const std::filesystem::path& path, const GrayImage& img) {
    std::vector<uint8_t> raw(img.pixel_count());
    for (size_t i = 0; i < raw.size(); ++i) raw[i] = to_byte(img.data[i]);
    write_png(path, img.width, img.height, 8, PNG_COLOR_TYPE_GRAY, raw);
}

InstanceMap read_instance_png(const std::filesystem::path& path) {
    int w, h, ch;
    const auto raw = read_png(path, w, h, ch, true);
    if (ch != 1) throw FormatError("instance map PNG must be single-channel: " + path.string());
    InstanceMap m(w, h);
    for (size_t i = 0; i < m.labels.size(); ++i) m.labels[i] = raw[i];
    return m;
}

void write_instance_png(const std::filesystem::path& path, const InstanceMap& m) {
    if (m.max_label() > 65535)
        throw FormatError("instance labels exceed 16-bit PNG range");
    std::vector<uint8_t> raw(m.labels.size() * 2);
    for (size_t i = 0; i < m.labels.size(); ++i) {
        raw[2 * i] = static_cast<uint8_t>(m.labels[i] >> 8);  // big-endian per PNG
        raw[2 * i + 1] = static_cast<uint8_t>(m.labels[i] & 0xFF);
    }
    write_png(path, m.width, m.height, 16, PNG_COLOR_TYPE_GRAY, raw);
}

void write_mask_png(const std::filesystem::path& path, const BinaryMask& mask) {
    std::vector<uint8_t> raw(mask.values.size());
    for (size_t i = 0; i < raw.size(); ++i) raw[i] = mask.values[i] ? 255 : 0;
    write_png(path, mask.width, mask.height, 8, PNG_COLOR_TYPE_GRAY, raw);
}

void write_contour_png(const std::filesystem::path& path, const ContourMap& c) {
    std::vector<uint8_t> raw(c.values.size());
    for (size_t i = 0; i < raw.size(); ++i) raw[i] = c.values[i] ? 255 : 0;
    write_png(path, c.width, c.height, 8, PNG_COLOR_TYPE_GRAY, raw);
}

}  // namespace sharpgan
