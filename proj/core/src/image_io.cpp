#include "wisp/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

namespace wisp {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
    throw IoError(path + ": " + reason);
}

std::string lower_ext(const std::string& path) {
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return {};
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

// ---------------------------------------------------------------------------
// PGM
// ---------------------------------------------------------------------------

// Reads the next header token, skipping whitespace and '#' comments.
std::string next_pgm_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (std::isspace(c)) continue;
        tok.push_back(static_cast<char>(c));
        while ((c = in.peek()) != EOF && !std::isspace(c) && c != '#') {
            tok.push_back(static_cast<char>(in.get()));
        }
        return tok;
    }
    return tok;
}

int parse_pgm_int(std::istream& in, const std::string& path, const char* what) {
    const std::string tok = next_pgm_token(in);
    if (tok.empty()) fail(path, std::string("truncated PGM header while reading ") + what);
    try {
        std::size_t pos = 0;
        const int value = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        fail(path, std::string("malformed PGM header: bad ") + what + " '" + tok + "'");
    }
}

Image load_pgm(std::ifstream& in, const std::string& path, bool binary) {
    const int width = parse_pgm_int(in, path, "width");
    const int height = parse_pgm_int(in, path, "height");
    const int maxval = parse_pgm_int(in, path, "maxval");
    if (width < 1 || height < 1) fail(path, "malformed PGM header: non-positive dimensions");
    if (maxval < 1) fail(path, "malformed PGM header: non-positive maxval");
    if (maxval > 255) fail(path, "unsupported bit depth: maxval " + std::to_string(maxval) +
                                     " exceeds 8 bits/channel");

    const std::size_t count =
        static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<double> pixels(count);

    if (binary) {
        // Exactly one whitespace byte separates the header from the raster.
        const int sep = in.get();
        if (sep == EOF || !std::isspace(sep)) fail(path, "malformed P5 header: missing raster separator");
        std::vector<unsigned char> raw(count);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(count));
        if (static_cast<std::size_t>(in.gcount()) != count) fail(path, "truncated P5 raster");
        for (std::size_t i = 0; i < count; ++i) pixels[i] = raw[i];
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const int v = parse_pgm_int(in, path, "sample");
            if (v < 0 || v > maxval) fail(path, "P2 sample out of range");
            pixels[i] = v;
        }
    }
    return Image(width, height, std::move(pixels));
}

void save_pgm(const Image& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open for writing");
    out << "P5\n" << img.width() << " " << img.height() << "\n255\n";
    std::vector<unsigned char> raw(img.size());
    const auto& px = img.pixels();
    for (std::size_t i = 0; i < px.size(); ++i) {
        raw[i] = static_cast<unsigned char>(gray_level(px[i]));
    }
    out.write(reinterpret_cast<const char*>(raw.data()),
              static_cast<std::streamsize>(raw.size()));
    if (!out) fail(path, "write failed");
}

// ---------------------------------------------------------------------------
// PNG (libpng)
// ---------------------------------------------------------------------------

struct FileCloser {
    void operator()(std::FILE* f) const noexcept {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

Image load_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) fail(path, "cannot open for reading");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) fail(path, "libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        fail(path, "libpng init failed");
    }

    std::vector<png_byte> data;
    std::vector<png_bytep> rows;
    int width = 0, height = 0, channels = 0;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "malformed PNG stream");
    }

    png_init_io(png, fp.get());
    png_read_info(png, info);

    const png_byte bit_depth = png_get_bit_depth(png, info);
    const png_byte color_type = png_get_color_type(png, info);
    if (bit_depth > 8) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "unsupported bit depth: " + std::to_string(bit_depth) + " bits/channel");
    }
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    png_read_update_info(png, info);

    width = static_cast<int>(png_get_image_width(png, info));
    height = static_cast<int>(png_get_image_height(png, info));
    channels = png_get_channels(png, info);
    if (channels != 1 && channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "unsupported PNG channel layout");
    }

    const std::size_t stride = static_cast<std::size_t>(width) * static_cast<std::size_t>(channels);
    data.resize(stride * static_cast<std::size_t>(height));
    rows.resize(static_cast<std::size_t>(height));
    for (int y = 0; y < height; ++y) rows[static_cast<std::size_t>(y)] = data.data() + stride * static_cast<std::size_t>(y);

    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    std::vector<double> pixels(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
    if (channels == 1) {
        for (std::size_t i = 0; i < pixels.size(); ++i) pixels[i] = data[i];
    } else {
        for (std::size_t i = 0; i < pixels.size(); ++i) {
            const double r = data[3 * i + 0];
            const double g = data[3 * i + 1];
            const double b = data[3 * i + 2];
            pixels[i] = std::lround(0.299 * r + 0.587 * g + 0.114 * b);
        }
    }
    return Image(width, height, std::move(pixels));
}

void save_png(const Image& img, const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) fail(path, "cannot open for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) fail(path, "libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        fail(path, "libpng init failed");
    }

    std::vector<png_byte> raw(img.size());
    std::vector<png_bytep> rows(static_cast<std::size_t>(img.height()));
    const auto& px = img.pixels();
    for (std::size_t i = 0; i < px.size(); ++i) raw[i] = static_cast<png_byte>(gray_level(px[i]));
    for (int y = 0; y < img.height(); ++y) {
        rows[static_cast<std::size_t>(y)] =
            raw.data() + static_cast<std::size_t>(y) * static_cast<std::size_t>(img.width());
    }

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fail(path, "PNG write failed");
    }

    png_init_io(png, fp.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width()),
                 static_cast<png_uint_32>(img.height()), 8, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

}  // namespace

Image load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open for reading");

    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2) fail(path, "file too short");

    if (magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5')) {
        return load_pgm(in, path, magic[1] == '5');
    }
    if (static_cast<unsigned char>(magic[0]) == 0x89 && magic[1] == 'P') {
        in.close();
        return load_png(path);
    }
    fail(path, "unrecognized format (expected PGM P2/P5 or PNG)");
}

void save_image(const Image& img, const std::string& path) {
    const std::string ext = lower_ext(path);
    if (ext == "pgm" || ext == "pnm") {
        save_pgm(img, path);
    } else if (ext == "png") {
        save_png(img, path);
    } else {
        fail(path, "unsupported output extension '" + ext + "' (use .pgm, .pnm or .png)");
    }
}

}  // namespace wisp
