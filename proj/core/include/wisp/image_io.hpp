#pragma once

#include <stdexcept>
#include <string>

#include "wisp/image.hpp"

namespace wisp {

/// File access or decode/encode failure; the message names the path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads a PGM (P2/P5, maxval <= 255) or PNG (8-bit gray or RGB) file.
/// The container is detected from the file contents, not the extension.
/// RGB pixels are converted to luminance with the Rec.601 weights
/// 0.299 R + 0.587 G + 0.114 B, rounded to the nearest integer.
Image load_image(const std::string& path);

/// Writes an 8-bit grayscale file, format chosen by extension
/// (.pgm/.pnm -> binary P5, .png -> grayscale PNG). Samples are clamped to
/// [0,255] and rounded half away from zero.
void save_image(const Image& img, const std::string& path);

}  // namespace wisp
