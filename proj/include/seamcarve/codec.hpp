#ifndef SEAMCARVE_CODEC_HPP
#define SEAMCARVE_CODEC_HPP

// PNG and JPEG decoding, PNG encoding. Link against libpng and libjpeg.

#include <algorithm>
#include <csetjmp>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include <png.h>
#include <jpeglib.h>

#include "seamcarve/error.hpp"
#include "seamcarve/raster.hpp"

namespace seamcarve {

enum class ImageFormat { png, jpeg, unknown };

inline ImageFormat sniff_format(std::span<const std::uint8_t> bytes) noexcept {
    static constexpr std::uint8_t png_sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (bytes.size() >= 8 && std::equal(png_sig, png_sig + 8, bytes.begin()))
        return ImageFormat::png;
    if (bytes.size() >= 3 && bytes[0] == 0xFF && bytes[1] == 0xD8 && bytes[2] == 0xFF)
        return ImageFormat::jpeg;
    return ImageFormat::unknown;
}

namespace detail {

inline RasterImage from_bytes8(std::size_t width, std::size_t height, std::size_t channels,
                               const std::vector<std::uint8_t>& px) {
    std::vector<double> data(px.size());
    for (std::size_t i = 0; i < px.size(); ++i) data[i] = px[i] / 255.0;
    return RasterImage(width, height, channels, std::move(data));
}

inline void check_min_extent(std::size_t width, std::size_t height) {
    if (width < kMinExtent || height < kMinExtent)
        throw Error(ErrorCode::too_small, "decoded image is " + std::to_string(width) + "x" +
                                              std::to_string(height) + ", minimum is 3x3");
}

inline RasterImage decode_png(std::span<const std::uint8_t> bytes, std::vector<std::string>* warnings) {
    png_image img{};
    img.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&img, bytes.data(), bytes.size())) {
        std::string msg = img.message;
        png_image_free(&img);
        throw Error(ErrorCode::decode_failed, "png: " + msg);
    }
    const bool color = (img.format & PNG_FORMAT_FLAG_COLOR) != 0;
    if ((img.format & PNG_FORMAT_FLAG_ALPHA) && warnings)
        warnings->push_back("alpha channel stripped");
    const std::size_t width = img.width;
    const std::size_t height = img.height;
    const std::size_t channels = color ? 3 : 1;
    img.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    std::vector<std::uint8_t> px(PNG_IMAGE_SIZE(img));
    if (!png_image_finish_read(&img, nullptr, px.data(), 0, nullptr)) {
        std::string msg = img.message;
        png_image_free(&img);
        throw Error(ErrorCode::decode_failed, "png: " + msg);
    }
    check_min_extent(width, height);
    return from_bytes8(width, height, channels, px);
}

struct JpegErrorManager {
    jpeg_error_mgr base;
    std::jmp_buf jump;
    char message[JMSG_LENGTH_MAX];
};

extern "C" inline void jpeg_error_exit_to_jump(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, err->message);
    std::longjmp(err->jump, 1);
}

extern "C" inline void jpeg_silent_output(j_common_ptr) {}

// Kept free of objects with non-trivial destructors so the longjmp is safe.
inline bool decode_jpeg_raw(std::span<const std::uint8_t> bytes, std::uint8_t* out, std::size_t out_size,
                            JDIMENSION* width, JDIMENSION* height, int* channels, char* message) {
    jpeg_decompress_struct cinfo;
    JpegErrorManager err;
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_error_exit_to_jump;
    err.base.output_message = jpeg_silent_output;
    err.message[0] = '\0';
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        std::snprintf(message, JMSG_LENGTH_MAX, "%s", err.message);
        return false;
    }
    jpeg_create_decompress(&cinfo);
    jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = cinfo.num_components == 1 ? JCS_GRAYSCALE : JCS_RGB;
    jpeg_start_decompress(&cinfo);
    *width = cinfo.output_width;
    *height = cinfo.output_height;
    *channels = cinfo.output_components;
    const std::size_t stride = static_cast<std::size_t>(cinfo.output_width) * cinfo.output_components;
    if (out == nullptr || stride * cinfo.output_height > out_size) {
        jpeg_destroy_decompress(&cinfo);
        message[0] = '\0';
        return false;
    }
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = out + stride * cinfo.output_scanline;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return true;
}

inline bool read_jpeg_header(std::span<const std::uint8_t> bytes, JDIMENSION* width, JDIMENSION* height,
                             int* channels, char* message) {
    jpeg_decompress_struct cinfo;
    JpegErrorManager err;
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_error_exit_to_jump;
    err.base.output_message = jpeg_silent_output;
    err.message[0] = '\0';
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        std::snprintf(message, JMSG_LENGTH_MAX, "%s", err.message);
        return false;
    }
    jpeg_create_decompress(&cinfo);
    jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
    jpeg_read_header(&cinfo, TRUE);
    *width = cinfo.image_width;
    *height = cinfo.image_height;
    *channels = cinfo.num_components == 1 ? 1 : 3;
    jpeg_destroy_decompress(&cinfo);
    return true;
}

inline RasterImage decode_jpeg(std::span<const std::uint8_t> bytes) {
    char message[JMSG_LENGTH_MAX] = {};
    JDIMENSION width = 0, height = 0;
    int channels = 0;
    if (!read_jpeg_header(bytes, &width, &height, &channels, message))
        throw Error(ErrorCode::decode_failed, std::string("jpeg: ") + message);
    std::vector<std::uint8_t> px(static_cast<std::size_t>(width) * height * channels);
    if (!decode_jpeg_raw(bytes, px.data(), px.size(), &width, &height, &channels, message))
        throw Error(ErrorCode::decode_failed, std::string("jpeg: ") + message);
    check_min_extent(width, height);
    return from_bytes8(width, height, static_cast<std::size_t>(channels), px);
}

} // namespace detail

/// Decodes a PNG or JPEG payload into [0,1] intensities (value / 255).
/// Grayscale sources stay single-channel. Non-fatal notes (a stripped alpha
/// channel) are appended to `warnings` when given.
inline RasterImage decode(std::span<const std::uint8_t> bytes, std::vector<std::string>* warnings = nullptr) {
    switch (sniff_format(bytes)) {
    case ImageFormat::png: return detail::decode_png(bytes, warnings);
    case ImageFormat::jpeg: return detail::decode_jpeg(bytes);
    case ImageFormat::unknown: break;
    }
    if (bytes.empty()) throw Error(ErrorCode::decode_failed, "empty stream");
    throw Error(ErrorCode::unsupported_format, "stream is neither PNG nor JPEG");
}

/// Lossless 8-bit PNG (Gray8 or RGB8). Intensities are stored as round(v * 255).
inline std::vector<std::uint8_t> encode_png(const RasterImage& image) {
    std::vector<std::uint8_t> px(image.data().size());
    for (std::size_t i = 0; i < px.size(); ++i) px[i] = quantize(image.data()[i]);

    png_image img{};
    img.version = PNG_IMAGE_VERSION;
    img.width = static_cast<png_uint_32>(image.width());
    img.height = static_cast<png_uint_32>(image.height());
    img.format = image.channels() == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;

    png_alloc_size_t size = 0;
    if (!png_image_write_to_memory(&img, nullptr, &size, 0, px.data(), 0, nullptr))
        throw Error(ErrorCode::io_failed, std::string("png encode: ") + img.message);
    std::vector<std::uint8_t> out(size);
    if (!png_image_write_to_memory(&img, out.data(), &size, 0, px.data(), 0, nullptr))
        throw Error(ErrorCode::io_failed, std::string("png encode: ") + img.message);
    out.resize(size);
    return out;
}

inline std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io_failed, "cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::io_failed, "cannot create " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::io_failed, "short write to " + path.string());
}

inline RasterImage load_image(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr) {
    auto bytes = read_file(path);
    return decode(bytes, warnings);
}

inline void save_png(const std::filesystem::path& path, const RasterImage& image) {
    write_file(path, encode_png(image));
}

} // namespace seamcarve

#endif // SEAMCARVE_CODEC_HPP
