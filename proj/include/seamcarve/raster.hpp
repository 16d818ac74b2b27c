#ifndef SEAMCARVE_RASTER_HPP
#define SEAMCARVE_RASTER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seamcarve/error.hpp"

namespace seamcarve {

/// Smallest width/height the seam engine accepts: the forward-energy terms
/// look one pixel left, right, up and down.
inline constexpr std::size_t kMinExtent = 3;

/// Row-major plane of values. Shared storage for the gray field, the cost
/// fields and the DP tables.
template <typename T>
class Plane {
public:
    Plane() = default;
    Plane(std::size_t width, std::size_t height, T fill = T{})
        : width_(width), height_(height), values_(width * height, fill) {}
    Plane(std::size_t width, std::size_t height, std::vector<T> values)
        : width_(width), height_(height), values_(std::move(values)) {
        if (values_.size() != width_ * height_)
            throw Error(ErrorCode::dimension_mismatch, "plane storage does not match width x height");
    }

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t size() const noexcept { return values_.size(); }

    T& operator()(std::size_t row, std::size_t col) { return values_[row * width_ + col]; }
    const T& operator()(std::size_t row, std::size_t col) const { return values_[row * width_ + col]; }

    std::span<T> row(std::size_t r) { return {values_.data() + r * width_, width_}; }
    std::span<const T> row(std::size_t r) const { return {values_.data() + r * width_, width_}; }

    std::span<const T> values() const noexcept { return values_; }
    std::span<T> values() noexcept { return values_; }

    bool operator==(const Plane&) const = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<T> values_;
};

template <typename T>
Plane<T> transpose(const Plane<T>& plane) {
    Plane<T> out(plane.height(), plane.width());
    for (std::size_t r = 0; r < plane.height(); ++r)
        for (std::size_t c = 0; c < plane.width(); ++c)
            out(c, r) = plane(r, c);
    return out;
}

/// Tag for constructors that skip the [0,1] scan; callers guarantee the range.
struct trusted_t {
    explicit trusted_t() = default;
};
inline constexpr trusted_t trusted{};

/// Single-channel luminance in [0,1].
class GrayField : public Plane<double> {
public:
    GrayField() = default;
    GrayField(trusted_t, std::size_t width, std::size_t height, std::vector<double> values)
        : Plane<double>(width, height, std::move(values)) {}
    GrayField(std::size_t width, std::size_t height, std::vector<double> values)
        : Plane<double>(width, height, std::move(values)) {
        for (double v : this->values())
            if (!(v >= 0.0 && v <= 1.0))
                throw Error(ErrorCode::invalid_config, "gray value outside [0,1]");
    }
};

/// Multi-channel (1 or 3) pixel grid, intensities in [0,1], row-major and
/// channel-interleaved.
class RasterImage {
public:
    RasterImage() = default;
    RasterImage(std::size_t width, std::size_t height, std::size_t channels, std::vector<double> data)
        : width_(width), height_(height), channels_(channels), data_(std::move(data)) {
        if (channels_ != 1 && channels_ != 3)
            throw Error(ErrorCode::invalid_config, "channels must be 1 or 3");
        if (width_ == 0 || height_ == 0)
            throw Error(ErrorCode::too_small, "empty image");
        if (data_.size() != width_ * height_ * channels_)
            throw Error(ErrorCode::dimension_mismatch, "pixel data does not match width x height x channels");
        for (double v : data_)
            if (!(v >= 0.0 && v <= 1.0))
                throw Error(ErrorCode::invalid_config, "intensity outside [0,1]");
    }

    RasterImage(trusted_t, std::size_t width, std::size_t height, std::size_t channels, std::vector<double> data)
        : width_(width), height_(height), channels_(channels), data_(std::move(data)) {}

    static RasterImage filled(std::size_t width, std::size_t height, std::size_t channels, double value) {
        return RasterImage(width, height, channels, std::vector<double>(width * height * channels, value));
    }

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t channels() const noexcept { return channels_; }
    std::span<const double> data() const noexcept { return data_; }

    double at(std::size_t row, std::size_t col, std::size_t ch = 0) const {
        return data_[(row * width_ + col) * channels_ + ch];
    }
    std::span<const double> pixel(std::size_t row, std::size_t col) const {
        return {data_.data() + (row * width_ + col) * channels_, channels_};
    }

    bool operator==(const RasterImage&) const = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::size_t channels_ = 1;
    std::vector<double> data_;
};

/// 8-bit quantization used by the PNG encoder.
inline std::uint8_t quantize(double v) noexcept {
    return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

/// Image with every intensity snapped to the nearest k/255.
inline RasterImage quantized(const RasterImage& image) {
    std::vector<double> data(image.data().begin(), image.data().end());
    for (double& v : data) v = quantize(v) / 255.0;
    return RasterImage(image.width(), image.height(), image.channels(), std::move(data));
}

/// Rec. 601 luma for RGB; single-channel images pass through unchanged.
inline GrayField to_gray(const RasterImage& image) {
    const std::size_t n = image.width() * image.height();
    std::vector<double> values(n);
    auto src = image.data();
    if (image.channels() == 1) {
        std::copy(src.begin(), src.end(), values.begin());
    } else {
        for (std::size_t p = 0; p < n; ++p) {
            double y = 0.299 * src[3 * p] + 0.587 * src[3 * p + 1] + 0.114 * src[3 * p + 2];
            // The coefficients sum to 1 only up to rounding.
            values[p] = std::clamp(y, 0.0, 1.0);
        }
    }
    return GrayField(trusted, image.width(), image.height(), std::move(values));
}

inline RasterImage transpose(const RasterImage& image) {
    const std::size_t ch = image.channels();
    std::vector<double> data(image.data().size());
    auto src = image.data();
    for (std::size_t r = 0; r < image.height(); ++r)
        for (std::size_t c = 0; c < image.width(); ++c)
            for (std::size_t k = 0; k < ch; ++k)
                data[(c * image.height() + r) * ch + k] = src[(r * image.width() + c) * ch + k];
    return RasterImage(trusted, image.height(), image.width(), ch, std::move(data));
}

/// Gray images are replicated into three channels; RGB is returned as is.
inline RasterImage to_rgb(const RasterImage& image) {
    if (image.channels() == 3) return image;
    std::vector<double> data;
    data.reserve(image.data().size() * 3);
    for (double v : image.data()) data.insert(data.end(), {v, v, v});
    return RasterImage(trusted, image.width(), image.height(), 3, std::move(data));
}

} // namespace seamcarve

#endif // SEAMCARVE_RASTER_HPP
