#ifndef SEAMCARVE_SEAM_HPP
#define SEAMCARVE_SEAM_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "seamcarve/energy.hpp"
#include "seamcarve/error.hpp"
#include "seamcarve/raster.hpp"

namespace seamcarve {

/// A vertical seam: one column per row, consecutive columns at most one apart.
struct Seam {
    std::vector<std::size_t> cols;
    double total_cost = 0.0;
};

inline bool is_valid_seam(const Seam& seam, std::size_t width, std::size_t height) noexcept {
    if (seam.cols.size() != height) return false;
    for (std::size_t r = 0; r < seam.cols.size(); ++r) {
        if (seam.cols[r] >= width) return false;
        if (r > 0) {
            auto a = seam.cols[r - 1], b = seam.cols[r];
            if ((a > b ? a - b : b - a) > 1) return false;
        }
    }
    return true;
}

enum class Axis { width, height };

/// Removed pixels in original-image coordinates, accumulated across
/// iterations.
///
/// A "line" is an original row for width carving and an original column for
/// height carving. `col_map[line]` lists, in order, the original positions
/// along that line that are still present in the current image.
struct SeamTrace {
    std::size_t orig_width = 0;
    std::size_t orig_height = 0;
    Axis axis = Axis::width;
    std::size_t seams = 0;
    Plane<std::uint8_t> removed;
    Plane<std::int32_t> removal_order;
    std::vector<std::vector<std::size_t>> col_map;

    static SeamTrace start(std::size_t width, std::size_t height) {
        SeamTrace t;
        t.orig_width = width;
        t.orig_height = height;
        t.removed = Plane<std::uint8_t>(width, height, 0);
        t.removal_order = Plane<std::int32_t>(width, height, -1);
        t.col_map.assign(height, std::vector<std::size_t>(width));
        for (auto& line : t.col_map) std::iota(line.begin(), line.end(), std::size_t{0});
        return t;
    }

    std::size_t line_count() const noexcept { return axis == Axis::width ? orig_height : orig_width; }
    std::size_t line_length() const noexcept { return axis == Axis::width ? orig_width : orig_height; }

    bool is_removed(std::size_t line, std::size_t pos) const {
        return axis == Axis::width ? removed(line, pos) != 0 : removed(pos, line) != 0;
    }
};

/// Every line has exactly `seams` removed pixels and a strictly increasing
/// map of the survivors.
inline bool trace_is_conserved(const SeamTrace& trace) {
    if (trace.col_map.size() != trace.line_count()) return false;
    for (std::size_t line = 0; line < trace.line_count(); ++line) {
        std::size_t count = 0;
        for (std::size_t p = 0; p < trace.line_length(); ++p) count += trace.is_removed(line, p) ? 1 : 0;
        if (count != trace.seams) return false;
        const auto& map = trace.col_map[line];
        if (map.size() != trace.line_length() - trace.seams) return false;
        for (std::size_t k = 0; k < map.size(); ++k) {
            if (k > 0 && map[k] <= map[k - 1]) return false;
            if (trace.is_removed(line, map[k])) return false;
        }
    }
    return true;
}

struct CostMatrix {
    Plane<double> cumulative;
    Plane<std::int8_t> backptr;

    std::size_t width() const noexcept { return cumulative.width(); }
    std::size_t height() const noexcept { return cumulative.height(); }
};

/// Forward-energy DP:
///   M(0,j) = node(0,j) + lr(0,j)
///   M(i,j) = node(i,j) + lr(i,j) + min{ M(i-1,j-1) + lu_left(i,j),
///                                       M(i-1,j),
///                                       M(i-1,j+1) + lu_right(i,j) }
/// Ties go to the smallest predecessor offset.
inline CostMatrix cumulative_costs(const TransitionCosts& costs) {
    const std::size_t w = costs.width();
    const std::size_t h = costs.height();
    if (w < kMinExtent || h == 0) throw Error(ErrorCode::too_narrow, "cost fields need width >= 3");

    CostMatrix m{Plane<double>(w, h), Plane<std::int8_t>(w, h, 0)};
    for (std::size_t j = 0; j < w; ++j) m.cumulative(0, j) = costs.node_extra(0, j) + costs.cost_lr(0, j);

    for (std::size_t i = 1; i < h; ++i) {
        auto prev = m.cumulative.row(i - 1);
        auto cur = m.cumulative.row(i);
        auto back = m.backptr.row(i);
        auto node = costs.node_extra.row(i);
        auto lr = costs.cost_lr.row(i);
        auto left = costs.cost_lu_left.row(i);
        auto right = costs.cost_lu_right.row(i);
        for (std::size_t j = 0; j < w; ++j) {
            double best;
            std::int8_t off;
            if (j > 0) {
                best = prev[j - 1] + left[j];
                off = -1;
                if (prev[j] < best) {
                    best = prev[j];
                    off = 0;
                }
            } else {
                best = prev[j];
                off = 0;
            }
            if (j + 1 < w) {
                double r = prev[j + 1] + right[j];
                if (r < best) {
                    best = r;
                    off = 1;
                }
            }
            cur[j] = (node[j] + lr[j]) + best;
            back[j] = off;
        }
    }
    return m;
}

inline Seam extract_seam(const CostMatrix& matrix) {
    const std::size_t w = matrix.width();
    const std::size_t h = matrix.height();
    auto bottom = matrix.cumulative.row(h - 1);
    // min_element returns the first minimum, i.e. the smallest column.
    std::size_t col = static_cast<std::size_t>(std::min_element(bottom.begin(), bottom.end()) - bottom.begin());

    Seam seam;
    seam.total_cost = bottom[col];
    seam.cols.resize(h);
    for (std::size_t i = h; i-- > 0;) {
        seam.cols[i] = col;
        if (i > 0) {
            auto off = matrix.backptr(i, col);
            col = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(col) + off);
        }
    }
    if (!is_valid_seam(seam, w, h)) throw std::logic_error("extract_seam produced an invalid seam");
    return seam;
}

/// Deletes one pixel per row, shifting the right part left, and records the
/// removal in `trace` (which must describe `image` in its current state).
inline RasterImage remove_seam(const RasterImage& image, const Seam& seam, SeamTrace& trace) {
    const std::size_t w = image.width();
    const std::size_t h = image.height();
    const std::size_t ch = image.channels();
    if (!is_valid_seam(seam, w, h)) throw Error(ErrorCode::dimension_mismatch, "seam does not fit the image");
    if (w - 1 < kMinExtent) throw Error(ErrorCode::too_narrow, "removing a seam would leave width < 3");
    if (trace.col_map.size() != h || trace.axis != Axis::width)
        throw Error(ErrorCode::dimension_mismatch, "trace does not describe this image");

    std::vector<double> out;
    out.reserve((w - 1) * h * ch);
    auto src = image.data();
    const auto order = static_cast<std::int32_t>(trace.seams);
    for (std::size_t r = 0; r < h; ++r) {
        const std::size_t c = seam.cols[r];
        auto row = src.subspan(r * w * ch, w * ch);
        out.insert(out.end(), row.begin(), row.begin() + static_cast<std::ptrdiff_t>(c * ch));
        out.insert(out.end(), row.begin() + static_cast<std::ptrdiff_t>((c + 1) * ch), row.end());

        auto& map = trace.col_map[r];
        if (map.size() != w) throw Error(ErrorCode::dimension_mismatch, "trace width does not match image");
        const std::size_t orig = map[c];
        trace.removed(r, orig) = 1;
        trace.removal_order(r, orig) = order;
        map.erase(map.begin() + static_cast<std::ptrdiff_t>(c));
    }
    ++trace.seams;
    return RasterImage(trusted, w - 1, h, ch, std::move(out));
}

/// Which column index the ramp term is evaluated on.
enum class RampFrame {
    original, ///< column of the pixel in the input image (via the trace)
    current,  ///< column in the image being carved this iteration
};

struct CarveOptions {
    RampFrame ramp_frame = RampFrame::original;
};

struct RetargetResult {
    RasterImage image;
    SeamTrace trace;
};

/// One full carving iteration: find the cheapest seam of `image`.
inline Seam find_seam(const RasterImage& image, const RampParams& params, const SeamTrace& trace,
                      const CarveOptions& options = {}) {
    GrayField gray = to_gray(image);
    TransitionCosts costs = options.ramp_frame == RampFrame::original
        ? build_transition_costs(gray, params,
                                 [&](std::size_t i, std::size_t j) { return trace.col_map[i][j]; })
        : build_transition_costs(gray, params);
    return extract_seam(cumulative_costs(costs));
}

/// Removes vertical seams one at a time until the image is `target_width`
/// wide. Deterministic.
inline RetargetResult retarget_width(const RasterImage& image, std::size_t target_width, const RampParams& params,
                                     const CarveOptions& options = {}) {
    params.validate();
    if (image.height() < kMinExtent) throw Error(ErrorCode::too_small, "image height < 3");
    if (target_width < kMinExtent || target_width >= image.width())
        throw Error(ErrorCode::bad_target, "target width " + std::to_string(target_width) +
                                               " must be in [3, " + std::to_string(image.width()) + ")");

    RetargetResult result{image, SeamTrace::start(image.width(), image.height())};
    while (result.image.width() > target_width) {
        Seam seam = find_seam(result.image, params, result.trace, options);
        result.image = remove_seam(result.image, seam, result.trace);
    }
    if (!trace_is_conserved(result.trace)) throw std::logic_error("seam trace lost conservation");
    return result;
}

inline SeamTrace transpose(const SeamTrace& trace) {
    SeamTrace t;
    t.orig_width = trace.orig_height;
    t.orig_height = trace.orig_width;
    t.axis = trace.axis == Axis::width ? Axis::height : Axis::width;
    t.seams = trace.seams;
    t.removed = transpose(trace.removed);
    t.removal_order = transpose(trace.removal_order);
    t.col_map = trace.col_map;
    return t;
}

/// Horizontal seams, by carving the transposed image.
inline RetargetResult retarget_height(const RasterImage& image, std::size_t target_height, const RampParams& params,
                                      const CarveOptions& options = {}) {
    auto r = retarget_width(transpose(image), target_height, params, options);
    return {transpose(r.image), transpose(r.trace)};
}

/// Widens the image by duplicating the k cheapest seams. Each removed pixel
/// of a scratch carve gets a new neighbour on its right whose value is the
/// mean of the two original pixels it sits between (a copy at the border).
/// When k exceeds what one carve can remove (width - 3), insertion runs in
/// several passes.
inline RasterImage enlarge_width(const RasterImage& image, std::size_t target_width, const RampParams& params,
                                 const CarveOptions& options = {}) {
    params.validate();
    if (target_width <= image.width() || target_width > 2 * image.width())
        throw Error(ErrorCode::bad_target, "target width " + std::to_string(target_width) + " must be in (" +
                                               std::to_string(image.width()) + ", " +
                                               std::to_string(2 * image.width()) + "]");
    if (image.height() < kMinExtent) throw Error(ErrorCode::too_small, "image height < 3");

    RasterImage current = image;
    while (current.width() < target_width) {
        const std::size_t w = current.width();
        const std::size_t per_pass = w > kMinExtent ? w - kMinExtent : 0;
        const std::size_t k = std::min(target_width - w, per_pass);
        if (k == 0) throw Error(ErrorCode::bad_target, "image too narrow to enlarge");
        SeamTrace trace = retarget_width(current, w - k, params, options).trace;

        const std::size_t h = current.height();
        const std::size_t ch = current.channels();
        std::vector<double> out;
        out.reserve((w + k) * h * ch);
        for (std::size_t r = 0; r < h; ++r) {
            for (std::size_t c = 0; c < w; ++c) {
                auto px = current.pixel(r, c);
                out.insert(out.end(), px.begin(), px.end());
                if (!trace.removed(r, c)) continue;
                if (c + 1 < w) {
                    auto right = current.pixel(r, c + 1);
                    for (std::size_t k2 = 0; k2 < ch; ++k2) out.push_back(0.5 * (px[k2] + right[k2]));
                } else {
                    out.insert(out.end(), px.begin(), px.end());
                }
            }
        }
        current = RasterImage(trusted, w + k, h, ch, std::move(out));
    }
    return current;
}

inline RasterImage enlarge_height(const RasterImage& image, std::size_t target_height, const RampParams& params,
                                  const CarveOptions& options = {}) {
    return transpose(enlarge_width(transpose(image), target_height, params, options));
}

} // namespace seamcarve

#endif // SEAMCARVE_SEAM_HPP
