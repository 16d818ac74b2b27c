#ifndef SEAMCARVE_METRICS_HPP
#define SEAMCARVE_METRICS_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "seamcarve/error.hpp"
#include "seamcarve/raster.hpp"
#include "seamcarve/seam.hpp"

namespace seamcarve {

struct ScmReport {
    double scm = 0.0;
    std::size_t seams_removed = 0;
    /// Lengths of the maximal runs of removed pixels, one list per line.
    std::vector<std::vector<std::size_t>> per_row_segments;
};

/// Seam Coagulation Measure: sqrt(sum over lines and runs of L^2 / (lines * k)),
/// where the runs are maximal stretches of adjacent removed pixels along each
/// original line and k is the number of removed seams. 1 means fully
/// dispersed, sqrt(k) means every line lost one contiguous block.
inline ScmReport compute_scm(const SeamTrace& trace, std::size_t retargeted_extent) {
    const std::size_t full = trace.line_length();
    if (retargeted_extent >= full)
        throw Error(ErrorCode::undefined_metric, "no seams removed, SCM divides by zero");
    const std::size_t k = full - retargeted_extent;
    if (k != trace.seams)
        throw Error(ErrorCode::dimension_mismatch, "trace holds " + std::to_string(trace.seams) +
                                                       " seams, expected " + std::to_string(k));

    ScmReport report;
    report.seams_removed = k;
    report.per_row_segments.resize(trace.line_count());
    double sum_sq = 0.0;
    for (std::size_t line = 0; line < trace.line_count(); ++line) {
        auto& runs = report.per_row_segments[line];
        std::size_t run = 0;
        for (std::size_t p = 0; p <= full; ++p) {
            if (p < full && trace.is_removed(line, p)) {
                ++run;
            } else if (run > 0) {
                runs.push_back(run);
                sum_sq += static_cast<double>(run) * static_cast<double>(run);
                run = 0;
            }
        }
    }
    report.scm = std::sqrt(sum_sq / (static_cast<double>(trace.line_count()) * static_cast<double>(k)));
    return report;
}

/// Copy of `original` (promoted to RGB) with every removed pixel painted red.
inline RasterImage seam_overlay(const RasterImage& original, const SeamTrace& trace) {
    if (original.width() != trace.orig_width || original.height() != trace.orig_height)
        throw Error(ErrorCode::dimension_mismatch, "trace does not match the original image");
    RasterImage rgb = to_rgb(original);
    std::vector<double> data(rgb.data().begin(), rgb.data().end());
    for (std::size_t r = 0; r < rgb.height(); ++r)
        for (std::size_t c = 0; c < rgb.width(); ++c)
            if (trace.removed(r, c)) {
                double* px = &data[(r * rgb.width() + c) * 3];
                px[0] = 1.0;
                px[1] = 0.0;
                px[2] = 0.0;
            }
    return RasterImage(trusted, rgb.width(), rgb.height(), 3, std::move(data));
}

} // namespace seamcarve

#endif // SEAMCARVE_METRICS_HPP
