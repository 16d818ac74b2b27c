#ifndef SEAMCARVE_ENERGY_HPP
#define SEAMCARVE_ENERGY_HPP

#include <cmath>
#include <cstddef>

#include "seamcarve/error.hpp"
#include "seamcarve/raster.hpp"

namespace seamcarve {

/// Periodic sawtooth cost that disperses seams. On every `r2`-th row the
/// pixel at column j costs alpha * (j mod r1); all other rows cost nothing.
struct RampParams {
    double alpha = 0.0625;
    std::size_t r1 = 4;
    std::size_t r2 = 5;
    bool enabled = true;

    static RampParams disabled() { return RampParams{.enabled = false}; }

    void validate() const {
        if (!(alpha >= 0.0) || !std::isfinite(alpha))
            throw Error(ErrorCode::invalid_config, "ramp alpha must be finite and >= 0");
        if (r1 < 1 || r2 < 1)
            throw Error(ErrorCode::invalid_config, "ramp periods must be >= 1");
    }

    bool active() const noexcept { return enabled && alpha > 0.0; }
};

namespace detail {
inline std::size_t clamp_col(std::ptrdiff_t j, std::size_t width) noexcept {
    if (j < 0) return 0;
    if (static_cast<std::size_t>(j) >= width) return width - 1;
    return static_cast<std::size_t>(j);
}
} // namespace detail

/// Energy created between the left and right neighbours of (i, j) once it is
/// removed: |I(i, j+1) - I(i, j-1)|. Out-of-range columns are clamped.
inline double plus_lr(const GrayField& gray, std::size_t i, std::size_t j) {
    const auto w = gray.width();
    const auto sj = static_cast<std::ptrdiff_t>(j);
    return std::abs(gray(i, detail::clamp_col(sj + 1, w)) - gray(i, detail::clamp_col(sj - 1, w)));
}

/// |I(i-1, j) - I(i, j-1)|; zero on the first row.
inline double plus_lu(const GrayField& gray, std::size_t i, std::size_t j) {
    if (i == 0) return 0.0;
    const auto w = gray.width();
    return std::abs(gray(i - 1, j) - gray(i, detail::clamp_col(static_cast<std::ptrdiff_t>(j) - 1, w)));
}

/// |I(i+1, j) - I(i, j-1)|; zero on the last row.
inline double minus_lu(const GrayField& gray, std::size_t i, std::size_t j) {
    if (i + 1 >= gray.height()) return 0.0;
    const auto w = gray.width();
    return std::abs(gray(i + 1, j) - gray(i, detail::clamp_col(static_cast<std::ptrdiff_t>(j) - 1, w)));
}

inline double ramp_energy(const RampParams& params, std::size_t i, std::size_t j) noexcept {
    if (!params.enabled || i % params.r2 != 0) return 0.0;
    return params.alpha * static_cast<double>(j % params.r1);
}

/// Per-pixel costs in DP indexing for a seam passing through (i, j):
///   cost_lr        paid on every step into (i, j)
///   cost_lu_left   extra when the predecessor is (i-1, j-1)
///   cost_lu_right  extra when the predecessor is (i-1, j+1)
///   node_extra     ramp energy of (i, j)
struct TransitionCosts {
    Plane<double> cost_lr;
    Plane<double> cost_lu_left;
    Plane<double> cost_lu_right;
    Plane<double> node_extra;

    std::size_t width() const noexcept { return cost_lr.width(); }
    std::size_t height() const noexcept { return cost_lr.height(); }
};

/// Identity column mapping: the ramp is laid over the grid being carved.
struct CurrentColumns {
    std::size_t operator()(std::size_t, std::size_t j) const noexcept { return j; }
};

/// Builds the cost fields. `ramp_column(i, j)` chooses which column index the
/// ramp sees for pixel (i, j); the engine passes original-image columns.
template <typename RampColumn = CurrentColumns>
TransitionCosts build_transition_costs(const GrayField& gray, const RampParams& params,
                                       RampColumn&& ramp_column = {}) {
    const std::size_t w = gray.width();
    const std::size_t h = gray.height();
    if (w < kMinExtent || h < kMinExtent)
        throw Error(ErrorCode::too_small, "cost fields need at least 3x3 pixels");
    params.validate();

    TransitionCosts costs{Plane<double>(w, h), Plane<double>(w, h), Plane<double>(w, h), Plane<double>(w, h)};
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = 0; j < w; ++j) {
            costs.cost_lr(i, j) = plus_lr(gray, i, j);
            costs.cost_lu_left(i, j) = plus_lu(gray, i, j);
            // The graph's -LU arc on (i-1, j+1), shifted onto the DP node it
            // leads into: |I(i, j+1) - I(i-1, j)|.
            costs.cost_lu_right(i, j) = i == 0 ? 0.0 : minus_lu(gray, i - 1, detail::clamp_col(
                                                                                 static_cast<std::ptrdiff_t>(j) + 1, w));
        }
        if (params.active() && i % params.r2 == 0)
            for (std::size_t j = 0; j < w; ++j)
                costs.node_extra(i, j) = ramp_energy(params, i, ramp_column(i, j));
    }
    return costs;
}

} // namespace seamcarve

#endif // SEAMCARVE_ENERGY_HPP
