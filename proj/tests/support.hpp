#ifndef SEAMCARVE_TESTS_SUPPORT_HPP
#define SEAMCARVE_TESTS_SUPPORT_HPP

// Generators and independent reference implementations shared by the unit
// and acceptance suites. Nothing here calls the DP engine or compute_scm.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "seamcarve/energy.hpp"
#include "seamcarve/raster.hpp"
#include "seamcarve/seam.hpp"

namespace seamcarve::testing {

#ifndef SEAMCARVE_TEST_DATA_DIR
#define SEAMCARVE_TEST_DATA_DIR "tests/data"
#endif

inline std::filesystem::path data_dir() { return SEAMCARVE_TEST_DATA_DIR; }
inline std::filesystem::path corpus_dir() { return data_dir() / "corpus"; }

inline GrayField random_gray(std::size_t width, std::size_t height, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(width * height);
    for (double& x : v) x = u(rng);
    return GrayField(width, height, std::move(v));
}

inline RasterImage random_image(std::size_t width, std::size_t height, std::size_t channels, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(width * height * channels);
    for (double& x : v) x = u(rng);
    return RasterImage(width, height, channels, std::move(v));
}

/// Smooth blobs plus a few hard edges; closer to a photograph than white
/// noise, so seams have somewhere cheap to go.
inline RasterImage synthetic_scene(std::size_t width, std::size_t height, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    struct Blob { double x, y, r, c[3]; };
    std::vector<Blob> blobs(12);
    for (auto& b : blobs) {
        b = {u(rng) * width, u(rng) * height, (0.05 + 0.2 * u(rng)) * width, {u(rng), u(rng), u(rng)}};
    }
    std::vector<double> data(width * height * 3);
    for (std::size_t r = 0; r < height; ++r)
        for (std::size_t c = 0; c < width; ++c) {
            double px[3] = {0.3, 0.4, 0.5};
            for (const auto& b : blobs) {
                double d2 = (c - b.x) * (c - b.x) + (r - b.y) * (r - b.y);
                double wgt = std::exp(-d2 / (2 * b.r * b.r));
                for (int k = 0; k < 3; ++k) px[k] = px[k] * (1 - wgt) + b.c[k] * wgt;
            }
            if ((c / 97 + r / 61) % 5 == 0)
                for (double& p : px) p = 1.0 - p;
            for (int k = 0; k < 3; ++k) data[(r * width + c) * 3 + k] = std::clamp(px[k], 0.0, 1.0);
        }
    return RasterImage(width, height, 3, std::move(data));
}

/// Cost of a seam scored straight from the per-pixel energy terms, in the
/// same summation order the DP uses (row cost first, then predecessor total
/// plus the transition term).
inline double oracle_seam_cost(const GrayField& gray, const RampParams& params, const std::vector<std::size_t>& cols) {
    double total = ramp_energy(params, 0, cols[0]) + plus_lr(gray, 0, cols[0]);
    for (std::size_t i = 1; i < cols.size(); ++i) {
        const std::size_t c = cols[i], p = cols[i - 1];
        double step = 0.0;
        if (c == p + 1) step = plus_lu(gray, i, c);
        else if (p == c + 1) step = minus_lu(gray, i - 1, p);
        total = (ramp_energy(params, i, c) + plus_lr(gray, i, c)) + (total + step);
    }
    return total;
}

struct OracleResult {
    double best = std::numeric_limits<double>::infinity();
    std::size_t seams_enumerated = 0;
};

/// Exhaustive minimum over every 8-connected monotone vertical seam.
inline OracleResult brute_force_min_seam(const GrayField& gray, const RampParams& params) {
    OracleResult out;
    const std::size_t w = gray.width(), h = gray.height();
    std::vector<std::size_t> cols(h);
    std::function<void(std::size_t)> walk = [&](std::size_t row) {
        if (row == h) {
            ++out.seams_enumerated;
            out.best = std::min(out.best, oracle_seam_cost(gray, params, cols));
            return;
        }
        for (std::size_t c = 0; c < w; ++c) {
            if (row > 0) {
                const std::size_t p = cols[row - 1];
                if ((c > p ? c - p : p - c) > 1) continue;
            }
            cols[row] = c;
            walk(row + 1);
        }
    };
    walk(0);
    return out;
}

/// Builds a complete SeamTrace from a per-row removal mask. Each row must
/// mark the same number of pixels.
inline SeamTrace trace_from_mask(const std::vector<std::vector<bool>>& mask) {
    const std::size_t h = mask.size(), w = mask.at(0).size();
    SeamTrace t = SeamTrace::start(w, h);
    t.seams = static_cast<std::size_t>(std::count(mask[0].begin(), mask[0].end(), true));
    for (std::size_t r = 0; r < h; ++r) {
        t.col_map[r].clear();
        for (std::size_t c = 0; c < w; ++c) {
            if (mask[r][c]) {
                t.removed(r, c) = 1;
                t.removal_order(r, c) = 0;
            } else {
                t.col_map[r].push_back(c);
            }
        }
    }
    return t;
}

inline std::vector<std::vector<bool>> random_mask(std::size_t w, std::size_t h, std::size_t k, std::mt19937& rng) {
    std::vector<std::vector<bool>> mask(h, std::vector<bool>(w, false));
    std::vector<std::size_t> idx(w);
    for (auto& row : mask) {
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::shuffle(idx.begin(), idx.end(), rng);
        for (std::size_t i = 0; i < k; ++i) row[idx[i]] = true;
    }
    return mask;
}

/// Textbook double loop over rows and run starts.
inline double naive_scm(const std::vector<std::vector<bool>>& mask) {
    const std::size_t h = mask.size(), w = mask[0].size();
    std::uint64_t sum_sq = 0;
    std::size_t k = 0;
    for (std::size_t c = 0; c < w; ++c) k += mask[0][c] ? 1 : 0;
    for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t c = 0; c < w; ++c) {
            if (!mask[r][c] || (c > 0 && mask[r][c - 1])) continue;
            std::uint64_t len = 0;
            while (c + len < w && mask[r][c + len]) ++len;
            sum_sq += len * len;
        }
    }
    return std::sqrt(static_cast<double>(sum_sq) / (static_cast<double>(h) * static_cast<double>(k)));
}

inline std::vector<std::vector<bool>> mask_of(const SeamTrace& trace) {
    std::vector<std::vector<bool>> mask(trace.orig_height, std::vector<bool>(trace.orig_width));
    for (std::size_t r = 0; r < trace.orig_height; ++r)
        for (std::size_t c = 0; c < trace.orig_width; ++c) mask[r][c] = trace.removed(r, c) != 0;
    return mask;
}

/// Postconditions every retarget run must satisfy: dimensions, trace
/// conservation, and pixel provenance through col_map.
inline bool retarget_postconditions_hold(const RasterImage& input, const RetargetResult& result,
                                         std::size_t target_width) {
    if (result.image.width() != target_width || result.image.height() != input.height() ||
        result.image.channels() != input.channels())
        return false;
    if (result.trace.seams != input.width() - target_width) return false;
    if (!trace_is_conserved(result.trace)) return false;
    for (std::size_t r = 0; r < result.image.height(); ++r)
        for (std::size_t c = 0; c < result.image.width(); ++c) {
            const std::size_t orig = result.trace.col_map[r][c];
            for (std::size_t ch = 0; ch < input.channels(); ++ch)
                if (result.image.at(r, c, ch) != input.at(r, orig, ch)) return false;
        }
    return true;
}

} // namespace seamcarve::testing

#endif // SEAMCARVE_TESTS_SUPPORT_HPP
