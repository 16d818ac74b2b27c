#ifndef SEAMCARVE_HARNESS_HPP
#define SEAMCARVE_HARNESS_HPP

// Command implementations behind the seamcarve CLI. They take an explicit
// configuration and output streams so tests can drive them directly.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "seamcarve/codec.hpp"
#include "seamcarve/error.hpp"
#include "seamcarve/metrics.hpp"
#include "seamcarve/raster.hpp"
#include "seamcarve/seam.hpp"

namespace seamcarve {

namespace fs = std::filesystem;

struct RunConfig {
    std::vector<fs::path> inputs;
    fs::path out_dir = ".";
    std::optional<double> ratio;
    std::optional<std::size_t> target_width;
    std::optional<std::size_t> target_height;
    RampParams ramp;
    Axis axis = Axis::width;
    bool emit_overlay = false;
    bool emit_csv = false;
    fs::path csv_path;
    std::size_t jobs = 1;
    CarveOptions carve;

    void validate() const {
        const int set = int(ratio.has_value()) + int(target_width.has_value()) + int(target_height.has_value());
        if (set != 1)
            throw Error(ErrorCode::invalid_config, "exactly one of ratio, target width, target height must be set");
        if (ratio) {
            const double r = *ratio;
            if (!(r > 0.0 && r < 1.0) && !(r > 1.0 && r <= 2.0))
                throw Error(ErrorCode::invalid_config, "ratio must be in (0,1) to reduce or (1,2] to enlarge");
        }
        if (target_width && axis != Axis::width)
            throw Error(ErrorCode::invalid_config, "a target width implies the width axis");
        if (target_height && axis != Axis::height)
            throw Error(ErrorCode::invalid_config, "a target height implies the height axis");
        if (jobs == 0) throw Error(ErrorCode::invalid_config, "jobs must be >= 1");
        ramp.validate();
    }

    std::size_t extent_of(const RasterImage& image) const {
        return axis == Axis::width ? image.width() : image.height();
    }

    std::size_t target_for(const RasterImage& image) const {
        if (target_width) return *target_width;
        if (target_height) return *target_height;
        return static_cast<std::size_t>(std::lround(static_cast<double>(extent_of(image)) * *ratio));
    }

    bool reduces(const RasterImage& image) const { return target_for(image) < extent_of(image); }
};

struct BenchRow {
    std::string id;
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t target = 0;
    double scm_baseline = 0.0;
    double scm_proposed = 0.0;
    double t_baseline_s = 0.0;
    double t_proposed_s = 0.0;
};

inline constexpr const char* kBenchCsvHeader = "id,W,H,Wprime,scm_baseline,scm_proposed,t_baseline_s,t_proposed_s";

namespace detail {

inline RetargetResult carve(const RasterImage& image, const RunConfig& config, const RampParams& ramp) {
    const std::size_t target = config.target_for(image);
    return config.axis == Axis::width ? retarget_width(image, target, ramp, config.carve)
                                      : retarget_height(image, target, ramp, config.carve);
}

inline RasterImage widen(const RasterImage& image, const RunConfig& config) {
    const std::size_t target = config.target_for(image);
    return config.axis == Axis::width ? enlarge_width(image, target, config.ramp, config.carve)
                                      : enlarge_height(image, target, config.ramp, config.carve);
}

inline std::string format_scm(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

inline RampParams proposed_params(const RunConfig& config) {
    RampParams p = config.ramp;
    p.enabled = true;
    return p;
}

inline void ensure_out_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::io_failed, "cannot create " + dir.string() + ": " + ec.message());
}

template <typename F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace detail

/// Retargets each input and writes `<stem>_retargeted.png` (plus
/// `<stem>_overlay.png` when requested). For reductions the SCM of the run is
/// printed to `out`.
inline int cmd_retarget(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        config.validate();
        if (config.inputs.empty()) throw Error(ErrorCode::invalid_config, "no input images");
        detail::ensure_out_dir(config.out_dir);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    int status = 0;
    for (const auto& input : config.inputs) {
        try {
            std::vector<std::string> warnings;
            RasterImage image = load_image(input, &warnings);
            for (const auto& w : warnings) err << "warning: " << input.string() << ": " << w << '\n';
            const std::string stem = input.stem().string();

            if (config.reduces(image)) {
                RetargetResult result = detail::carve(image, config, config.ramp);
                save_png(config.out_dir / (stem + "_retargeted.png"), result.image);
                if (config.emit_overlay)
                    save_png(config.out_dir / (stem + "_overlay.png"), seam_overlay(image, result.trace));
                ScmReport scm = compute_scm(result.trace, config.target_for(image));
                out << stem << " scm=" << detail::format_scm(scm.scm) << '\n';
            } else {
                if (config.emit_overlay)
                    throw Error(ErrorCode::invalid_config, "seam overlays need a reduction");
                save_png(config.out_dir / (stem + "_retargeted.png"), detail::widen(image, config));
            }
        } catch (const std::exception& e) {
            err << "error: " << input.string() << ": " << e.what() << '\n';
            status = 1;
        }
    }
    return status;
}

/// Runs the baseline (no ramp) and proposed (ramp) carvers on each input and
/// writes both results and both overlays.
inline int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        config.validate();
        if (config.inputs.empty()) throw Error(ErrorCode::invalid_config, "no input images");
        detail::ensure_out_dir(config.out_dir);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    int status = 0;
    for (const auto& input : config.inputs) {
        try {
            std::vector<std::string> warnings;
            RasterImage image = load_image(input, &warnings);
            for (const auto& w : warnings) err << "warning: " << input.string() << ": " << w << '\n';
            if (!config.reduces(image))
                throw Error(ErrorCode::invalid_config, "compare needs a reduction (SCM is undefined otherwise)");
            const std::string stem = input.stem().string();
            const std::size_t target = config.target_for(image);

            RetargetResult base = detail::carve(image, config, RampParams::disabled());
            RetargetResult prop = detail::carve(image, config, detail::proposed_params(config));
            save_png(config.out_dir / (stem + "_baseline.png"), base.image);
            save_png(config.out_dir / (stem + "_proposed.png"), prop.image);
            save_png(config.out_dir / (stem + "_baseline_overlay.png"), seam_overlay(image, base.trace));
            save_png(config.out_dir / (stem + "_proposed_overlay.png"), seam_overlay(image, prop.trace));
            out << stem << " baseline scm=" << detail::format_scm(compute_scm(base.trace, target).scm) << '\n';
            out << stem << " proposed scm=" << detail::format_scm(compute_scm(prop.trace, target).scm) << '\n';
        } catch (const std::exception& e) {
            err << "error: " << input.string() << ": " << e.what() << '\n';
            status = 1;
        }
    }
    return status;
}

/// Baseline vs. proposed over every decodable file directly inside
/// `corpus_dir`. Rows come back sorted by file name; undecodable files are
/// reported on `err` and skipped.
inline std::vector<BenchRow> run_bench(const RunConfig& config, const fs::path& corpus_dir, std::ostream& err) {
    config.validate();
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(corpus_dir, ec))
        if (entry.is_regular_file()) files.push_back(entry.path());
    if (ec) throw Error(ErrorCode::io_failed, "cannot list " + corpus_dir.string() + ": " + ec.message());
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    std::vector<std::optional<BenchRow>> rows(files.size());
    std::vector<std::string> problems(files.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
            try {
                RasterImage image = load_image(files[i]);
                if (!config.reduces(image))
                    throw Error(ErrorCode::invalid_config, "bench needs a reduction (SCM is undefined otherwise)");
                BenchRow row;
                row.id = files[i].filename().string();
                row.width = image.width();
                row.height = image.height();
                row.target = config.target_for(image);
                RetargetResult base, prop;
                row.t_baseline_s = detail::timed([&] { base = detail::carve(image, config, RampParams::disabled()); });
                row.t_proposed_s =
                    detail::timed([&] { prop = detail::carve(image, config, detail::proposed_params(config)); });
                row.scm_baseline = compute_scm(base.trace, row.target).scm;
                row.scm_proposed = compute_scm(prop.trace, row.target).scm;
                rows[i] = std::move(row);
            } catch (const std::exception& e) {
                problems[i] = e.what();
            }
        }
    };

    const std::size_t n_threads = std::min(config.jobs, std::max<std::size_t>(files.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<BenchRow> result;
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (rows[i])
            result.push_back(std::move(*rows[i]));
        else
            err << "warning: skipping " << files[i].filename().string() << ": " << problems[i] << '\n';
    }
    return result;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream csv;
    csv << kBenchCsvHeader << "\r\n";
    char times[64];
    for (const auto& r : rows) {
        std::snprintf(times, sizeof times, "%.4f,%.4f", r.t_baseline_s, r.t_proposed_s);
        csv << detail::csv_field(r.id) << ',' << r.width << ',' << r.height << ',' << r.target << ','
            << detail::format_scm(r.scm_baseline) << ',' << detail::format_scm(r.scm_proposed) << ',' << times
            << "\r\n";
    }
    return csv.str();
}

/// Writes the CSV (to `csv_path`, or `<out>/bench.csv`) and prints the mean
/// SCM of both methods and how often the ramp wins.
inline int cmd_bench(const RunConfig& config, const fs::path& corpus_dir, std::ostream& out, std::ostream& err) {
    std::vector<BenchRow> rows;
    fs::path csv_path;
    try {
        rows = run_bench(config, corpus_dir, err);
        csv_path = config.csv_path.empty() ? config.out_dir / "bench.csv" : config.csv_path;
        if (rows.empty()) {
            err << "error: no images processed in " << corpus_dir.string() << '\n';
            return 1;
        }
        if (csv_path.has_parent_path()) detail::ensure_out_dir(csv_path.parent_path());
        std::string csv = bench_csv(rows);
        write_file(csv_path, std::span(reinterpret_cast<const std::uint8_t*>(csv.data()), csv.size()));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    double sum_b = 0.0, sum_p = 0.0;
    std::size_t wins = 0;
    for (const auto& r : rows) {
        sum_b += r.scm_baseline;
        sum_p += r.scm_proposed;
        wins += r.scm_proposed < r.scm_baseline ? 1 : 0;
    }
    const double n = static_cast<double>(rows.size());
    out << "images: " << rows.size() << '\n';
    out << "mean scm_baseline=" << detail::format_scm(sum_b / n) << '\n';
    out << "mean scm_proposed=" << detail::format_scm(sum_p / n) << '\n';
    out << "proposed wins: " << wins << '/' << rows.size() << " (" << detail::format_scm(wins / n) << ")\n";
    out << "csv: " << csv_path.string() << '\n';
    return 0;
}

} // namespace seamcarve

#endif // SEAMCARVE_HARNESS_HPP
