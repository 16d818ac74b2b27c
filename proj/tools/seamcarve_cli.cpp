// seamcarve: retarget images with ramp-dispersed forward-energy seam carving.
//
//   seamcarve retarget photo.jpg --ratio 0.75 --overlay --out results/
//   seamcarve compare photo.jpg --out results/
//   seamcarve bench corpus/ --csv results/bench.csv --jobs 4

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seamcarve/harness.hpp"

namespace {

struct CliOptions {
    std::vector<std::string> inputs;
    std::string corpus;
    std::string out_dir = ".";
    double ratio = 0.75;
    std::size_t width = 0;
    std::size_t height = 0;
    double alpha = 0.0625;
    std::size_t r1 = 4;
    std::size_t r2 = 5;
    bool no_ramp = false;
    bool overlay = false;
    std::string csv;
    std::size_t jobs = 1;
    std::string axis = "width";
    std::string ramp_frame = "original";
};

void add_common(CLI::App* cmd, CliOptions& o, bool with_overlay) {
    auto* ratio = cmd->add_option("--ratio", o.ratio, "Target size as a fraction of the input (default 0.75)");
    auto* width = cmd->add_option("--width", o.width, "Absolute target width in pixels");
    auto* height = cmd->add_option("--height", o.height, "Absolute target height in pixels");
    ratio->excludes(width)->excludes(height);
    width->excludes(height);
    cmd->add_option("--axis", o.axis, "Axis the ratio applies to")->check(CLI::IsMember({"width", "height"}));
    cmd->add_option("--alpha", o.alpha, "Ramp magnitude")->check(CLI::NonNegativeNumber);
    cmd->add_option("--r1", o.r1, "Ramp period along columns")->check(CLI::PositiveNumber);
    cmd->add_option("--r2", o.r2, "Row spacing of ramp rows")->check(CLI::PositiveNumber);
    cmd->add_option("--ramp-frame", o.ramp_frame, "Column frame the ramp is laid on")
        ->check(CLI::IsMember({"original", "current"}));
    cmd->add_option("--out", o.out_dir, "Output directory");
    if (with_overlay) {
        cmd->add_flag("--no-ramp", o.no_ramp, "Plain forward-energy carving");
        cmd->add_flag("--overlay", o.overlay, "Also write the removed seams painted over the input");
    }
}

seamcarve::RunConfig to_config(const CLI::App& cmd, const CliOptions& o) {
    seamcarve::RunConfig c;
    for (const auto& in : o.inputs) c.inputs.emplace_back(in);
    c.out_dir = o.out_dir;
    c.axis = o.axis == "height" ? seamcarve::Axis::height : seamcarve::Axis::width;
    if (cmd.count("--width") > 0) {
        c.target_width = o.width;
        c.axis = seamcarve::Axis::width;
    } else if (cmd.count("--height") > 0) {
        c.target_height = o.height;
        c.axis = seamcarve::Axis::height;
    } else {
        c.ratio = o.ratio;
    }
    c.ramp = seamcarve::RampParams{o.alpha, o.r1, o.r2, !o.no_ramp};
    c.emit_overlay = o.overlay;
    c.emit_csv = !o.csv.empty();
    c.csv_path = o.csv;
    c.jobs = o.jobs;
    c.carve.ramp_frame = o.ramp_frame == "current" ? seamcarve::RampFrame::current : seamcarve::RampFrame::original;
    return c;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Content-aware image retargeting with seam-dispersing ramp energy"};
    app.require_subcommand(1);
    CliOptions o;

    auto* retarget = app.add_subcommand("retarget", "Retarget images and report their SCM");
    retarget->add_option("inputs", o.inputs, "Input PNG/JPEG files")->required()->check(CLI::ExistingFile);
    add_common(retarget, o, true);

    auto* compare = app.add_subcommand("compare", "Run baseline and ramp carving side by side");
    compare->add_option("inputs", o.inputs, "Input PNG/JPEG files")->required()->check(CLI::ExistingFile);
    add_common(compare, o, false);

    auto* bench = app.add_subcommand("bench", "Benchmark baseline vs. ramp carving over a corpus directory");
    bench->add_option("corpus", o.corpus, "Directory of images")->required()->check(CLI::ExistingDirectory);
    add_common(bench, o, false);
    bench->add_option("--csv", o.csv, "CSV output path (default <out>/bench.csv)");
    bench->add_option("--jobs", o.jobs, "Images processed concurrently")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    if (retarget->parsed()) return seamcarve::cmd_retarget(to_config(*retarget, o), std::cout, std::cerr);
    if (compare->parsed()) return seamcarve::cmd_compare(to_config(*compare, o), std::cout, std::cerr);
    return seamcarve::cmd_bench(to_config(*bench, o), o.corpus, std::cout, std::cerr);
}
