// sharpgan-kit: dataset generation, map encoding, sharpness-loss evaluation,
// and image-quality / segmentation scoring from the command line.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sharpgan/image.hpp"
#include "sharpgan/iqa.hpp"
#include "sharpgan/maps.hpp"
#include "sharpgan/maskgen.hpp"
#include "sharpgan/png_io.hpp"
#include "sharpgan/raw_io.hpp"
#include "sharpgan/report.hpp"
#include "sharpgan/segeval.hpp"
#include "sharpgan/sharpness.hpp"

namespace fs = std::filesystem;
using namespace sharpgan;

namespace {

std::vector<fs::path> list_pngs(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".png")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

// Pair discovery by identical filename stem across directories.
std::vector<std::pair<fs::path, fs::path>> pair_by_stem(
    const fs::path& left_dir, const fs::path& right_dir, Report& report) {
    std::map<std::string, fs::path> right;
    for (const auto& p : list_pngs(right_dir)) right[p.stem().string()] = p;

    std::vector<std::pair<fs::path, fs::path>> pairs;
    for (const auto& p : list_pngs(left_dir)) {
        auto it = right.find(p.stem().string());
        if (it == right.end()) {
            ReportRow row;
            row.name = p.stem().string();
            row.skipped = true;
            row.note = "no counterpart";
            report.rows.push_back(std::move(row));
            ++report.warnings;
        } else {
            pairs.emplace_back(p, it->second);
        }
    }
    if (pairs.empty() && report.warnings == 0)
        throw EmptyBatch("no image pairs found");
    return pairs;
}

void write_report(const Report& report, const fs::path& out, const std::string& format) {
    if (format == "json")
        report.write_json(out);
    else
        report.write_csv(out);
}

struct MaskGenCli {
    MaskGenConfig cfg;
    uint64_t seed = 0;
    int count = 1;
    int threads = 1;
    std::string policy = "disjoint";
    fs::path out_dir;
};

int run_maskgen(MaskGenCli& opt) {
    if (opt.policy == "disjoint")
        opt.cfg.overlap_policy = OverlapPolicy::kDisjoint;
    else if (opt.policy == "touching")
        opt.cfg.overlap_policy = OverlapPolicy::kTouching;
    else if (opt.policy == "overlapping")
        opt.cfg.overlap_policy = OverlapPolicy::kOverlapping;
    else
        throw ConfigError("unknown overlap policy: " + opt.policy);
    validate_config(opt.cfg);

    fs::create_directories(opt.out_dir);

    auto generate_range = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            const InstanceMap map = synthesize_layout(opt.cfg, opt.seed + i);
            char name[32];
            std::snprintf(name, sizeof(name), "mask_%06d.png", i);
            write_instance_png(opt.out_dir / name, map);
        }
    };
    const int threads = std::clamp(opt.threads, 1, opt.count > 0 ? opt.count : 1);
    if (threads <= 1 || opt.count <= 1) {
        generate_range(0, opt.count);
    } else {
        std::vector<std::thread> workers;
        const int chunk = (opt.count + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int begin = t * chunk;
            const int end = std::min(opt.count, begin + chunk);
            if (begin < end) workers.emplace_back(generate_range, begin, end);
        }
        for (auto& w : workers) w.join();
    }

    nlohmann::json manifest;
    manifest["version"] = kToolVersion;
    manifest["seed"] = opt.seed;
    manifest["count"] = opt.count;
    manifest["seeds"] = nlohmann::json::array();
    for (int i = 0; i < opt.count; ++i) manifest["seeds"].push_back(opt.seed + i);
    manifest["config"] = {
        {"canvas_width", opt.cfg.canvas_width},
        {"canvas_height", opt.cfg.canvas_height},
        {"nucleus_count_min", opt.cfg.nucleus_count_range.first},
        {"nucleus_count_max", opt.cfg.nucleus_count_range.second},
        {"radius_min", opt.cfg.radius_range.first},
        {"radius_max", opt.cfg.radius_range.second},
        {"irregularity", opt.cfg.irregularity},
        {"spikiness", opt.cfg.spikiness},
        {"vertex_count_min", opt.cfg.vertex_count_range.first},
        {"vertex_count_max", opt.cfg.vertex_count_range.second},
        {"overlap_policy", opt.policy},
        {"max_placement_attempts", opt.cfg.max_placement_attempts},
    };
    // Hash only what determines the output; worker count never changes bytes.
    manifest["config_hash"] = config_hash(manifest.dump());
    std::ofstream out(opt.out_dir / "manifest.json");
    out << manifest.dump(2) << "\n";
    if (!out) throw IoError("cannot write manifest.json");
    return 0;
}

int run_maps(const fs::path& in_dir, const std::string& mode_name, bool normalize,
             const fs::path& out_dir) {
    DistanceMode mode;
    if (mode_name == "centroid")
        mode = DistanceMode::kCentroid;
    else if (mode_name == "centroid_inverted")
        mode = DistanceMode::kCentroidInverted;
    else
        throw ConfigError("unknown distance mode: " + mode_name);

    fs::create_directories(out_dir);
    const auto inputs = list_pngs(in_dir);
    if (inputs.empty()) {
        std::cerr << "warning: no input PNGs in " << in_dir << "\n";
        return 0;
    }
    for (const auto& path : inputs) {
        const InstanceMap m = read_instance_png(path);
        const std::string stem = path.stem().string();
        write_sgdm(out_dir / (stem + "_dist.sgdm"), distance_map(m, mode, normalize));
        write_contour_png(out_dir / (stem + "_contour.png"), contour_map(m));
        write_mask_png(out_dir / (stem + "_mask.png"), binary_mask(m));
    }
    return 0;
}

int run_score_iqa(const fs::path& ref_dir, const fs::path& test_dir,
                  const std::vector<std::string>& metrics, const fs::path& out,
                  const std::string& format, const std::string& hash) {
    Report report;
    report.metrics = metrics;
    report.config_hash = hash;
    for (const auto& [ref_path, test_path] : pair_by_stem(ref_dir, test_dir, report)) {
        const GrayImage ref = read_gray_png(ref_path);
        const GrayImage test = read_gray_png(test_path);
        ReportRow row;
        row.name = ref_path.stem().string();
        for (const auto& metric : metrics) {
            if (metric == "ssim")
                row.values["ssim"] = ssim(ref, test);
            else if (metric == "fsim")
                row.values["fsim"] = fsim(ref, test);
            else if (metric == "gmsd")
                row.values["gmsd"] = gmsd(ref, test);
            else if (metric == "nrmse")
                row.values["nrmse"] = nrmse(ref, test);
            else
                throw ConfigError("unknown metric: " + metric);
        }
        report.rows.push_back(std::move(row));
    }
    write_report(report, out, format);
    return 0;
}

int run_score_seg(const fs::path& gt_dir, const fs::path& pred_dir,
                  const fs::path& out, const std::string& format,
                  const std::string& hash) {
    Report report;
    report.metrics = {"dq", "sq", "pq", "aji"};
    report.config_hash = hash;
    for (const auto& [gt_path, pred_path] : pair_by_stem(gt_dir, pred_dir, report)) {
        const InstanceMap gt = read_instance_png(gt_path);
        const InstanceMap pred = read_instance_png(pred_path);
        const SegScores s = seg_scores(gt, pred);
        ReportRow row;
        row.name = gt_path.stem().string();
        row.values = {{"dq", s.dq}, {"sq", s.sq}, {"pq", s.pq}, {"aji", s.aji}};
        report.rows.push_back(std::move(row));
    }
    write_report(report, out, format);
    return 0;
}

int run_sharpness(const fs::path& image_path, const fs::path& contour_path,
                  const fs::path& mask_path, double lambda, bool emit_grad,
                  const fs::path& out_prefix) {
    const GrayImage g = read_gray_png(image_path);

    ContourMap contour;
    if (!mask_path.empty()) {
        contour = contour_map(read_instance_png(mask_path));
    } else {
        const GrayImage c = read_gray_png(contour_path);
        contour = ContourMap(c.width, c.height);
        for (size_t i = 0; i < c.data.size(); ++i)
            contour.values[i] = c.data[i] > 0.0 ? 1 : 0;
    }

    SharpnessConfig cfg;
    cfg.lambda = lambda;
    const SharpnessResult result = sharpness(contour, g, cfg);
    std::printf("%.17g\n", result.loss);

    if (emit_grad) {
        const fs::path prefix = out_prefix.empty() ? image_path.stem() : out_prefix;
        write_sgdm(fs::path(prefix.string() + "_smap.sgdm"), result.per_pixel);
        write_sgdm(fs::path(prefix.string() + "_grad.sgdm"),
                   sharpness_grad(contour, g, cfg));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp-GAN toolkit: nucleus mask synthesis, map encoding, "
                 "sharpness loss, and evaluation metrics"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Config file (INI-style, sections per subcommand)");

    // maskgen
    MaskGenCli mg;
    auto* maskgen_cmd = app.add_subcommand("maskgen", "Generate instance-map layouts");
    maskgen_cmd->add_option("--seed", mg.seed, "Base seed; layout i uses seed+i")->required();
    maskgen_cmd->add_option("--count", mg.count, "Number of layouts");
    maskgen_cmd->add_option("--out", mg.out_dir, "Output directory")->required();
    maskgen_cmd->add_option("--threads", mg.threads, "Worker threads");
    maskgen_cmd->add_option("--width", mg.cfg.canvas_width, "Canvas width");
    maskgen_cmd->add_option("--height", mg.cfg.canvas_height, "Canvas height");
    maskgen_cmd->add_option("--count-min", mg.cfg.nucleus_count_range.first, "Min nuclei");
    maskgen_cmd->add_option("--count-max", mg.cfg.nucleus_count_range.second, "Max nuclei");
    maskgen_cmd->add_option("--radius-min", mg.cfg.radius_range.first, "Min mean radius");
    maskgen_cmd->add_option("--radius-max", mg.cfg.radius_range.second, "Max mean radius");
    maskgen_cmd->add_option("--irregularity", mg.cfg.irregularity, "Angular jitter [0,1]");
    maskgen_cmd->add_option("--spikiness", mg.cfg.spikiness, "Radial jitter [0,1]");
    maskgen_cmd->add_option("--vertices-min", mg.cfg.vertex_count_range.first, "Min vertices");
    maskgen_cmd->add_option("--vertices-max", mg.cfg.vertex_count_range.second, "Max vertices");
    maskgen_cmd->add_option("--policy", mg.policy, "disjoint|touching|overlapping");
    maskgen_cmd->add_option("--max-attempts", mg.cfg.max_placement_attempts,
                            "Placement attempts per nucleus");

    // maps
    fs::path maps_in, maps_out;
    std::string maps_mode = "centroid";
    bool maps_normalize = false;
    auto* maps_cmd = app.add_subcommand("maps", "Encode distance/contour/binary maps");
    maps_cmd->add_option("--in", maps_in, "Directory of instance-map PNGs")->required();
    maps_cmd->add_option("--out", maps_out, "Output directory")->required();
    maps_cmd->add_option("--mode", maps_mode, "centroid|centroid_inverted");
    maps_cmd->add_flag("--normalize", maps_normalize, "Per-nucleus [0,1] normalization");

    // score-iqa
    fs::path iqa_ref, iqa_test, iqa_out = "iqa_report.csv";
    std::string iqa_format = "csv";
    std::vector<std::string> iqa_metrics = {"ssim", "fsim", "gmsd", "nrmse"};
    auto* iqa_cmd = app.add_subcommand("score-iqa", "Full-reference image quality scoring");
    iqa_cmd->add_option("--ref", iqa_ref, "Reference image directory")->required();
    iqa_cmd->add_option("--test", iqa_test, "Test image directory")->required();
    iqa_cmd->add_option("--out", iqa_out, "Report path");
    iqa_cmd->add_option("--format", iqa_format, "csv|json");
    iqa_cmd->add_option("--metrics", iqa_metrics, "Subset of ssim,fsim,gmsd,nrmse")
        ->delimiter(',');

    // score-seg
    fs::path seg_gt, seg_pred, seg_out = "seg_report.csv";
    std::string seg_format = "csv";
    auto* seg_cmd = app.add_subcommand("score-seg", "Instance segmentation scoring");
    seg_cmd->add_option("--gt", seg_gt, "Ground-truth instance-map directory")->required();
    seg_cmd->add_option("--pred", seg_pred, "Predicted instance-map directory")->required();
    seg_cmd->add_option("--out", seg_out, "Report path");
    seg_cmd->add_option("--format", seg_format, "csv|json");

    // sharpness
    fs::path sh_image, sh_contour, sh_mask, sh_out;
    double sh_lambda = 0.3;
    bool sh_emit_grad = false;
    auto* sh_cmd = app.add_subcommand("sharpness", "Evaluate the sharpness loss");
    sh_cmd->add_option("--image", sh_image, "Gray or RGB PNG")->required();
    auto* contour_opt = sh_cmd->add_option("--contour", sh_contour, "Binary contour PNG");
    auto* mask_opt = sh_cmd->add_option("--mask", sh_mask, "Instance-map PNG (contour derived)");
    contour_opt->excludes(mask_opt);
    sh_cmd->add_option("--lambda", sh_lambda, "Contrast threshold");
    sh_cmd->add_flag("--emit-grad", sh_emit_grad, "Write S map and gradient SGDM files");
    sh_cmd->add_option("--out", sh_out, "Output prefix for emitted files");

    CLI11_PARSE(app, argc, argv);

    try {
        const std::string hash = config_hash(app.config_to_str(true, false));
        if (maskgen_cmd->parsed()) return run_maskgen(mg);
        if (maps_cmd->parsed()) return run_maps(maps_in, maps_mode, maps_normalize, maps_out);
        if (iqa_cmd->parsed())
            return run_score_iqa(iqa_ref, iqa_test, iqa_metrics, iqa_out, iqa_format, hash);
        if (seg_cmd->parsed())
            return run_score_seg(seg_gt, seg_pred, seg_out, seg_format, hash);
        if (sh_cmd->parsed()) {
            if (sh_contour.empty() && sh_mask.empty())
                throw ConfigError("sharpness needs --contour or --mask");
            return run_sharpness(sh_image, sh_contour, sh_mask, sh_lambda,
                                 sh_emit_grad, sh_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
