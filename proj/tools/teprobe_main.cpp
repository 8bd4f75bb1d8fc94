#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "teprobe/benchmark.hpp"
#include "teprobe/bessel_kernels.hpp"
#include "teprobe/disk_oracle.hpp"
#include "teprobe/scan.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

int run_scan_cmd(const teprobe::ScanConfig& config, const std::string& plot_path) {
    const teprobe::ScanResult result = teprobe::run_scan(config);
    if (!config.output_path.empty()) {
        std::ofstream out(config.output_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << config.output_path << "\n";
            return kExitConfig;
        }
        teprobe::write_scan_csv(out, result);
    } else {
        teprobe::write_scan_csv(std::cout, result);
    }
    if (!plot_path.empty()) {
        std::ofstream plot(plot_path, std::ios::binary);
        if (!plot) {
            std::cerr << "error: cannot open " << plot_path << "\n";
            return kExitConfig;
        }
        teprobe::write_scan_svg(plot, result);
    }
    std::size_t failed = 0;
    for (const auto& r : result.records) failed += r.flag != 0;
    std::cerr << "scan: " << result.records.size() << " wavenumbers, "
              << result.detections.size() << " detection(s)";
    if (failed) std::cerr << ", " << failed << " flagged";
    std::cerr << "\n";
    for (std::size_t i = 0; i < result.detections.size(); ++i)
        std::fprintf(stderr, "  k_%zu = %.6g\n", i + 1, result.detections[i]);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"transmission-eigenvalue detection by contour-projection probing"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from an INI/TOML file");
    app.allow_config_extras(CLI::config_extras_mode::ignore_all);

    std::string kernels = "auto";
    app.add_option("--kernels", kernels, "kernel backend: auto|scalar|avx2")
        ->capture_default_str();

    // ---- scan ----
    teprobe::ScanConfig scan;
    std::string scan_mode = "probe";
    std::string plot_path;
    auto* s = app.add_subcommand("scan", "wavenumber sweep with the probe");
    s->add_option("--k-min", scan.k_min, "interval start")->capture_default_str();
    s->add_option("--k-max", scan.k_max, "interval end")->capture_default_str();
    s->add_option("--steps", scan.steps, "uniform subintervals")->capture_default_str();
    s->add_option("--segments", scan.segments, "boundary segments N")
        ->capture_default_str();
    s->add_option("--refraction", scan.refraction, "index of refraction n")
        ->capture_default_str();
    s->add_option("--disk-radius", scan.disk_radius, "disk radius")
        ->capture_default_str();
    s->add_option("--contour-radius", scan.probe.contour_radius,
                  "probe contour radius r")
        ->capture_default_str();
    s->add_option("--quad-points", scan.probe.quadrature_points,
                  "contour quadrature points W")
        ->capture_default_str();
    s->add_option("--threshold", scan.probe.threshold, "decision threshold sigma")
        ->capture_default_str();
    s->add_option("--seed", scan.probe.seed, "random-vector seed")
        ->capture_default_str();
    s->add_option("--mode", scan_mode, "probe|baseline|both")->capture_default_str();
    s->add_option("--out", scan.output_path, "CSV output path (default stdout)");
    s->add_option("--threads", scan.threads, "worker threads (0 = hardware)")
        ->capture_default_str();
    s->add_option("--plot", plot_path, "write an SVG of log||P^2 f|| vs k");
    s->add_option("--baseline-tol", scan.baseline_tol,
                  "inverse-power relative tolerance")
        ->capture_default_str();
    s->add_option("--baseline-max-iter", scan.baseline_max_iter,
                  "inverse-power iteration cap")
        ->capture_default_str();

    // ---- oracle ----
    teprobe::DiskSpec oracle;
    auto* o = app.add_subcommand("oracle",
                                 "exact disk transmission eigenvalues (Bessel roots)");
    o->add_option("--disk-radius", oracle.radius, "disk radius R")
        ->capture_default_str();
    o->add_option("--refraction", oracle.refraction, "index of refraction n")
        ->capture_default_str();
    o->add_option("--max-order", oracle.max_order, "largest angular order m")
        ->capture_default_str();
    o->add_option("--k-max", oracle.k_max, "search ceiling")->capture_default_str();

    // ---- bench ----
    teprobe::BenchConfig bench;
    std::vector<int> bench_sizes = bench.sizes;
    auto* b = app.add_subcommand("bench", "probe vs full-spectrum timing");
    b->add_option("--sizes", bench_sizes, "mesh sizes (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    b->add_option("--steps", bench.steps, "wavenumbers per size")
        ->capture_default_str();
    b->add_option("--k-min", bench.k_min, "interval start")->capture_default_str();
    b->add_option("--k-max", bench.k_max, "interval end")->capture_default_str();
    b->add_option("--refraction", bench.refraction, "index of refraction n")
        ->capture_default_str();
    b->add_option("--out", bench.output_path, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitConfig;
    }

    try {
        teprobe::kernels::select_backend(kernels);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (s->parsed()) {
            if (scan_mode == "probe") {
                scan.mode = teprobe::ScanMode::probe;
            } else if (scan_mode == "baseline") {
                scan.mode = teprobe::ScanMode::baseline;
            } else if (scan_mode == "both") {
                scan.mode = teprobe::ScanMode::both;
            } else {
                std::cerr << "error: unknown mode " << scan_mode << "\n";
                return kExitConfig;
            }
            try {
                scan.validate();
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitConfig;
            }
            return run_scan_cmd(scan, plot_path);
        }
        if (o->parsed()) {
            try {
                oracle.validate();
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitConfig;
            }
            const auto roots = teprobe::find_disk_eigenvalues(oracle);
            std::printf("m, k\n");
            for (const auto& r : roots) std::printf("%d, %.6f\n", r.order, r.k);
            return kExitOk;
        }
        if (b->parsed()) {
            bench.sizes = bench_sizes;
            try {
                bench.validate();
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitConfig;
            }
            const auto rows = teprobe::run_benchmark(bench);
            teprobe::write_bench_table(std::cout, rows);
            if (!bench.output_path.empty()) {
                std::ofstream out(bench.output_path, std::ios::binary);
                if (!out) {
                    std::cerr << "error: cannot open " << bench.output_path << "\n";
                    return kExitConfig;
                }
                teprobe::write_bench_csv(out, rows);
            }
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitConfig;
}
