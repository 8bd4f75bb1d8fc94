#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "teprobe/bem_assembly.hpp"
#include "teprobe/spectral_probe.hpp"

namespace teprobe {

enum class ScanMode { probe, baseline, both };

struct ScanConfig {
    double k_min = 1.5;
    double k_max = 3.5;
    int steps = 2000;  // K uniform subintervals; grid k_j = k_min + j h, j = 0..K
    int segments = 32;
    double refraction = 16.0;
    double disk_radius = 0.5;
    ProbeConfig probe;
    AssemblyOptions assembly;
    ScanMode mode = ScanMode::probe;
    std::string output_path;
    int threads = 0;  // 0: hardware concurrency

    // inverse-power-iteration baseline settings (mode baseline/both)
    double baseline_tol = 1e-8;
    int baseline_max_iter = 500;

    void validate() const;  // throws std::invalid_argument
};

struct ScanRecord {
    double k = 0.0;
    double indicator = 0.0;
    double log_proj2 = 0.0;  // log ||P^2 f|| (clamped to -745 when zero)
    int decision = 0;
    int flag = 0;  // 1: assembly/probe/baseline failure at this wavenumber
    double inv_lambda_min = 0.0;  // 1/|lambda_min| (baseline modes only)
};

struct ScanResult {
    std::vector<ScanRecord> records;
    std::vector<double> detections;  // one representative k per decision run
    bool has_baseline = false;
};

// Per-wavenumber pipeline over the uniform grid: assemble the pencil, run
// the probe (and the baseline when requested), then group consecutive
// decision-1 grid points into detections reported at the point of maximal
// indicator. Failures at single wavenumbers mark the record and never abort
// the sweep. Deterministic for a fixed config, independent of thread count.
ScanResult run_scan(const ScanConfig& config);

// Smallest-magnitude generalized eigenvalue by inverse power iteration on
// the pencil (y <- A^{-1} B y, Rayleigh quotient), converged when successive
// estimates agree to tol relatively. Throws std::runtime_error after
// max_iter without convergence and SolveFailure when A is singular.
cplx baseline_min_eig(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                      double tol = 1e-10, int max_iter = 500);

// CSV schema: "k,indicator,log_proj2,decision,flag[,inv_lambda_min]",
// floats with 17 significant digits; byte-reproducible.
void write_scan_csv(std::ostream& os, const ScanResult& result);

// Minimal SVG line chart of log_proj2 against k.
void write_scan_svg(std::ostream& os, const ScanResult& result);

}  // namespace teprobe
