#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "teprobe/scan.hpp"

namespace teprobe {

struct BenchConfig {
    std::vector<int> sizes = {32, 64, 128, 256};  // segment counts (matrix dim 2N)
    int steps = 3;          // wavenumbers averaged per size
    double k_min = 1.5;
    double k_max = 3.5;
    double refraction = 16.0;
    double disk_radius = 0.5;
    ProbeConfig probe;
    AssemblyOptions assembly;
    std::string output_path;

    void validate() const;
};

struct BenchRow {
    int segments = 0;
    int matrix_dim = 0;
    double probe_seconds = 0.0;     // per wavenumber: assemble pencil + probe
    double baseline_seconds = 0.0;  // per wavenumber: assemble + full-spectrum min |lambda|
    double ratio = 0.0;             // baseline / probe
};

// Times the probe pipeline against the full-spectrum baseline (all
// generalized eigenvalues, smallest magnitude kept) at each mesh size.
std::vector<BenchRow> run_benchmark(const BenchConfig& config);

// CSV: "segments,matrix_dim,probe_seconds,baseline_seconds,ratio".
void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows);
void write_bench_table(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace teprobe
