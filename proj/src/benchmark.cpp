#include "teprobe/benchmark.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "teprobe/boundary_mesh.hpp"
#include "teprobe/linear_solver.hpp"

namespace teprobe {

void BenchConfig::validate() const {
    if (sizes.empty()) throw std::invalid_argument("need at least one mesh size");
    for (int n : sizes)
        if (n < 8) throw std::invalid_argument("mesh sizes must be >= 8");
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (!(k_min > 0.0) || !(k_max > k_min))
        throw std::invalid_argument("need 0 < k_min < k_max");
    if (!(refraction > 1.0)) throw std::invalid_argument("refraction must exceed 1");
    probe.validate();
    assembly.validate();
}

std::vector<BenchRow> run_benchmark(const BenchConfig& config) {
    config.validate();
    using clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    rows.reserve(config.sizes.size());
    for (int segments : config.sizes) {
        const BoundaryMesh mesh = build_disk_mesh(config.disk_radius, segments);
        BenchRow row;
        row.segments = segments;
        row.matrix_dim = 2 * segments;

        // probe pipeline: assemble the pencil, project twice, threshold
        auto t0 = clock::now();
        for (int j = 0; j < config.steps; ++j) {
            const double k = config.k_min + (j + 0.5) * (config.k_max - config.k_min)
                                                / config.steps;
            const Pencil pencil = assemble_pencil(mesh, k, config.refraction,
                                                  config.assembly);
            ProbeConfig pc = config.probe;
            pc.seed = derive_seed(config.probe.seed, static_cast<std::uint64_t>(j));
            (void)probe(pencil.A, pencil.B, pc);
        }
        auto t1 = clock::now();
        row.probe_seconds =
            std::chrono::duration<double>(t1 - t0).count() / config.steps;

        // competitor pipeline: assemble, compute the full spectrum, keep the
        // smallest magnitude eigenvalue
        t0 = clock::now();
        for (int j = 0; j < config.steps; ++j) {
            const double k = config.k_min + (j + 0.5) * (config.k_max - config.k_min)
                                                / config.steps;
            const Pencil pencil = assemble_pencil(mesh, k, config.refraction,
                                                  config.assembly);
            const cplx lam = min_generalized_eigenvalue(pencil.A, pencil.B);
            if (!(std::abs(lam) >= 0.0)) throw std::runtime_error("bad eigenvalue");
        }
        t1 = clock::now();
        row.baseline_seconds =
            std::chrono::duration<double>(t1 - t0).count() / config.steps;

        row.ratio = row.baseline_seconds / row.probe_seconds;
        rows.push_back(row);
    }
    return rows;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
    os << "segments,matrix_dim,probe_seconds,baseline_seconds,ratio\n";
    char buf[160];
    for (const BenchRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%.17g\n", r.segments,
                      r.matrix_dim, r.probe_seconds, r.baseline_seconds, r.ratio);
        os << buf;
    }
}

void write_bench_table(std::ostream& os, const std::vector<BenchRow>& rows) {
    os << "  size      probe [s]   full-spectrum [s]      ratio\n";
    char buf[160];
    for (const BenchRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%4dx%-4d %12.6f %19.6f %10.2f\n",
                      r.matrix_dim, r.matrix_dim, r.probe_seconds,
                      r.baseline_seconds, r.ratio);
        os << buf;
    }
}

}  // namespace teprobe
