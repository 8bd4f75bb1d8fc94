#include "teprobe/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "teprobe/boundary_mesh.hpp"

extern "C" void openblas_set_num_threads(int) __attribute__((weak));

namespace teprobe {

namespace {

// avoid BLAS-internal threading under the scan worker pool
void pin_blas_threads() {
    static const bool done = [] {
        if (openblas_set_num_threads) openblas_set_num_threads(1);
        return true;
    }();
    (void)done;
}

void format_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

}  // namespace

void ScanConfig::validate() const {
    if (!(k_min > 0.0) || !(k_max > k_min))
        throw std::invalid_argument("need 0 < k_min < k_max");
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (segments < 8) throw std::invalid_argument("segments must be >= 8");
    if (!(refraction > 1.0)) throw std::invalid_argument("refraction must exceed 1");
    if (!(disk_radius > 0.0)) throw std::invalid_argument("disk radius must be positive");
    if (threads < 0) throw std::invalid_argument("threads must be >= 0");
    probe.validate();
    assembly.validate();
}

cplx baseline_min_eig(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                      double tol, int max_iter) {
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
        throw std::invalid_argument("pencil matrices must be square and equal size");
    if (!(tol > 0.0) || max_iter < 1)
        throw std::invalid_argument("bad tolerance or iteration cap");
    const LuSolver lu(A);  // SolveFailure when A is singular
    const int n = static_cast<int>(A.rows());
    Eigen::VectorXcd y = random_unit_vector(n, 0x1b875f3c9a1dULL);
    cplx lambda_prev(0.0, 0.0);
    for (int it = 0; it < max_iter; ++it) {
        const Eigen::VectorXcd w = lu.solve(B * y);  // w = A^{-1} B y
        const cplx mu = y.dot(w);                    // y^H w, ||y|| = 1
        const double wn = w.norm();
        if (!(wn > 0.0) || mu == cplx(0.0, 0.0))
            throw std::runtime_error("inverse power iteration broke down");
        y = w / wn;
        const cplx lambda = 1.0 / mu;
        if (it > 0 && std::abs(lambda - lambda_prev) <= tol * std::abs(lambda))
            return lambda;
        lambda_prev = lambda;
    }
    throw std::runtime_error("inverse power iteration did not converge");
}

ScanResult run_scan(const ScanConfig& config) {
    config.validate();
    pin_blas_threads();
    const BoundaryMesh mesh = build_disk_mesh(config.disk_radius, config.segments);
    const int count = config.steps + 1;
    const double h = (config.k_max - config.k_min) / config.steps;

    ScanResult result;
    result.has_baseline = config.mode != ScanMode::probe;
    result.records.assign(count, ScanRecord{});

    const bool want_probe = config.mode != ScanMode::baseline;
    const bool want_baseline = result.has_baseline;

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int j = next.fetch_add(1);
            if (j >= count) return;
            ScanRecord& rec = result.records[j];
            rec.k = config.k_min + j * h;
            rec.log_proj2 = -745.0;
            try {
                const Pencil pencil = assemble_pencil(mesh, rec.k, config.refraction,
                                                      config.assembly);
                if (want_probe) {
                    ProbeConfig pc = config.probe;
                    pc.seed = derive_seed(config.probe.seed,
                                          static_cast<std::uint64_t>(j));
                    const ProbeOutcome out = probe(pencil.A, pencil.B, pc);
                    rec.indicator = out.indicator;
                    rec.decision = out.decision ? 1 : 0;
                    rec.log_proj2 = out.proj2_norm > 0.0 ? std::log(out.proj2_norm)
                                                         : -745.0;
                }
                if (want_baseline) {
                    try {
                        const cplx lam = baseline_min_eig(pencil.A, pencil.B,
                                                          config.baseline_tol,
                                                          config.baseline_max_iter);
                        rec.inv_lambda_min = 1.0 / std::abs(lam);
                    } catch (const std::exception&) {
                        rec.flag = 1;
                        rec.inv_lambda_min = std::nan("");
                    }
                }
            } catch (const std::exception&) {
                rec.flag = 1;
                rec.decision = 0;
                rec.indicator = 0.0;
            }
        }
    };

    unsigned nthreads = config.threads > 0
                            ? static_cast<unsigned>(config.threads)
                            : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(count));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // group consecutive positive grid points; report the argmax-indicator point
    int run_start = -1;
    double best_ind = -1.0;
    double best_k = 0.0;
    for (int j = 0; j <= count; ++j) {
        const bool on = j < count && result.records[j].decision == 1;
        if (on) {
            if (run_start < 0) {
                run_start = j;
                best_ind = -1.0;
            }
            if (result.records[j].indicator > best_ind) {
                best_ind = result.records[j].indicator;
                best_k = result.records[j].k;
            }
        } else if (run_start >= 0) {
            result.detections.push_back(best_k);
            run_start = -1;
        }
    }
    return result;
}

void write_scan_csv(std::ostream& os, const ScanResult& result) {
    std::string line = "k,indicator,log_proj2,decision,flag";
    if (result.has_baseline) line += ",inv_lambda_min";
    line += '\n';
    os << line;
    for (const ScanRecord& r : result.records) {
        line.clear();
        format_double(line, r.k);
        line += ',';
        format_double(line, r.indicator);
        line += ',';
        format_double(line, r.log_proj2);
        line += ',';
        line += std::to_string(r.decision);
        line += ',';
        line += std::to_string(r.flag);
        if (result.has_baseline) {
            line += ',';
            format_double(line, r.inv_lambda_min);
        }
        line += '\n';
        os << line;
    }
}

void write_scan_svg(std::ostream& os, const ScanResult& result) {
    const int width = 960, height = 480, ml = 70, mr = 20, mt = 20, mb = 50;
    double kmin = 1e300, kmax = -1e300, vmin = 1e300, vmax = -1e300;
    for (const auto& r : result.records) {
        if (r.flag) continue;
        kmin = std::min(kmin, r.k);
        kmax = std::max(kmax, r.k);
        vmin = std::min(vmin, r.log_proj2);
        vmax = std::max(vmax, r.log_proj2);
    }
    if (!(kmax > kmin)) {
        kmin = 0;
        kmax = 1;
    }
    if (!(vmax > vmin)) {
        vmin = -1;
        vmax = 1;
    }
    auto px = [&](double k) {
        return ml + (k - kmin) / (kmax - kmin) * (width - ml - mr);
    };
    auto py = [&](double v) {
        return height - mb - (v - vmin) / (vmax - vmin) * (height - mt - mb);
    };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<polyline fill=\"none\" stroke=\"#1f5fa6\" stroke-width=\"1\" points=\"";
    for (const auto& r : result.records) {
        if (r.flag) continue;
        os << px(r.k) << ',' << py(r.log_proj2) << ' ';
    }
    os << "\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\""
       << width - mr << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
       << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%d\" y=\"%d\" font-size=\"13\">%.4g</text>\n", ml - 4,
                  height - mb + 18, kmin);
    os << buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%d\" y=\"%d\" font-size=\"13\">%.4g</text>\n",
                  width - mr - 30, height - mb + 18, kmax);
    os << buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%d\" y=\"%d\" font-size=\"13\">%.4g</text>\n", 8,
                  height - mb, vmin);
    os << buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%d\" y=\"%d\" font-size=\"13\">%.4g</text>\n", 8,
                  mt + 6, vmax);
    os << buf;
    os << "<text x=\"" << (width / 2) << "\" y=\"" << (height - 12)
       << "\" font-size=\"14\">wavenumber k</text>\n";
    os << "<text x=\"12\" y=\"14\" font-size=\"14\">log ||P^2 f||</text>\n";
    os << "</svg>\n";
}

}  // namespace teprobe
