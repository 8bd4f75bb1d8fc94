#include "teprobe/spectral_probe.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace teprobe {

void ProbeConfig::validate() const {
    if (!(contour_radius > 0.0 && contour_radius < 1.0))
        throw std::invalid_argument("contour_radius must lie in (0, 1)");
    if (quadrature_points < 4 || quadrature_points > 1024)
        throw std::invalid_argument("quadrature_points must lie in [4, 1024]");
    if (!(threshold > 0.0 && threshold < 1.0))
        throw std::invalid_argument("threshold must lie in (0, 1)");
    if (!(floor > 0.0)) throw std::invalid_argument("floor must be positive");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 of the index, xored onto the base seed
    std::uint64_t z = index + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z = z ^ (z >> 31);
    return seed ^ z;
}

Eigen::VectorXcd random_unit_vector(int dim, std::uint64_t seed) {
    if (dim <= 0) throw std::invalid_argument("dimension must be positive");
    std::mt19937_64 gen(seed);
    auto uniform = [&gen]() {
        // (0, 1]: Box-Muller needs log() of a nonzero value
        return (static_cast<double>(gen() >> 11) + 1.0) * 0x1.0p-53;
    };
    Eigen::VectorXcd f(dim);
    for (int i = 0; i < dim; ++i) {
        const double u1 = uniform();
        const double u2 = uniform();
        const double rad = std::sqrt(-2.0 * std::log(u1));
        const double ang = 2.0 * M_PI * u2;
        f(i) = cplx(rad * std::cos(ang), rad * std::sin(ang));
    }
    f /= f.norm();
    return f;
}

namespace {

struct ProjectResult {
    Eigen::VectorXcd vec;
    int failures = 0;
};

// one pass over the contour at the given radius; throws SolveFailure
Eigen::VectorXcd project_once(const Eigen::MatrixXcd& A,
                              const Eigen::MatrixXcd& B, double radius, int W,
                              double normA, double normB,
                              const Eigen::VectorXcd& f) {
    const int n = static_cast<int>(f.size());
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(n);
    for (int j = 0; j < W; ++j) {
        const double angle = 2.0 * M_PI * j / W;
        const cplx z = radius * cplx(std::cos(angle), std::sin(angle));
        const Eigen::MatrixXcd M = z * B - A;
        const LuSolver lu(M, z);
        Eigen::VectorXcd x = lu.solve_refined(M, f);
        const double scale = normA + std::abs(z) * normB;
        if (!x.allFinite() || !((f - M * x).norm() <= 1e-10 * scale * x.norm()))
            throw SolveFailure(z);
        acc += z * x;
    }
    return acc / static_cast<double>(W);
}

ProjectResult project_with_retry(const Eigen::MatrixXcd& A,
                                 const Eigen::MatrixXcd& B,
                                 const ProbeConfig& config,
                                 const Eigen::VectorXcd& f, double normA,
                                 double normB) {
    ProjectResult res;
    try {
        res.vec = project_once(A, B, config.contour_radius,
                               config.quadrature_points, normA, normB, f);
        return res;
    } catch (const SolveFailure&) {
        res.failures = 1;
    }
    // an eigenvalue may sit on the contour; jitter the radius once
    res.vec = project_once(A, B, config.contour_radius * (1.0 + 1e-3),
                           config.quadrature_points, normA, normB, f);
    return res;
}

}  // namespace

Eigen::VectorXcd spectral_project(const Eigen::MatrixXcd& A,
                                  const Eigen::MatrixXcd& B,
                                  const ProbeConfig& config,
                                  const Eigen::VectorXcd& f) {
    config.validate();
    return project_with_retry(A, B, config, f, A.norm(), B.norm()).vec;
}

ProbeOutcome probe(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                   const ProbeConfig& config) {
    config.validate();
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
        throw std::invalid_argument("probe requires square matrices of equal size");
    const double normA = A.norm();
    const double normB = B.norm();
    const Eigen::VectorXcd f = random_unit_vector(static_cast<int>(A.rows()),
                                                  config.seed);

    ProbeOutcome out;
    const ProjectResult first = project_with_retry(A, B, config, f, normA, normB);
    out.solve_failures = first.failures;
    out.proj1_norm = first.vec.norm();
    if (!(out.proj1_norm > 0.0)) {
        out.indicator = 0.0;
        out.proj2_norm = 0.0;
        out.decision = false;
        return out;
    }
    // project the normalized first projection; by linearity
    // ||P^2 f|| = indicator * ||P f|| without underflow on the way
    const Eigen::VectorXcd g = first.vec / out.proj1_norm;
    const ProjectResult second = project_with_retry(A, B, config, g, normA, normB);
    out.solve_failures += second.failures;
    out.indicator = second.vec.norm();
    out.proj2_norm = out.indicator * out.proj1_norm;
    out.decision = out.indicator >= config.threshold &&
                   out.proj1_norm >= config.floor * 1.0;  // f is unit norm
    return out;
}

}  // namespace teprobe
