#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "teprobe/linear_solver.hpp"

namespace teprobe {

struct ProbeConfig {
    double contour_radius = 0.01;  // r
    int quadrature_points = 16;    // W
    double threshold = 0.5;        // sigma
    std::uint64_t seed = 0;
    double floor = 1e-12;          // degenerate-projection guard

    // Enforces 0 < r < 1, 4 <= W <= 1024, 0 < sigma < 1, floor > 0; throws
    // std::invalid_argument.
    void validate() const;
};

struct ProbeOutcome {
    double indicator = 0.0;  // ||P^2 f|| / ||P f||
    bool decision = false;
    double proj1_norm = 0.0;
    double proj2_norm = 0.0;
    int solve_failures = 0;
};

// Quadrature-discretized spectral projection
//   P f = (1/W) sum_j z_j (z_j B - A)^{-1} f,   z_j = r e^{2 pi i j / W},
// the trapezoid realization of (1/2 pi i) contour_int (zB - A)^{-1} f dz.
// On a node's SolveFailure the whole contour is retried once at radius
// r (1 + 1e-3); a second failure propagates.
Eigen::VectorXcd spectral_project(const Eigen::MatrixXcd& A,
                                  const Eigen::MatrixXcd& B,
                                  const ProbeConfig& config,
                                  const Eigen::VectorXcd& f);

// Draws the seeded random vector, projects it twice and thresholds the norm
// ratio. decision is false whenever ||P f|| < floor ||f||, regardless of the
// indicator.
ProbeOutcome probe(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                   const ProbeConfig& config);

// Unit-norm vector with i.i.d. complex standard-normal entries, reproducible
// from the seed alone (fixed generator and transform, no library
// distributions).
Eigen::VectorXcd random_unit_vector(int dim, std::uint64_t seed);

// Seed derivation for independent per-wavenumber probes: seed ^ splitmix64(j).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace teprobe
