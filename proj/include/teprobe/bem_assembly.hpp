#pragma once

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

#include "teprobe/boundary_mesh.hpp"
#include "teprobe/special_functions.hpp"

namespace teprobe {

using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

struct AssemblyOptions {
    int gauss_order = 10;           // tensor Gauss-Legendre on separated pairs
    int adjacent_gauss_order = 10;  // per graded cell on adjacent pairs
    int grading_levels = 8;         // dyadic levels toward the shared node
    int grading_levels_cap = 12;    // refinement cap for the adjacent check
    double adjacent_tol = 1e-11;    // refinement convergence tolerance
    bool check_adjacent = false;    // one refinement self-check per pair

    void validate() const;
};

// Galerkin matrices of the four layer operators at one wavenumber kappa:
//   V  : single layer,            piecewise-constant x piecewise-constant
//   K  : double layer,            linear trial x constant test
//   Kp : adjoint double layer,    constant trial x linear test
//   W  : regularized hypersingular, linear x linear
struct LayerMatrices {
    MatrixXc V, K, Kp, W;
    cplx kappa;
};

// Assembles all four matrices in a single pass over panel pairs. kappa must
// be nonzero; arguments on the positive real or positive imaginary axis take
// the fast kernel paths.
LayerMatrices assemble_layer_matrices(const BoundaryMesh& mesh, cplx kappa,
                                      const AssemblyOptions& opts = {});

// Shares the panel-pair geometry across several wavenumbers (the per-pencil
// assembly calls this with {k, sqrt(n) k, ik, i sqrt(n) k}).
std::vector<LayerMatrices> assemble_layer_matrices_multi(
    const BoundaryMesh& mesh, std::span<const cplx> kappas,
    const AssemblyOptions& opts = {});

MatrixXc assemble_single_layer(const BoundaryMesh& mesh, cplx kappa,
                               const AssemblyOptions& opts = {});
MatrixXc assemble_double_layer(const BoundaryMesh& mesh, cplx kappa,
                               const AssemblyOptions& opts = {});
MatrixXc assemble_adjoint_double_layer(const BoundaryMesh& mesh, cplx kappa,
                                       const AssemblyOptions& opts = {});
MatrixXc assemble_hypersingular(const BoundaryMesh& mesh, cplx kappa,
                                const AssemblyOptions& opts = {});

// Matrix pencil (A, B) of the discrete system at wavenumber k and index of
// refraction n > 1:
//   A = [[V_k - V_k1, -K_k + K_k1], [K'_k - K'_k1, W_k - W_k1]],  k1 = sqrt(n) k,
// and B is the same expression evaluated at ik.
struct Pencil {
    MatrixXc A, B;
    double k;
    double n;
};

Pencil assemble_pencil(const BoundaryMesh& mesh, double k, double n,
                       const AssemblyOptions& opts = {});

// Plain-text matrix dump: header "N <rows> <cols>", then one entry per line
// "i j re im" (17 significant digits). read_matrix round-trips the format.
void write_matrix(std::ostream& os, const MatrixXc& m);
MatrixXc read_matrix(std::istream& is);

}  // namespace teprobe
