#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

namespace teprobe {

using cplx = std::complex<double>;

// Thrown when a shifted system zB - A is singular to working precision; the
// caller may jitter the contour and retry.
struct SolveFailure : std::runtime_error {
    explicit SolveFailure(cplx shift_in)
        : std::runtime_error("singular shifted system"), shift(shift_in) {}
    cplx shift;
};

// Dense LU with partial pivoting (LAPACK zgetrf/zgetrs).
class LuSolver {
public:
    // Factors M in place; throws SolveFailure(shift) on an exactly singular
    // factorization.
    explicit LuSolver(Eigen::MatrixXcd M, cplx shift = {});

    Eigen::VectorXcd solve(const Eigen::VectorXcd& rhs) const;

    // One step of iterative refinement against the original matrix.
    Eigen::VectorXcd solve_refined(const Eigen::MatrixXcd& M,
                                   const Eigen::VectorXcd& rhs) const;

private:
    Eigen::MatrixXcd lu_;
    std::vector<int> ipiv_;
    cplx shift_;
};

// x = (zB - A)^{-1} f via LU with one refinement step. Guarantees
// ||(zB-A)x - f|| <= 1e-10 (||A||_F + |z| ||B||_F) ||x|| or throws
// SolveFailure.
Eigen::VectorXcd resolvent_apply(const Eigen::MatrixXcd& A,
                                 const Eigen::MatrixXcd& B, cplx z,
                                 const Eigen::VectorXcd& f);

// All eigenvalues of the pencil A x = lambda B x (LAPACK zggev); infinite
// eigenvalues (beta == 0) are dropped.
std::vector<cplx> generalized_eigenvalues(Eigen::MatrixXcd A,
                                          Eigen::MatrixXcd B);

// Smallest-magnitude generalized eigenvalue via the full spectrum.
cplx min_generalized_eigenvalue(const Eigen::MatrixXcd& A,
                                const Eigen::MatrixXcd& B);

}  // namespace teprobe
