#include "teprobe/linear_solver.hpp"

#include <algorithm>
#include <cmath>

extern "C" {
void zgetrf_(const int* m, const int* n, std::complex<double>* a, const int* lda,
             int* ipiv, int* info);
void zgetrs_(const char* trans, const int* n, const int* nrhs,
             const std::complex<double>* a, const int* lda, const int* ipiv,
             std::complex<double>* b, const int* ldb, int* info);
void zggev_(const char* jobvl, const char* jobvr, const int* n,
            std::complex<double>* a, const int* lda, std::complex<double>* b,
            const int* ldb, std::complex<double>* alpha,
            std::complex<double>* beta, std::complex<double>* vl,
            const int* ldvl, std::complex<double>* vr, const int* ldvr,
            std::complex<double>* work, const int* lwork, double* rwork,
            int* info);
}

namespace teprobe {

LuSolver::LuSolver(Eigen::MatrixXcd M, cplx shift)
    : lu_(std::move(M)), shift_(shift) {
    const int n = static_cast<int>(lu_.rows());
    if (lu_.cols() != n) throw std::invalid_argument("LU requires a square matrix");
    ipiv_.resize(n);
    int info = 0;
    zgetrf_(&n, &n, lu_.data(), &n, ipiv_.data(), &info);
    if (info != 0) throw SolveFailure(shift_);
}

Eigen::VectorXcd LuSolver::solve(const Eigen::VectorXcd& rhs) const {
    const int n = static_cast<int>(lu_.rows());
    const int one = 1;
    Eigen::VectorXcd x = rhs;
    int info = 0;
    const char trans = 'N';
    zgetrs_(&trans, &n, &one, lu_.data(), &n, ipiv_.data(), x.data(), &n, &info);
    if (info != 0) throw SolveFailure(shift_);
    return x;
}

Eigen::VectorXcd LuSolver::solve_refined(const Eigen::MatrixXcd& M,
                                         const Eigen::VectorXcd& rhs) const {
    Eigen::VectorXcd x = solve(rhs);
    const Eigen::VectorXcd r = rhs - M * x;
    x += solve(r);
    return x;
}

Eigen::VectorXcd resolvent_apply(const Eigen::MatrixXcd& A,
                                 const Eigen::MatrixXcd& B, cplx z,
                                 const Eigen::VectorXcd& f) {
    const Eigen::MatrixXcd M = z * B - A;
    const LuSolver lu(M, z);
    Eigen::VectorXcd x = lu.solve_refined(M, f);
    const double scale = A.norm() + std::abs(z) * B.norm();
    const double resid = (f - M * x).norm();
    if (!(resid <= 1e-10 * scale * x.norm()) || !x.allFinite())
        throw SolveFailure(z);
    return x;
}

std::vector<cplx> generalized_eigenvalues(Eigen::MatrixXcd A,
                                          Eigen::MatrixXcd B) {
    const int n = static_cast<int>(A.rows());
    if (A.cols() != n || B.rows() != n || B.cols() != n)
        throw std::invalid_argument("zggev requires square matrices of equal size");
    Eigen::VectorXcd alpha(n), beta(n);
    std::vector<cplx> work(std::max(2 * n, 1));
    std::vector<double> rwork(std::max(8 * n, 1));
    int lwork = static_cast<int>(work.size());
    int info = 0;
    const char jobn = 'N';
    cplx vdummy;
    const int ldv = 1;
    zggev_(&jobn, &jobn, &n, A.data(), &n, B.data(), &n, alpha.data(),
           beta.data(), &vdummy, &ldv, &vdummy, &ldv, work.data(), &lwork,
           rwork.data(), &info);
    if (info != 0) throw std::runtime_error("zggev failed to converge");
    std::vector<cplx> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (beta(i) == cplx(0.0, 0.0)) continue;  // infinite eigenvalue
        out.push_back(alpha(i) / beta(i));
    }
    return out;
}

cplx min_generalized_eigenvalue(const Eigen::MatrixXcd& A,
                                const Eigen::MatrixXcd& B) {
    const auto lams = generalized_eigenvalues(A, B);
    if (lams.empty()) throw std::runtime_error("pencil has no finite eigenvalues");
    return *std::min_element(lams.begin(), lams.end(),
                             [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
}

}  // namespace teprobe
