#pragma once

// Brute-force adaptive panel-pair quadrature used as an independent check of
// the assembly paths (graded composite rules and the coincident-panel
// series). Nested 1D adaptivity with a Gauss-10 vs Gauss-20 error estimate,
// the inner integral split at the singular parameter. Test-only; slow on
// purpose.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "teprobe/bem_assembly.hpp"
#include "teprobe/boundary_mesh.hpp"
#include "teprobe/special_functions.hpp"

namespace panel_oracle {

using teprobe::cplx;
using Vec9 = std::array<cplx, 9>;  // cc, mm, mp, pm, pp, km, kp, qm, qp

inline Vec9& operator+=(Vec9& a, const Vec9& b) {
    for (int i = 0; i < 9; ++i) a[i] += b[i];
    return a;
}

inline Vec9 operator*(double s, const Vec9& a) {
    Vec9 r;
    for (int i = 0; i < 9; ++i) r[i] = s * a[i];
    return r;
}

inline double max_diff(const Vec9& a, const Vec9& b) {
    double m = 0.0;
    for (int i = 0; i < 9; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

struct Rule {
    std::vector<double> x, w;
};

inline Rule legendre(int n) {
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

template <class F>
Vec9 fixed_rule(const F& f, const Rule& rule, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    Vec9 acc{};
    for (std::size_t i = 0; i < rule.x.size(); ++i)
        acc += (half * rule.w[i]) * f(mid + half * rule.x[i]);
    return acc;
}

template <class F>
Vec9 adaptive(const F& f, double a, double b, double tol, int depth) {
    static const Rule g10 = legendre(10);
    static const Rule g20 = legendre(20);
    const Vec9 coarse = fixed_rule(f, g10, a, b);
    const Vec9 fine = fixed_rule(f, g20, a, b);
    if (max_diff(coarse, fine) <= tol || depth <= 0) return fine;
    const double mid = 0.5 * (a + b);
    Vec9 left = adaptive(f, a, mid, 0.5 * tol, depth - 1);
    left += adaptive(f, mid, b, 0.5 * tol, depth - 1);
    return left;
}

// all nine Galerkin pair moments for the ordered panel pair (p, q)
inline Vec9 pair_moments(const teprobe::BoundaryMesh& mesh, int p, int q,
                         cplx kappa, double tol = 1e-11) {
    const int n = mesh.size();
    const Eigen::Vector2d a = mesh.node(p);
    const Eigen::Vector2d da = mesh.node((p + 1) % n) - a;
    const Eigen::Vector2d b = mesh.node(q);
    const Eigen::Vector2d db = mesh.node((q + 1) % n) - b;
    const double jac = 0.25 * mesh.length(p) * mesh.length(q);
    const Eigen::Vector2d nup = mesh.normal(p);
    const Eigen::Vector2d nuq = mesh.normal(q);

    auto point_kernel = [&](double x1, double x2) -> Vec9 {
        const double um1 = 0.5 * (1.0 - x1), up1 = 0.5 * (1.0 + x1);
        const double um2 = 0.5 * (1.0 - x2), up2 = 0.5 * (1.0 + x2);
        const Eigen::Vector2d xp = a + up1 * da;
        const Eigen::Vector2d yq = b + up2 * db;
        const Eigen::Vector2d d = xp - yq;
        const double r = d.norm();
        if (r == 0.0) return Vec9{};  // measure-zero corner touch
        const cplx h0 = teprobe::hankel1(0, kappa * r);
        const cplx h1 = teprobe::hankel1(1, kappa * r);
        const cplx slp = cplx(0.0, 0.25) * h0;
        const cplx dl = cplx(0.0, 0.25) * kappa * h1;
        const cplx kerK = dl * (nuq.dot(d) / r);
        const cplx kerQ = -dl * (nup.dot(d) / r);
        Vec9 v;
        v[0] = jac * slp;
        v[1] = jac * slp * um1 * um2;
        v[2] = jac * slp * um1 * up2;
        v[3] = jac * slp * up1 * um2;
        v[4] = jac * slp * up1 * up2;
        v[5] = jac * kerK * um2;
        v[6] = jac * kerK * up2;
        v[7] = jac * kerQ * um1;
        v[8] = jac * kerQ * up1;
        return v;
    };

    const bool coincident = p == q;
    auto inner = [&](double x1) -> Vec9 {
        auto g = [&](double x2) { return point_kernel(x1, x2); };
        if (coincident) {
            Vec9 acc = adaptive(g, -1.0, x1, 0.5 * tol, 28);
            acc += adaptive(g, x1, 1.0, 0.5 * tol, 28);
            return acc;
        }
        return adaptive(g, -1.0, 1.0, tol, 28);
    };
    return adaptive(inner, -1.0, 1.0, tol, 16);
}

struct OracleMatrices {
    teprobe::MatrixXc V, K, Kp, W;
};

// full set of Galerkin matrices from the brute-force moments; the
// hypersingular matrix uses the same regularized combination as the library.
inline OracleMatrices layer_matrices(const teprobe::BoundaryMesh& mesh,
                                     cplx kappa, double tol = 1e-11) {
    const int n = mesh.size();
    OracleMatrices om;
    om.V = teprobe::MatrixXc::Zero(n, n);
    om.K = teprobe::MatrixXc::Zero(n, n);
    om.Kp = teprobe::MatrixXc::Zero(n, n);
    teprobe::MatrixXc w2 = teprobe::MatrixXc::Zero(n, n);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            const Vec9 mo = pair_moments(mesh, p, q, kappa, tol);
            const double nn = mesh.normal(p).dot(mesh.normal(q));
            om.V(p, q) += mo[0];
            om.K(p, q) += mo[5];
            om.K(p, (q + 1) % n) += mo[6];
            om.Kp(p, q) += mo[7];
            om.Kp((p + 1) % n, q) += mo[8];
            w2(p, q) += nn * mo[1];
            w2(p, (q + 1) % n) += nn * mo[2];
            w2((p + 1) % n, q) += nn * mo[3];
            w2((p + 1) % n, (q + 1) % n) += nn * mo[4];
        }
    }
    teprobe::MatrixXc t1(n, n), w1(n, n);
    for (int i = 0; i < n; ++i) {
        const int im = (i - 1 + n) % n;
        t1.row(i) = om.V.row(im) / mesh.length(im) - om.V.row(i) / mesh.length(i);
    }
    for (int j = 0; j < n; ++j) {
        const int jm = (j - 1 + n) % n;
        w1.col(j) = t1.col(jm) / mesh.length(jm) - t1.col(j) / mesh.length(j);
    }
    om.W = w1 - kappa * kappa * w2;
    return om;
}

}  // namespace panel_oracle
