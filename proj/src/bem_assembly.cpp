#include "teprobe/bem_assembly.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "teprobe/bessel_kernels.hpp"

namespace teprobe {

namespace {

struct GaussRule {
    std::vector<double> x, w;
};

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
GaussRule gauss_legendre(int n) {
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
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
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    return r;
}

// 1D partition of [-1,1], dyadically refined toward +1 (or -1); `levels`
// intervals, the last two of equal size.
std::vector<double> graded_breaks(int levels, bool toward_plus) {
    std::vector<double> b;
    b.push_back(-1.0);
    b.push_back(0.0);
    for (int j = 1; j <= levels - 2; ++j) b.push_back(1.0 - std::ldexp(1.0, -j));
    b.back() = 1.0 - std::ldexp(1.0, -(levels - 2));
    b.push_back(1.0);
    if (!toward_plus) {
        std::vector<double> m(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) m[i] = -b[b.size() - 1 - i];
        return m;
    }
    return b;
}

void composite_points(const std::vector<double>& breaks, const GaussRule& g,
                      std::vector<double>& x, std::vector<double>& w) {
    x.clear();
    w.clear();
    for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
        const double a = breaks[s], b = breaks[s + 1];
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (std::size_t i = 0; i < g.x.size(); ++i) {
            x.push_back(mid + half * g.x[i]);
            w.push_back(half * g.w[i]);
        }
    }
}

// Weighted quadrature points for one ordered panel pair (x on p, y on q):
// distances plus all weight combinations the four operators need.
struct PairGeometry {
    std::vector<double> r;
    // single-layer weights u_a(xi1) u_b(xi2), a/b in {const, lin-, lin+}
    std::vector<double> wcc, wmm, wmp, wpm, wpp;
    // double-layer: w * u_b(xi2) * (nu_q . (x-y))/r
    std::vector<double> wkm, wkp;
    // adjoint double-layer: w * u_a(xi1) * (nu_p . (x-y))/r
    std::vector<double> wqm, wqp;

    void resize(std::size_t n) {
        r.resize(n);
        wcc.resize(n);
        wmm.resize(n);
        wmp.resize(n);
        wpm.resize(n);
        wpp.resize(n);
        wkm.resize(n);
        wkp.resize(n);
        wqm.resize(n);
        wqp.resize(n);
    }
};

struct PairMoments {
    cplx cc{}, mm{}, mp{}, pm{}, pp{}, km{}, kp{}, qm{}, qp{};
};

class PairEngine {
public:
    PairEngine(const BoundaryMesh& mesh, const AssemblyOptions& opts)
        : mesh_(mesh), opts_(opts), far_rule_(gauss_legendre(opts.gauss_order)),
          cell_rule_(gauss_legendre(opts.adjacent_gauss_order)) {}

    // fills geom for the ordered pair (p, q), p != q
    void build_geometry(int p, int q, int levels, PairGeometry& geom) const {
        const int n = mesh_.size();
        const bool next = q == (p + 1) % n;
        const bool prev = q == (p - 1 + n) % n;
        std::vector<double> x1, w1, x2, w2;
        if (next || prev) {
            // shared node: grade both parameter axes toward the common corner
            if (next && prev) {  // triangle loop: both ends shared
                auto b1 = graded_breaks(levels, true);
                auto b2 = graded_breaks(levels, false);
                b1.insert(b1.end(), b2.begin() + 1, b2.end());  // crude both-end grading
                composite_points(b1, cell_rule_, x1, w1);
                composite_points(b1, cell_rule_, x2, w2);
            } else {
                composite_points(graded_breaks(levels, next), cell_rule_, x1, w1);
                composite_points(graded_breaks(levels, !next), cell_rule_, x2, w2);
            }
        } else {
            x1 = far_rule_.x;
            w1 = far_rule_.w;
            x2 = x1;
            w2 = w1;
        }

        const Eigen::Vector2d a = mesh_.node(p);
        const Eigen::Vector2d da = mesh_.node((p + 1) % n) - a;
        const Eigen::Vector2d b = mesh_.node(q);
        const Eigen::Vector2d db = mesh_.node((q + 1) % n) - b;
        const double jac = 0.25 * mesh_.length(p) * mesh_.length(q);
        const Eigen::Vector2d nup = mesh_.normal(p);
        const Eigen::Vector2d nuq = mesh_.normal(q);

        geom.resize(x1.size() * x2.size());
        std::size_t idx = 0;
        for (std::size_t i = 0; i < x1.size(); ++i) {
            const double um1 = 0.5 * (1.0 - x1[i]);
            const double up1 = 0.5 * (1.0 + x1[i]);
            const Eigen::Vector2d xp = a + up1 * da;
            for (std::size_t j = 0; j < x2.size(); ++j, ++idx) {
                const double um2 = 0.5 * (1.0 - x2[j]);
                const double up2 = 0.5 * (1.0 + x2[j]);
                const Eigen::Vector2d yq = b + up2 * db;
                const Eigen::Vector2d d = xp - yq;
                const double rr = d.norm();
                const double w = jac * w1[i] * w2[j];
                const double gy = nuq.dot(d) / rr;
                const double gx = nup.dot(d) / rr;
                geom.r[idx] = rr;
                geom.wcc[idx] = w;
                geom.wmm[idx] = w * um1 * um2;
                geom.wmp[idx] = w * um1 * up2;
                geom.wpm[idx] = w * up1 * um2;
                geom.wpp[idx] = w * up1 * up2;
                geom.wkm[idx] = w * um2 * gy;
                geom.wkp[idx] = w * up2 * gy;
                geom.wqm[idx] = w * um1 * gx;
                geom.wqp[idx] = w * up1 * gx;
            }
        }
    }

    // separated/adjacent pair moments at one wavenumber
    PairMoments eval(const PairGeometry& geom, cplx kappa) {
        const std::size_t n = geom.r.size();
        xb_.resize(n);
        h0re_.resize(n);
        h0im_.resize(n);
        h1re_.resize(n);
        h1im_.resize(n);

        bool have_h0re = true;
        if (kappa.imag() == 0.0 && kappa.real() > 0.0) {
            const double k = kappa.real();
            for (std::size_t i = 0; i < n; ++i) xb_[i] = k * geom.r[i];
            kernels::active_backend().j0y0j1y1(xb_.data(), n, h0re_.data(),
                                               h0im_.data(), h1re_.data(),
                                               h1im_.data());
        } else if (kappa.real() == 0.0 && kappa.imag() > 0.0) {
            // H0(ix) = -(2i/pi) K0(x), H1(ix) = -(2/pi) K1(x)
            const double t = kappa.imag();
            for (std::size_t i = 0; i < n; ++i) xb_[i] = t * geom.r[i];
            kernels::active_backend().k0k1(xb_.data(), n, h0im_.data(), h1re_.data());
            const double c = -2.0 / kPi;
            for (std::size_t i = 0; i < n; ++i) h0im_[i] *= c;
            for (std::size_t i = 0; i < n; ++i) h1re_[i] *= c;
            std::fill(h1im_.begin(), h1im_.end(), 0.0);
            have_h0re = false;
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                const cplx h0 = hankel1(0, kappa * geom.r[i]);
                const cplx h1 = hankel1(1, kappa * geom.r[i]);
                h0re_[i] = h0.real();
                h0im_[i] = h0.imag();
                h1re_[i] = h1.real();
                h1im_[i] = h1.imag();
            }
        }

        auto dot = [n](const std::vector<double>& a, const std::vector<double>& b) {
            double s = 0.0;
            const double* pa = a.data();
            const double* pb = b.data();
            for (std::size_t i = 0; i < n; ++i) s += pa[i] * pb[i];
            return s;
        };
        auto slp = [&](const std::vector<double>& w) {
            const cplx s(have_h0re ? dot(w, h0re_) : 0.0, dot(w, h0im_));
            return cplx(0.0, 0.25) * s;  // (i/4) H0 weight
        };
        const cplx dlp_pref = cplx(0.0, 0.25) * kappa;  // (i kappa / 4)
        auto dlp = [&](const std::vector<double>& w, double sign) {
            const cplx s(dot(w, h1re_), dot(w, h1im_));
            return sign * dlp_pref * s;
        };

        PairMoments mo;
        mo.cc = slp(geom.wcc);
        mo.mm = slp(geom.wmm);
        mo.mp = slp(geom.wmp);
        mo.pm = slp(geom.wpm);
        mo.pp = slp(geom.wpp);
        mo.km = dlp(geom.wkm, 1.0);
        mo.kp = dlp(geom.wkp, 1.0);
        mo.qm = dlp(geom.wqm, -1.0);
        mo.qp = dlp(geom.wqp, -1.0);
        return mo;
    }

    // coincident panel: series evaluation of the single-layer moments; the
    // double-layer kernels vanish on a flat panel.
    PairMoments eval_coincident(int p, cplx kappa) const {
        const double L = mesh_.length(p);
        const cplx lnz = std::log(kappa * L / 4.0);
        const cplx z2 = kappa * L / 2.0;
        const cplx fac_step = z2 * z2;
        cplx u78 = 0.0, u910 = 0.0;
        cplx fac = 1.0;
        double f = 1.0;  // (-1)^m / (2^{2m} (m!)^2)
        double harmonic = 0.0;
        const cplx ipi(0.0, 2.0 / kPi);
        const cplx c5base = 1.0 + cplx(0.0, 2.0 * kEulerGamma / kPi);
        for (int m = 0; m <= kSeriesMaxTerms; ++m) {
            if (m > 0) {
                f *= -1.0 / (4.0 * m * m);
                harmonic += 1.0 / m;
                fac *= fac_step;
            }
            const cplx c5 = f * (c5base - ipi * harmonic);
            const cplx c6 = ipi * f;
            const cplx t78 = fac * ((c5 + c6 * lnz) * int7(m) + c6 * int8(m));
            const cplx t910 = fac * ((c5 + c6 * lnz) * int9(m) + c6 * int10(m));
            u78 += t78;
            u910 += t910;
            if (m >= 2 && std::abs(t78) < kSeriesTol * std::abs(u78) &&
                std::abs(t910) <= kSeriesTol * std::max(std::abs(u910), 1e-300))
                break;
        }
        const cplx pref = cplx(0.0, 1.0) * L * L / 16.0;
        PairMoments mo;
        mo.cc = pref * u78;
        mo.mm = mo.pp = 0.25 * pref * (u78 + u910);
        mo.mp = mo.pm = 0.25 * pref * (u78 - u910);
        return mo;
    }

    const BoundaryMesh& mesh_;
    AssemblyOptions opts_;
    GaussRule far_rule_, cell_rule_;

private:
    std::vector<double> xb_, h0re_, h0im_, h1re_, h1im_;
};

void scatter(LayerMatrices& lm, const PairMoments& mo, int p, int q, int n,
             double nn) {
    lm.V(p, q) += mo.cc;
    lm.K(p, q) += mo.km;
    lm.K(p, (q + 1) % n) += mo.kp;
    lm.Kp(p, q) += mo.qm;
    lm.Kp((p + 1) % n, q) += mo.qp;
    // W accumulates the nu.nu-weighted linear x linear moments here; the
    // d/ds V d/ds part and the -kappa^2 factor are applied afterwards.
    lm.W(p, q) += nn * mo.mm;
    lm.W(p, (q + 1) % n) += nn * mo.mp;
    lm.W((p + 1) % n, q) += nn * mo.pm;
    lm.W((p + 1) % n, (q + 1) % n) += nn * mo.pp;
}

void finalize_hypersingular(const BoundaryMesh& mesh, LayerMatrices& lm) {
    const int n = mesh.size();
    // W = D V D^T - kappa^2 W2 with D(i, i-1) = 1/L_{i-1}, D(i, i) = -1/L_i
    MatrixXc t1(n, n);
    for (int i = 0; i < n; ++i) {
        const int im = (i - 1 + n) % n;
        t1.row(i) = lm.V.row(im) / mesh.length(im) - lm.V.row(i) / mesh.length(i);
    }
    MatrixXc w1(n, n);
    for (int j = 0; j < n; ++j) {
        const int jm = (j - 1 + n) % n;
        w1.col(j) = t1.col(jm) / mesh.length(jm) - t1.col(j) / mesh.length(j);
    }
    lm.W = w1 - lm.kappa * lm.kappa * lm.W;
}

}  // namespace

void AssemblyOptions::validate() const {
    if (gauss_order < 2 || gauss_order > 30)
        throw std::invalid_argument("gauss_order must be in [2, 30]");
    if (adjacent_gauss_order < 2 || adjacent_gauss_order > 30)
        throw std::invalid_argument("adjacent_gauss_order must be in [2, 30]");
    if (grading_levels < 2 || grading_levels > 16 ||
        grading_levels_cap < grading_levels)
        throw std::invalid_argument("bad grading levels");
    if (!(adjacent_tol > 0.0)) throw std::invalid_argument("adjacent_tol must be > 0");
}

std::vector<LayerMatrices> assemble_layer_matrices_multi(
    const BoundaryMesh& mesh, std::span<const cplx> kappas,
    const AssemblyOptions& opts) {
    opts.validate();
    for (cplx kappa : kappas)
        if (kappa == cplx(0.0, 0.0))
            throw std::invalid_argument("assembly requires kappa != 0");

    const int n = mesh.size();
    const std::size_t nk = kappas.size();
    std::vector<LayerMatrices> out(nk);
    for (std::size_t ki = 0; ki < nk; ++ki) {
        out[ki].kappa = kappas[ki];
        out[ki].V = MatrixXc::Zero(n, n);
        out[ki].K = MatrixXc::Zero(n, n);
        out[ki].Kp = MatrixXc::Zero(n, n);
        out[ki].W = MatrixXc::Zero(n, n);
    }

    PairEngine engine(mesh, opts);
    PairGeometry geom, geom_fine;
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            const double nn = mesh.normal(p).dot(mesh.normal(q));
            if (p == q) {
                for (std::size_t ki = 0; ki < nk; ++ki)
                    scatter(out[ki], engine.eval_coincident(p, kappas[ki]), p, q, n, nn);
                continue;
            }
            const bool adjacent =
                q == (p + 1) % n || q == (p - 1 + n) % n;
            engine.build_geometry(p, q, opts.grading_levels, geom);
            if (adjacent && opts.check_adjacent) {
                // refine until stable or the level cap is hit
                int level = opts.grading_levels;
                while (true) {
                    engine.build_geometry(p, q, level + 1, geom_fine);
                    bool converged = true;
                    for (std::size_t ki = 0; ki < nk && converged; ++ki) {
                        const PairMoments a = engine.eval(geom, kappas[ki]);
                        const PairMoments b = engine.eval(geom_fine, kappas[ki]);
                        const double scale = std::abs(b.cc) + 1e-300;
                        converged = std::abs(a.cc - b.cc) <= opts.adjacent_tol * scale;
                    }
                    if (converged) break;
                    ++level;
                    if (level >= opts.grading_levels_cap)
                        throw std::runtime_error(
                            "adjacent-panel quadrature did not converge within the "
                            "refinement cap");
                    geom = geom_fine;
                }
                geom = geom_fine;
            }
            for (std::size_t ki = 0; ki < nk; ++ki)
                scatter(out[ki], engine.eval(geom, kappas[ki]), p, q, n, nn);
        }
    }
    for (std::size_t ki = 0; ki < nk; ++ki) finalize_hypersingular(mesh, out[ki]);
    return out;
}

LayerMatrices assemble_layer_matrices(const BoundaryMesh& mesh, cplx kappa,
                                      const AssemblyOptions& opts) {
    const cplx ks[1] = {kappa};
    return std::move(assemble_layer_matrices_multi(mesh, ks, opts)[0]);
}

MatrixXc assemble_single_layer(const BoundaryMesh& mesh, cplx kappa,
                               const AssemblyOptions& opts) {
    return std::move(assemble_layer_matrices(mesh, kappa, opts).V);
}

MatrixXc assemble_double_layer(const BoundaryMesh& mesh, cplx kappa,
                               const AssemblyOptions& opts) {
    return std::move(assemble_layer_matrices(mesh, kappa, opts).K);
}

MatrixXc assemble_adjoint_double_layer(const BoundaryMesh& mesh, cplx kappa,
                                       const AssemblyOptions& opts) {
    return std::move(assemble_layer_matrices(mesh, kappa, opts).Kp);
}

MatrixXc assemble_hypersingular(const BoundaryMesh& mesh, cplx kappa,
                                const AssemblyOptions& opts) {
    return std::move(assemble_layer_matrices(mesh, kappa, opts).W);
}

Pencil assemble_pencil(const BoundaryMesh& mesh, double k, double n,
                       const AssemblyOptions& opts) {
    if (!(k > 0.0)) throw std::invalid_argument("pencil requires k > 0");
    if (!(n > 1.0))
        throw std::invalid_argument(
            "pencil requires refraction index n > 1 (n = 1 collapses the operator "
            "difference)");
    const double k1 = std::sqrt(n) * k;
    const cplx kappas[4] = {cplx(k, 0.0), cplx(k1, 0.0), cplx(0.0, k),
                            cplx(0.0, k1)};
    auto lm = assemble_layer_matrices_multi(mesh, kappas, opts);

    const int nn = mesh.size();
    Pencil pencil;
    pencil.k = k;
    pencil.n = n;
    pencil.A.resize(2 * nn, 2 * nn);
    pencil.B.resize(2 * nn, 2 * nn);
    pencil.A << lm[0].V - lm[1].V, -lm[0].K + lm[1].K,
                lm[0].Kp - lm[1].Kp, lm[0].W - lm[1].W;
    pencil.B << lm[2].V - lm[3].V, -lm[2].K + lm[3].K,
                lm[2].Kp - lm[3].Kp, lm[2].W - lm[3].W;
    return pencil;
}

void write_matrix(std::ostream& os, const MatrixXc& m) {
    char buf[128];
    os << "N " << m.rows() << ' ' << m.cols() << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%lld %lld %.17g %.17g\n",
                          static_cast<long long>(i), static_cast<long long>(j),
                          m(i, j).real(), m(i, j).imag());
            os << buf;
        }
}

MatrixXc read_matrix(std::istream& is) {
    std::string tag;
    Eigen::Index rows = 0, cols = 0;
    if (!(is >> tag >> rows >> cols) || tag != "N")
        throw std::runtime_error("bad matrix header");
    MatrixXc m(rows, cols);
    for (Eigen::Index n = 0; n < rows * cols; ++n) {
        Eigen::Index i, j;
        double re, im;
        if (!(is >> i >> j >> re >> im)) throw std::runtime_error("bad matrix entry");
        m(i, j) = cplx(re, im);
    }
    return m;
}

}  // namespace teprobe
