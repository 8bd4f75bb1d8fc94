#include "teprobe/bessel_kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace teprobe::kernels {

#include "bessel_cheb_tables.inc"

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEuler = 0.57721566490153286;
constexpr double kTwoOverPi = 0.63661977236758134308;

template <std::size_t N>
inline double clenshaw(const double (&c)[N], double u) {
    double d = 0.0, dd = 0.0;
    const double y2 = 2.0 * u;
    for (std::size_t k = N - 1; k >= 1; --k) {
        const double sv = d;
        d = y2 * d - dd + c[k];
        dd = sv;
    }
    return u * d - dd + 0.5 * c[0];
}

// J0, Y0, J1, Y1 at one x: Chebyshev fits of the regular parts on [0,12],
// modulus/phase auxiliary functions beyond.
inline void jy_one(double x, double& j0, double& y0, double& j1, double& y1) {
    if (x <= 12.0) {
        const double u = 2.0 * (x / 12.0) * (x / 12.0) - 1.0;
        j0 = clenshaw(kJ0Cheb, u);
        j1 = x * clenshaw(kJ1Cheb, u);
        const double lg = kTwoOverPi * (std::log(0.5 * x) + kEuler);
        y0 = lg * j0 + clenshaw(kY0RegCheb, u);
        y1 = lg * j1 - kTwoOverPi / x + x * clenshaw(kY1RegCheb, u);
    } else {
        const double t = 12.0 / x;
        const double u = 2.0 * t * t - 1.0;
        const double p0 = clenshaw(kP0Cheb, u);
        const double q0 = clenshaw(kQ0Cheb, u) / x;
        const double p1 = clenshaw(kP1Cheb, u);
        const double q1 = clenshaw(kQ1Cheb, u) / x;
        const double c = std::sqrt(2.0 / (kPi * x));
        const double s0 = std::sin(x - 0.25 * kPi), c0 = std::cos(x - 0.25 * kPi);
        // chi1 = chi0 - pi/2, so sin(chi1) = -c0 and cos(chi1) = s0
        j0 = c * (p0 * c0 - q0 * s0);
        y0 = c * (p0 * s0 + q0 * c0);
        j1 = c * (p1 * s0 + q1 * c0);
        y1 = c * (q1 * s0 - p1 * c0);
    }
}

inline void k_one(double x, double& k0, double& k1) {
    if (x <= 2.0) {
        // I/K series; converges in ~14 terms on (0,2]
        const double q = 0.25 * x * x;
        double ti = 1.0, tk = 1.0;  // terms of I0 and I1/(x/2)
        double i0 = 1.0, i1s = 1.0;
        double s0 = 0.0, s1 = 0.0;
        double h = 0.0;
        for (int m = 1; m <= 18; ++m) {
            ti *= q / (static_cast<double>(m) * m);
            tk *= q / (static_cast<double>(m) * (m + 1.0));
            h += 1.0 / m;
            i0 += ti;
            i1s += tk;
            s0 += ti * h;
            s1 += tk * (2.0 * h + 1.0 / (m + 1.0));
        }
        const double i1 = 0.5 * x * i1s;
        const double lg = std::log(0.5 * x) + kEuler;
        k0 = -lg * i0 + s0;
        k1 = 1.0 / x + lg * i1 - 0.25 * x * (1.0 + s1);
    } else {
        const double e = std::exp(-x) / std::sqrt(x);
        if (x <= 8.0) {
            const double u = (16.0 / x - 5.0) / 3.0;
            k0 = e * clenshaw(kK0MidCheb, u);
            k1 = e * clenshaw(kK1MidCheb, u);
        } else {
            const double u = 16.0 / x - 1.0;
            k0 = e * clenshaw(kK0FarCheb, u);
            k1 = e * clenshaw(kK1FarCheb, u);
        }
    }
}

void jy_batch_scalar(const double* x, std::size_t n, double* j0, double* y0,
                     double* j1, double* y1) {
    for (std::size_t i = 0; i < n; ++i) jy_one(x[i], j0[i], y0[i], j1[i], y1[i]);
}

void k_batch_scalar(const double* x, std::size_t n, double* k0, double* k1) {
    for (std::size_t i = 0; i < n; ++i) k_one(x[i], k0[i], k1[i]);
}

const Backend kScalarBackend{jy_batch_scalar, k_batch_scalar, "scalar"};

std::atomic<const Backend*> g_active{nullptr};

const Backend* pick_default() {
    if (const char* env = std::getenv("TEPROBE_KERNELS")) {
        const std::string_view want(env);
        if (want == "scalar") return &kScalarBackend;
        if (want == "avx2") {
            if (const Backend* b = avx2_backend()) return b;
            return &kScalarBackend;
        }
    }
    if (const Backend* b = avx2_backend()) return b;
    return &kScalarBackend;
}

}  // namespace

const Backend& scalar_backend() { return kScalarBackend; }

#if !defined(TEPROBE_HAVE_AVX2)
const Backend* avx2_backend() { return nullptr; }
#endif

const Backend& active_backend() {
    const Backend* b = g_active.load(std::memory_order_acquire);
    if (!b) {
        b = pick_default();
        g_active.store(b, std::memory_order_release);
    }
    return *b;
}

void select_backend(std::string_view name) {
    if (name == "auto") {
        g_active.store(pick_default(), std::memory_order_release);
        return;
    }
    if (name == "scalar") {
        g_active.store(&kScalarBackend, std::memory_order_release);
        return;
    }
    if (name == "avx2") {
        if (const Backend* b = avx2_backend()) {
            g_active.store(b, std::memory_order_release);
            return;
        }
        throw std::runtime_error("avx2 kernels unavailable on this machine");
    }
    throw std::invalid_argument("unknown kernel backend: " + std::string(name));
}

}  // namespace teprobe::kernels
