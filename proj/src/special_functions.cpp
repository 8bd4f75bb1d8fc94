#include "teprobe/special_functions.hpp"

#include <cmath>
#include <stdexcept>

#include "teprobe/bessel_kernels.hpp"

namespace teprobe {

namespace {

void require_series_order(int m) {
    if (m < 0 || m > kSeriesMaxTerms)
        throw std::invalid_argument("series order must be in [0, 60]");
}

}  // namespace

SeriesCoefficients series_coefficients(int m) {
    require_series_order(m);
    // f(m) = (-1)^m / (2^{2m} (m!)^2) via f(m) = -f(m-1)/(4 m^2)
    double f = 1.0;
    double harmonic = 0.0;
    for (int j = 1; j <= m; ++j) {
        f *= -1.0 / (4.0 * j * j);
        harmonic += 1.0 / j;
    }
    const cplx c5 = f * (1.0 + cplx(0.0, 2.0 * kEulerGamma / kPi)
                         - cplx(0.0, 2.0 / kPi) * harmonic);
    const cplx c6 = cplx(0.0, 2.0 / kPi) * f;
    return {m, c5, c6};
}

double int7(int m) {
    require_series_order(m);
    return std::ldexp(1.0, 2 * m + 2) / ((2.0 * m + 1.0) * (m + 1.0));
}

double int8(int m) {
    require_series_order(m);
    const double p = std::ldexp(1.0, 2 * m + 2);
    const double d1 = (2.0 * m + 1.0) * (m + 1.0);
    const double d2 = (2.0 * m + 1.0) * (2.0 * m + 1.0) * (2.0 * m + 2.0) * (2.0 * m + 2.0);
    return p * std::log(2.0) / d1 - (4.0 * m + 3.0) * 2.0 * p / d2;
}

double int9(int m) {
    require_series_order(m);
    // only odd l survive; [1 - (-1)^l]^2 = 4 there
    double sum = 0.0;
    double binom = 1.0;  // C(2m, l)
    for (int l = 0; l <= 2 * m; ++l) {
        if (l & 1) sum -= 4.0 * binom / ((l + 2.0) * (2.0 * m + 2.0 - l));
        binom *= static_cast<double>(2 * m - l) / (l + 1.0);
    }
    return sum;
}

double int10(int m) {
    require_series_order(m);
    const double p = std::ldexp(1.0, 2 * m + 1);  // 2^{2m+1}
    const double t1 = -m * 2.0 * p * std::log(2.0) / ((2.0 * m + 1.0) * (m + 1.0) * (m + 2.0));
    const double t2 = (4.0 * p / (2.0 * m + 3.0) - 2.0 * p / ((m + 2.0) * (m + 2.0)) - p / (m + 1.0))
                      / ((2.0 * m + 1.0) * (m + 1.0));
    double sum = 0.0;
    double binom = 1.0;  // C(2m+1, l)
    const double w = (2.0 * m + 1.0) * (2.0 * m + 1.0);
    for (int l = 0; l <= 2 * m + 1; ++l) {
        const double odd = (l & 1) ? 2.0 : 0.0;   // 1 - (-1)^l
        const double even = (l & 1) ? 0.0 : 2.0;  // 1 - (-1)^{l+1}
        sum += binom * (w / (l + 2.0) * odd - (4.0 * m + 3.0) / (l + 3.0) * even);
        binom *= static_cast<double>(2 * m + 1 - l) / (l + 1.0);
    }
    const double t3 = sum / (2.0 * (m + 1.0) * (m + 1.0) * w);
    return t1 + t2 + t3;
}

namespace {

// ---------------------------------------------------------------------------
// General complex-argument evaluation: power series for |z| <= 12, asymptotic
// expansion beyond. Exact on both half-axes but subject to cancellation for
// large |Im z| off-axis arguments in the series region; the public hankel1
// routes the axes through dedicated kernels.
// ---------------------------------------------------------------------------

struct H01 {
    cplx h0, h1;
};

H01 hankel01_series(cplx z) {
    const cplx q = 0.25 * z * z;  // (z/2)^2
    cplx j0 = 1.0, j1s = 1.0;     // j1s: J1/(z/2)
    cplx s0 = 0.0, s1 = 0.0;      // harmonic-weighted sums
    cplx t0 = 1.0, t1 = 1.0;
    double h = 0.0;
    for (int m = 1; m <= kSeriesMaxTerms; ++m) {
        t0 *= -q / (static_cast<double>(m) * m);
        t1 *= -q / (static_cast<double>(m) * (m + 1.0));
        h += 1.0 / m;
        j0 += t0;
        j1s += t1;
        s0 += t0 * h;
        s1 += t1 * (2.0 * h + 1.0 / (m + 1.0));  // H_m + H_{m+1}
        if (std::abs(t0) < kSeriesTol * std::abs(j0) &&
            std::abs(t1) < kSeriesTol * std::abs(j1s))
            break;
    }
    const cplx j1 = 0.5 * z * j1s;
    const cplx lg = std::log(0.5 * z) + kEulerGamma;
    const cplx y0 = (2.0 / kPi) * (lg * j0 - s0);
    // Y1 = (2/pi)(ln(z/2)+gamma) J1 - 2/(pi z) - (z/(2 pi)) sum (H_m + H_{m+1}) ...;
    // the m=0 term of the sum is H_0 + H_1 = 1.
    const cplx y1 = (2.0 / kPi) * lg * j1 - 2.0 / (kPi * z)
                    - (z / (2.0 * kPi)) * (1.0 + s1);
    return {j0 + cplx(0, 1) * y0, j1 + cplx(0, 1) * y1};
}

cplx hankel_asymptotic(int nu, cplx z) {
    // H_nu^(1)(z) ~ sqrt(2/(pi z)) e^{i(z - (2nu+1) pi/4)} sum_m i^m a_m(nu) / z^m
    const double mu = 4.0 * nu * nu;
    cplx sum = 1.0;
    cplx term = 1.0;
    const cplx iz = cplx(0, 1) / z;
    double prev = 1e300;
    for (int m = 0; m < 40; ++m) {
        const double odd = 2.0 * m + 1.0;
        term *= (mu - odd * odd) / (8.0 * (m + 1.0)) * iz;
        const double mag = std::abs(term);
        if (mag >= prev || mag < 1e-18 * std::abs(sum)) {
            if (mag < prev) sum += term;
            break;
        }
        sum += term;
        prev = mag;
    }
    const cplx chi = z - (2.0 * nu + 1.0) * kPi / 4.0;
    return std::sqrt(2.0 / (kPi * z)) * std::exp(cplx(0, 1) * chi) * sum;
}

}  // namespace

cplx hankel1(int order, cplx z) {
    if (order != 0 && order != 1)
        throw std::invalid_argument("hankel1: order must be 0 or 1");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("hankel1: non-finite argument");
    if (z == cplx(0.0, 0.0))
        throw std::domain_error("hankel1: argument 0 (logarithmic singularity)");
    if (std::abs(z) > 100.0)
        throw std::domain_error("hankel1: |z| > 100 outside supported range");

    if (z.imag() == 0.0 && z.real() > 0.0) {
        double j0, y0, j1, y1;
        bessel_j0y0j1y1(z.real(), j0, y0, j1, y1);
        return order == 0 ? cplx(j0, y0) : cplx(j1, y1);
    }
    if (z.real() == 0.0 && z.imag() > 0.0) {
        // H0(ix) = -(2i/pi) K0(x),  H1(ix) = -(2/pi) K1(x)
        const double x = z.imag();
        if (order == 0) return cplx(0.0, -2.0 / kPi * bessel_k0(x));
        return cplx(-2.0 / kPi * bessel_k1(x), 0.0);
    }
    if (std::abs(z) <= 12.0) {
        const H01 h = hankel01_series(z);
        return order == 0 ? h.h0 : h.h1;
    }
    return hankel_asymptotic(order, z);
}

double bessel_k0(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k0: requires x > 0");
    double k0, k1;
    kernels::scalar_backend().k0k1(&x, 1, &k0, &k1);
    return k0;
}

double bessel_k1(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k1: requires x > 0");
    double k0, k1;
    kernels::scalar_backend().k0k1(&x, 1, &k0, &k1);
    return k1;
}

void bessel_j0y0j1y1(double x, double& j0, double& y0, double& j1, double& y1) {
    if (!(x > 0.0)) throw std::domain_error("bessel_j0y0j1y1: requires x > 0");
    kernels::scalar_backend().j0y0j1y1(&x, 1, &j0, &y0, &j1, &y1);
}

namespace {

double besselj_upward(int order, double x) {
    double j0, y0, j1, y1;
    kernels::scalar_backend().j0y0j1y1(&x, 1, &j0, &y0, &j1, &y1);
    if (order == 0) return j0;
    double prev = j0, cur = j1;
    for (int m = 1; m < order; ++m) {
        const double next = (2.0 * m / x) * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double besselj_miller(int order, double x) {
    // downward recurrence with normalization J0 + 2 sum_k J_{2k} = 1
    int start = order + 16 + static_cast<int>(std::sqrt(40.0 * order));
    if (start < static_cast<int>(x) + 16) start = static_cast<int>(x) + 16;
    if (start & 1) ++start;
    double jp = 0.0, jc = 1e-30;
    double norm = 0.0, result = 0.0;
    for (int m = start; m > 0; --m) {
        const double jm = (2.0 * m / x) * jc - jp;
        jp = jc;
        jc = jm;
        if (std::abs(jc) > 1e100) {  // rescale to avoid overflow
            jc *= 1e-100;
            jp *= 1e-100;
            norm *= 1e-100;
            result *= 1e-100;
        }
        if (((m - 1) & 1) == 0 && m > 1) norm += 2.0 * jc;  // even order m-1 >= 2
        if (m - 1 == order) result = jc;
    }
    norm += jc;  // J_0 contribution
    return result / norm;
}

}  // namespace

double bessel_j(int order, double x) {
    if (order < 0 || order > 20)
        throw std::invalid_argument("bessel_j: order must be in [0, 20]");
    if (!std::isfinite(x))
        throw std::domain_error("bessel_j: non-finite argument");
    if (std::abs(x) > 100.0)
        throw std::domain_error("bessel_j: |x| > 100 outside supported range");
    double sign = 1.0;
    if (x < 0.0) {
        x = -x;
        if (order & 1) sign = -1.0;
    }
    if (x == 0.0) return order == 0 ? 1.0 : 0.0;
    if (order <= 1 || x >= order) return sign * besselj_upward(order, x);
    return sign * besselj_miller(order, x);
}

}  // namespace teprobe
