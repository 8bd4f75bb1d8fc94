#pragma once

#include <complex>

namespace teprobe {

using cplx = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286;
inline constexpr double kPi = 3.14159265358979323846;

// Series truncation shared by all expansion-based paths: stop once the next
// term falls below kSeriesTol relative to the partial sum, hard cap below.
inline constexpr double kSeriesTol = 1e-15;
inline constexpr int kSeriesMaxTerms = 60;

// Coefficients of the H0^(1) log-expansion
//   H0(k|x-y|) = sum_m [ (C5(m) + C6(m) ln(k/2)) + C6(m) ln|x-y| ] (k|x-y|)^{2m}
// with C6(m) = i(-1)^m / (2^{2m-1} (m!)^2 pi) and C5(m) carrying the harmonic
// number H_m from the Y0 series.
struct SeriesCoefficients {
    int m;
    cplx c5;
    cplx c6;
};

SeriesCoefficients series_coefficients(int m);

// Exact values of the reference-square integrals
//   Int7(m)  = Int (x1-x2)^{2m}                  dx2 dx1
//   Int8(m)  = Int (x1-x2)^{2m} ln|x1-x2|        dx2 dx1
//   Int9(m)  = Int (x1-x2)^{2m} x1 x2            dx2 dx1
//   Int10(m) = Int (x1-x2)^{2m} x1 x2 ln|x1-x2|  dx2 dx1
// over [-1,1]^2.
double int7(int m);
double int8(int m);
double int9(int m);
double int10(int m);

// Bessel function of the first kind, integer order 0..20, |x| <= 100.
double bessel_j(int order, double x);

// Hankel function of the first kind, order 0 or 1. Full accuracy on the
// positive real and positive imaginary axes (the latter routed through the
// modified Bessel K identity); other arguments in the principal branch use
// the series/asymptotic evaluation directly.
cplx hankel1(int order, cplx z);

// Modified Bessel functions of the second kind (x > 0).
double bessel_k0(double x);
double bessel_k1(double x);

// Scalar reference kernel: J0, Y0, J1, Y1 at a single x > 0.
void bessel_j0y0j1y1(double x, double& j0, double& y0, double& j1, double& y1);

}  // namespace teprobe
