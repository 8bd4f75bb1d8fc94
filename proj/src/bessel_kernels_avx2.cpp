// AVX2/FMA variants of the batch Bessel kernels. Same algorithm and tables
// as the scalar reference; selected at runtime by active_backend().

#if defined(__x86_64__) && defined(TEPROBE_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "teprobe/bessel_kernels.hpp"

namespace teprobe::kernels {

namespace avx2tables {
#include "bessel_cheb_tables.inc"

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEuler = 0.57721566490153286;
constexpr double kTwoOverPi = 0.63661977236758134308;

inline __m256d vset(double v) { return _mm256_set1_pd(v); }

template <std::size_t N>
inline __m256d vcheb(const double (&c)[N], __m256d u) {
    __m256d d = _mm256_setzero_pd();
    __m256d dd = _mm256_setzero_pd();
    const __m256d y2 = _mm256_add_pd(u, u);
    for (std::size_t k = N - 1; k >= 1; --k) {
        const __m256d sv = d;
        d = _mm256_fmadd_pd(y2, d, _mm256_sub_pd(vset(c[k]), dd));
        dd = sv;
    }
    return _mm256_fmadd_pd(u, d, _mm256_sub_pd(vset(0.5 * c[0]), dd));
}

// natural log for normal positive inputs
inline __m256d vlog(__m256d x) {
    const __m256d one = vset(1.0);
    const __m256i bits = _mm256_castpd_si256(x);
    __m256i expi = _mm256_srli_epi64(bits, 52);
    expi = _mm256_and_si256(expi, _mm256_set1_epi64x(0x7FF));
    __m256i mant = _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL));
    mant = _mm256_or_si256(mant, _mm256_set1_epi64x(0x3FF0000000000000LL));
    __m256d m = _mm256_castsi256_pd(mant);
    __m256d e = _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_or_si256(expi, _mm256_set1_epi64x(0x4330000000000000LL))),
        vset(4503599627370496.0 + 1023.0));
    const __m256d big = _mm256_cmp_pd(m, vset(1.4142135623730951), _CMP_GE_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, vset(0.5)), big);
    e = _mm256_add_pd(e, _mm256_and_pd(big, one));
    const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
    const __m256d s2 = _mm256_mul_pd(s, s);
    __m256d p = vset(1.0 / 21.0);
    p = _mm256_fmadd_pd(p, s2, vset(1.0 / 19.0));
    p = _mm256_fmadd_pd(p, s2, vset(1.0 / 17.0));
    p = _mm256_fmadd_pd(p, s2, vset(1.0 / 15.0));
    p = _mm256_fmadd_pd(p, s2, vset(1.0 / 13.0));
    p = _mm256_fmadd_pd(p, s2, vset(1.0 / 11.0));
    p = _mm256_fmadd_pd(p, s2, vset(1.0 / 9.0));
    p = _mm256_fmadd_pd(p, s2, vset(1.0 / 7.0));
    p = _mm256_fmadd_pd(p, s2, vset(1.0 / 5.0));
    p = _mm256_fmadd_pd(p, s2, vset(1.0 / 3.0));
    p = _mm256_fmadd_pd(p, s2, one);
    const __m256d lnm = _mm256_mul_pd(_mm256_add_pd(s, s), p);
    const __m256d ln2_hi = vset(6.93147180369123816490e-01);
    const __m256d ln2_lo = vset(1.90821492927058770002e-10);
    return _mm256_fmadd_pd(e, ln2_hi, _mm256_fmadd_pd(e, ln2_lo, lnm));
}

inline __m256d vexp_full(__m256d x) {
    const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, vset(1.4426950408889634074)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, vset(6.93147180369123816490e-01), x);
    r = _mm256_fnmadd_pd(n, vset(1.90821492927058770002e-10), r);
    __m256d p = vset(1.0 / 6227020800.0);
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 479001600.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 39916800.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 3628800.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 362880.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 40320.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 5040.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 720.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 120.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 24.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 6.0));
    p = _mm256_fmadd_pd(p, r, vset(0.5));
    p = _mm256_fmadd_pd(p, r, vset(1.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0));
    // scale by 2^n
    const __m128i ni = _mm256_cvtpd_epi32(n);
    const __m256i ni64 = _mm256_cvtepi32_epi64(ni);
    const __m256i expbits = _mm256_slli_epi64(_mm256_add_epi64(ni64, _mm256_set1_epi64x(1023)), 52);
    return _mm256_mul_pd(p, _mm256_castsi256_pd(expbits));
}

// sin and cos of chi for chi in (-1, 110)
inline void vsincos(__m256d chi, __m256d& s, __m256d& c) {
    const __m256d q = _mm256_round_pd(_mm256_mul_pd(chi, vset(0.63661977236758134308)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(q, vset(1.57079632673412561417e+00), chi);
    r = _mm256_fnmadd_pd(q, vset(6.07710050650619224932e-11), r);
    const __m256d r2 = _mm256_mul_pd(r, r);
    __m256d sp = vset(-7.64716373181981647590e-13);
    sp = _mm256_fmadd_pd(sp, r2, vset(1.60590438368216145994e-10));
    sp = _mm256_fmadd_pd(sp, r2, vset(-2.50521083854417187751e-08));
    sp = _mm256_fmadd_pd(sp, r2, vset(2.75573192239858906526e-06));
    sp = _mm256_fmadd_pd(sp, r2, vset(-1.98412698412698412698e-04));
    sp = _mm256_fmadd_pd(sp, r2, vset(8.33333333333333333333e-03));
    sp = _mm256_fmadd_pd(sp, r2, vset(-1.66666666666666666667e-01));
    const __m256d sinr = _mm256_fmadd_pd(_mm256_mul_pd(sp, r2), r, r);
    __m256d cp = vset(4.77947733238738529744e-14);
    cp = _mm256_fmadd_pd(cp, r2, vset(-1.14707455977297247139e-11));
    cp = _mm256_fmadd_pd(cp, r2, vset(2.08767569878680989792e-09));
    cp = _mm256_fmadd_pd(cp, r2, vset(-2.75573192239858906526e-07));
    cp = _mm256_fmadd_pd(cp, r2, vset(2.48015873015873015873e-05));
    cp = _mm256_fmadd_pd(cp, r2, vset(-1.38888888888888888889e-03));
    cp = _mm256_fmadd_pd(cp, r2, vset(4.16666666666666666667e-02));
    const __m256d cosr = _mm256_fmadd_pd(_mm256_mul_pd(cp, r2), r2,
                                         _mm256_fnmadd_pd(r2, vset(0.5), vset(1.0)));
    // quadrant fixup
    const __m128i qi = _mm256_cvtpd_epi32(q);
    const __m256i q64 = _mm256_cvtepi32_epi64(qi);
    const __m256i one64 = _mm256_set1_epi64x(1);
    const __m256i two64 = _mm256_set1_epi64x(2);
    const __m256d swap = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(_mm256_and_si256(q64, one64), one64));
    const __m256d sflip = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(_mm256_and_si256(q64, two64), two64));
    const __m256d cflip = _mm256_castsi256_pd(_mm256_cmpeq_epi64(
        _mm256_and_si256(_mm256_add_epi64(q64, one64), two64), two64));
    const __m256d sgn = vset(-0.0);
    __m256d sv = _mm256_blendv_pd(sinr, cosr, swap);
    __m256d cv = _mm256_blendv_pd(cosr, sinr, swap);
    s = _mm256_xor_pd(sv, _mm256_and_pd(sflip, sgn));
    c = _mm256_xor_pd(cv, _mm256_and_pd(cflip, sgn));
}

struct Jy4 {
    __m256d j0, y0, j1, y1;
};

inline Jy4 jy_small(__m256d x) {
    const __m256d xs = _mm256_mul_pd(x, vset(1.0 / 12.0));
    const __m256d u = _mm256_fmadd_pd(_mm256_mul_pd(xs, xs), vset(2.0), vset(-1.0));
    Jy4 r;
    r.j0 = vcheb(kJ0Cheb, u);
    r.j1 = _mm256_mul_pd(x, vcheb(kJ1Cheb, u));
    const __m256d lg = _mm256_mul_pd(
        vset(kTwoOverPi),
        _mm256_add_pd(vlog(_mm256_mul_pd(x, vset(0.5))), vset(kEuler)));
    r.y0 = _mm256_fmadd_pd(lg, r.j0, vcheb(kY0RegCheb, u));
    r.y1 = _mm256_fmadd_pd(lg, r.j1,
                           _mm256_fmadd_pd(x, vcheb(kY1RegCheb, u),
                                           _mm256_div_pd(vset(-kTwoOverPi), x)));
    return r;
}

inline Jy4 jy_large(__m256d x) {
    const __m256d t = _mm256_div_pd(vset(12.0), x);
    const __m256d u = _mm256_fmadd_pd(_mm256_mul_pd(t, t), vset(2.0), vset(-1.0));
    const __m256d p0 = vcheb(kP0Cheb, u);
    const __m256d q0 = _mm256_div_pd(vcheb(kQ0Cheb, u), x);
    const __m256d p1 = vcheb(kP1Cheb, u);
    const __m256d q1 = _mm256_div_pd(vcheb(kQ1Cheb, u), x);
    const __m256d amp = _mm256_sqrt_pd(_mm256_div_pd(vset(2.0 / kPi), x));
    __m256d s0, c0;
    vsincos(_mm256_sub_pd(x, vset(0.25 * kPi)), s0, c0);
    // chi1 = chi0 - pi/2: sin(chi1) = -cos(chi0), cos(chi1) = sin(chi0)
    Jy4 r;
    r.j0 = _mm256_mul_pd(amp, _mm256_fnmadd_pd(q0, s0, _mm256_mul_pd(p0, c0)));
    r.y0 = _mm256_mul_pd(amp, _mm256_fmadd_pd(p0, s0, _mm256_mul_pd(q0, c0)));
    r.j1 = _mm256_mul_pd(amp, _mm256_fmadd_pd(p1, s0, _mm256_mul_pd(q1, c0)));
    r.y1 = _mm256_mul_pd(amp, _mm256_fmsub_pd(q1, s0, _mm256_mul_pd(p1, c0)));
    return r;
}

inline void jy_vec(__m256d x, double* j0, double* y0, double* j1, double* y1) {
    const __m256d small = _mm256_cmp_pd(x, vset(12.0), _CMP_LE_OQ);
    const int mask = _mm256_movemask_pd(small);
    Jy4 r;
    if (mask == 0xF) {
        r = jy_small(x);
    } else if (mask == 0) {
        r = jy_large(x);
    } else {
        // guard each branch against the other's out-of-range lanes
        const Jy4 a = jy_small(_mm256_blendv_pd(vset(1.0), x, small));
        const Jy4 b = jy_large(_mm256_blendv_pd(x, vset(20.0), small));
        r.j0 = _mm256_blendv_pd(b.j0, a.j0, small);
        r.y0 = _mm256_blendv_pd(b.y0, a.y0, small);
        r.j1 = _mm256_blendv_pd(b.j1, a.j1, small);
        r.y1 = _mm256_blendv_pd(b.y1, a.y1, small);
    }
    _mm256_storeu_pd(j0, r.j0);
    _mm256_storeu_pd(y0, r.y0);
    _mm256_storeu_pd(j1, r.j1);
    _mm256_storeu_pd(y1, r.y1);
}

struct K2 {
    __m256d k0, k1;
};

inline K2 k_series(__m256d x) {
    const __m256d q = _mm256_mul_pd(_mm256_mul_pd(x, x), vset(0.25));
    __m256d ti = vset(1.0), tk = vset(1.0);
    __m256d i0 = vset(1.0), i1s = vset(1.0);
    __m256d s0 = _mm256_setzero_pd(), s1 = _mm256_setzero_pd();
    double h = 0.0;
    for (int m = 1; m <= 18; ++m) {
        ti = _mm256_mul_pd(ti, _mm256_mul_pd(q, vset(1.0 / (static_cast<double>(m) * m))));
        tk = _mm256_mul_pd(tk, _mm256_mul_pd(q, vset(1.0 / (static_cast<double>(m) * (m + 1.0)))));
        h += 1.0 / m;
        i0 = _mm256_add_pd(i0, ti);
        i1s = _mm256_add_pd(i1s, tk);
        s0 = _mm256_fmadd_pd(ti, vset(h), s0);
        s1 = _mm256_fmadd_pd(tk, vset(2.0 * h + 1.0 / (m + 1.0)), s1);
    }
    const __m256d i1 = _mm256_mul_pd(_mm256_mul_pd(x, vset(0.5)), i1s);
    const __m256d lg = _mm256_add_pd(vlog(_mm256_mul_pd(x, vset(0.5))), vset(kEuler));
    K2 r;
    r.k0 = _mm256_fnmadd_pd(lg, i0, s0);
    r.k1 = _mm256_add_pd(
        _mm256_div_pd(vset(1.0), x),
        _mm256_fmadd_pd(lg, i1,
                        _mm256_mul_pd(_mm256_mul_pd(x, vset(-0.25)),
                                      _mm256_add_pd(vset(1.0), s1))));
    return r;
}

inline K2 k_cheb(__m256d x, __m256d mid) {
    const __m256d e = _mm256_div_pd(vexp_full(_mm256_sub_pd(_mm256_setzero_pd(), x)),
                                    _mm256_sqrt_pd(x));
    const __m256d umid = _mm256_mul_pd(
        _mm256_sub_pd(_mm256_div_pd(vset(16.0), x), vset(5.0)), vset(1.0 / 3.0));
    const __m256d ufar = _mm256_sub_pd(_mm256_div_pd(vset(16.0), x), vset(1.0));
    K2 r;
    const __m256d k0m = vcheb(kK0MidCheb, umid);
    const __m256d k1m = vcheb(kK1MidCheb, umid);
    const __m256d k0f = vcheb(kK0FarCheb, ufar);
    const __m256d k1f = vcheb(kK1FarCheb, ufar);
    r.k0 = _mm256_mul_pd(e, _mm256_blendv_pd(k0f, k0m, mid));
    r.k1 = _mm256_mul_pd(e, _mm256_blendv_pd(k1f, k1m, mid));
    return r;
}

inline void k_vec(__m256d x, double* k0, double* k1) {
    const __m256d small = _mm256_cmp_pd(x, vset(2.0), _CMP_LE_OQ);
    const __m256d mid = _mm256_cmp_pd(x, vset(8.0), _CMP_LE_OQ);
    const int mask = _mm256_movemask_pd(small);
    K2 r;
    if (mask == 0xF) {
        r = k_series(x);
    } else if (mask == 0) {
        r = k_cheb(x, mid);
    } else {
        const K2 a = k_series(_mm256_blendv_pd(vset(1.0), x, small));
        const K2 b = k_cheb(_mm256_blendv_pd(x, vset(4.0), small), mid);
        r.k0 = _mm256_blendv_pd(b.k0, a.k0, small);
        r.k1 = _mm256_blendv_pd(b.k1, a.k1, small);
    }
    _mm256_storeu_pd(k0, r.k0);
    _mm256_storeu_pd(k1, r.k1);
}

void jy_batch_avx2(const double* x, std::size_t n, double* j0, double* y0,
                   double* j1, double* y1) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        jy_vec(_mm256_loadu_pd(x + i), j0 + i, y0 + i, j1 + i, y1 + i);
    if (i < n) {
        double xb[4] = {1.0, 1.0, 1.0, 1.0};
        double a[4], b[4], c[4], d[4];
        for (std::size_t t = i; t < n; ++t) xb[t - i] = x[t];
        jy_vec(_mm256_loadu_pd(xb), a, b, c, d);
        for (std::size_t t = i; t < n; ++t) {
            j0[t] = a[t - i];
            y0[t] = b[t - i];
            j1[t] = c[t - i];
            y1[t] = d[t - i];
        }
    }
}

void k_batch_avx2(const double* x, std::size_t n, double* k0, double* k1) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) k_vec(_mm256_loadu_pd(x + i), k0 + i, k1 + i);
    if (i < n) {
        double xb[4] = {1.0, 1.0, 1.0, 1.0};
        double a[4], b[4];
        for (std::size_t t = i; t < n; ++t) xb[t - i] = x[t];
        k_vec(_mm256_loadu_pd(xb), a, b);
        for (std::size_t t = i; t < n; ++t) {
            k0[t] = a[t - i];
            k1[t] = b[t - i];
        }
    }
}

}  // namespace
}  // namespace avx2tables

const Backend* avx2_backend() {
    static const bool supported =
        __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    static const Backend backend{avx2tables::jy_batch_avx2, avx2tables::k_batch_avx2,
                                 "avx2"};
    return supported ? &backend : nullptr;
}

}  // namespace teprobe::kernels

#endif  // __x86_64__ && TEPROBE_HAVE_AVX2
