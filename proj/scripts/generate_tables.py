#!/usr/bin/env python3
"""Regenerates the Chebyshev coefficient tables used by the real-axis Bessel
kernels and the frozen high-precision reference values used by the unit tests.

Outputs (checked in):
    src/bessel_cheb_tables.inc
    tests/support/reference_values.hpp

Requires mpmath. Run from the repository root:
    python3 scripts/generate_tables.py
"""
import mpmath as mp

mp.mp.dps = 50
PI = mp.pi
EULER = mp.euler


def cheb_fit(f, n):
    """Chebyshev coefficients c[0..n-1] of f on [-1,1]:
    f(u) ~ 0.5*c0 + sum_{k>=1} c_k T_k(u)."""
    nodes = [mp.cos(PI * (j + mp.mpf(1) / 2) / n) for j in range(n)]
    vals = [f(u) for u in nodes]
    coeffs = []
    for k in range(n):
        s = mp.fsum(vals[j] * mp.cos(PI * k * (j + mp.mpf(1) / 2) / n)
                    for j in range(n))
        coeffs.append(2 * s / n)
    return coeffs


def cheb_eval(coeffs, u):
    d = mp.mpf(0)
    dd = mp.mpf(0)
    y2 = 2 * u
    for c in reversed(coeffs[1:]):
        d, dd = y2 * d - dd + c, d
    return u * d - dd + coeffs[0] / 2


def truncate(coeffs, tol=mp.mpf('1e-19')):
    scale = max(abs(c) for c in coeffs)
    n = len(coeffs)
    while n > 4 and abs(coeffs[n - 1]) < tol * scale and abs(coeffs[n - 2]) < tol * scale:
        n -= 1
    return coeffs[:n]


def validate(name, f, coeffs, umap, xs):
    """Error scaled by the max magnitude of f on the grid (the fitted
    functions have interior zeros, so pointwise relative error is the
    wrong metric)."""
    worst = mp.mpf(0)
    scale = max(abs(f(x)) for x in xs)
    for x in xs:
        err = abs(cheb_eval(coeffs, umap(x)) - f(x)) / scale
        worst = max(worst, err)
    print(f"  {name}: {len(coeffs)} coeffs, max scaled err {mp.nstr(worst, 3)}")
    assert worst < mp.mpf('1e-15'), name
    return coeffs


def emit_array(out, name, coeffs):
    out.append(f"static constexpr double {name}[] = {{")
    for c in coeffs:
        out.append(f"    {mp.nstr(c, 19, strip_zeros=False)},")
    out.append("};")
    out.append("")


def grid(a, b, n):
    return [a + (b - a) * mp.mpf(j) / (n - 1) for j in range(n)]


def main():
    out = ["// Chebyshev coefficient tables for the real-axis Bessel kernels.",
           "// Generated by scripts/generate_tables.py (mpmath, 50 digits); do not edit.",
           ""]

    print("fitting [0,12] regular parts (u = 2*(x/12)^2 - 1)")
    xmap12 = lambda x: 2 * (x / 12) ** 2 - 1
    xs12 = grid(mp.mpf('1e-6'), 12, 113)

    def j0(x):
        return mp.besselj(0, x)

    def j1_over_x(x):
        return mp.besselj(1, x) / x

    def y0_reg(x):
        return mp.bessely(0, x) - 2 / PI * (mp.log(x / 2) + EULER) * mp.besselj(0, x)

    def y1_reg_over_x(x):
        s1 = mp.bessely(1, x) - 2 / PI * (mp.log(x / 2) + EULER) * mp.besselj(1, x) + 2 / (PI * x)
        return s1 / x

    for name, f in (("kJ0Cheb", j0), ("kJ1Cheb", j1_over_x),
                    ("kY0RegCheb", y0_reg), ("kY1RegCheb", y1_reg_over_x)):
        def fu(u, f=f):
            x = 12 * mp.sqrt((u + 1) / 2)
            return f(x) if x > 0 else f(mp.mpf('1e-40'))
        c = truncate(cheb_fit(fu, 72))
        validate(name, f, c, xmap12, xs12)
        emit_array(out, name, c)

    print("fitting [12,inf) modulus/phase parts (u = 2*(12/x)^2 - 1)")
    xmapA = lambda x: 2 * (12 / x) ** 2 - 1
    xsA = grid(12, 400, 150)

    def pq(nu, x):
        chi = x - (2 * nu + 1) * PI / 4
        h = mp.hankel1(nu, x) * mp.sqrt(PI * x / 2) * mp.exp(-1j * chi)
        return h

    for nu, pn, qn in ((0, "kP0Cheb", "kQ0Cheb"), (1, "kP1Cheb", "kQ1Cheb")):
        def pf(x, nu=nu):
            return mp.re(pq(nu, x))

        def qf(x, nu=nu):  # x*Q so the fitted function is O(1)
            return x * mp.im(pq(nu, x))

        for name, f in ((pn, pf), (qn, qf)):
            def fu(u, f=f):
                x = 12 / mp.sqrt((u + 1) / 2) if u > -1 else mp.mpf('1e40')
                if x > mp.mpf('1e30'):
                    # limit value at x -> inf
                    return f(mp.mpf('1e30'))
                return f(x)
            c = truncate(cheb_fit(fu, 64))
            validate(name, f, c, xmapA, xsA)
            emit_array(out, name, c)

    print("fitting e-scaled K0/K1 (u linear in 1/x)")
    # [2,8]: u = (16/x - 5)/3 ; [8,inf): u = 16/x - 1
    xmapK1 = lambda x: (16 / x - 5) / 3
    xmapK2 = lambda x: 16 / x - 1
    xsK1 = grid(2, 8, 61)
    xsK2 = grid(8, 500, 120)

    def k0e(x):
        return mp.exp(x) * mp.sqrt(x) * mp.besselk(0, x)

    def k1e(x):
        return mp.exp(x) * mp.sqrt(x) * mp.besselk(1, x)

    for name, f, lo in (("kK0MidCheb", k0e, True), ("kK1MidCheb", k1e, True)):
        def fu(u, f=f):
            x = 16 / (3 * u + 5)
            return f(x)
        c = truncate(cheb_fit(fu, 48))
        validate(name, f, c, xmapK1, xsK1)
        emit_array(out, name, c)

    for name, f in (("kK0FarCheb", k0e), ("kK1FarCheb", k1e)):
        def fu(u, f=f):
            if u <= -1 + mp.mpf('1e-30'):
                return mp.sqrt(PI / 2)  # x -> inf limit of e^x sqrt(x) K_nu(x)
            x = 16 / (u + 1)
            return f(x)
        c = truncate(cheb_fit(fu, 48))
        validate(name, f, c, xmapK2, xsK2)
        emit_array(out, name, c)

    with open("src/bessel_cheb_tables.inc", "w") as fh:
        fh.write("\n".join(out))
    print("wrote src/bessel_cheb_tables.inc")

    # ------------------------------------------------------------------
    # frozen reference values for tests
    # ------------------------------------------------------------------
    ref = ["// High-precision reference values, generated by scripts/generate_tables.py",
           "// (mpmath, 50 digits); do not edit.",
           "#pragma once",
           "",
           "namespace refvals {",
           ""]

    def emit_rows(name, rows, ncols):
        ref.append(f"inline constexpr double {name}[][{ncols}] = {{")
        for row in rows:
            ref.append("    {" + ", ".join(mp.nstr(v, 17, strip_zeros=False) for v in row) + "},")
        ref.append("};")
        ref.append("")

    xs = [mp.mpf(s) for s in
          ['1e-8', '1e-6', '1e-4', '0.001', '0.01', '0.1', '0.25', '0.5', '1.0',
           '1.5', '2.0', '2.5', '3.0', '4.0', '5.0', '6.5', '8.0', '9.5', '11.0',
           '11.9', '12.0', '12.1', '13.0', '15.0', '18.0', '22.0', '27.0', '33.0',
           '40.0', '50.0', '64.0', '80.0', '100.0']]
    rows = [[x, mp.besselj(0, x), mp.bessely(0, x), mp.besselj(1, x), mp.bessely(1, x)]
            for x in xs]
    emit_rows("kJ0Y0J1Y1", rows, 5)

    rows = [[x, mp.besselk(0, x), mp.besselk(1, x)] for x in xs]
    emit_rows("kK0K1", rows, 3)

    rows = []
    for m in range(0, 21):
        for x in ['0.5', '1.0', '3.0', '7.0', '12.0', '19.0', '30.0', '50.0', '77.0', '100.0']:
            x = mp.mpf(x)
            rows.append([mp.mpf(m), x, mp.besselj(m, x)])
    emit_rows("kBesselJmn", rows, 3)

    # Int7..Int10 via independent mpmath 2D quadrature (split at the diagonal)
    def int_quad(m, weight):
        def inner(x1):
            def g(x2):
                d = x1 - x2
                base = d ** (2 * m)
                if weight == 'one':
                    w = mp.mpf(1)
                elif weight == 'log':
                    w = mp.log(abs(d)) if d != 0 else mp.mpf(0)
                elif weight == 'xy':
                    w = x1 * x2
                else:
                    w = x1 * x2 * (mp.log(abs(d)) if d != 0 else mp.mpf(0))
                return base * w
            return mp.quad(g, [-1, x1, 1])
        return mp.quad(inner, [-1, 1], maxdegree=8)

    mp.mp.dps = 30
    rows = []
    for m in range(0, 11):
        rows.append([mp.mpf(m), int_quad(m, 'one'), int_quad(m, 'log'),
                     int_quad(m, 'xy'), int_quad(m, 'xylog')])
        print(f"  quadrature Int(m={m}) done")
    emit_rows("kIntQuad", rows, 5)
    mp.mp.dps = 50

    # coincident-panel single layer entry: (i L^2/16) Int H0(kappa*(L/2)|x1-x2|)
    def diag_entry(kappa, L):
        def inner(x1):
            def g(x2):
                return mp.hankel1(0, kappa * (L / 2) * abs(x1 - x2))
            return mp.quad(g, [-1, x1, 1])
        val = mp.quad(inner, [-1, 1], maxdegree=8)
        return 1j * L * L / 16 * val

    mp.mp.dps = 25
    rows = []
    for kap, L in ((mp.mpf(2), mp.mpf('0.0980171403295606')),
                   (mp.mpf(8), mp.mpf('0.0980171403295606')),
                   (mp.mpf(2), mp.mpf('0.3826834323650898')),
                   (mp.mpf('3.5'), mp.mpf('0.19509032201612825'))):
        v = diag_entry(kap, L)
        rows.append([kap, L, mp.re(v), mp.im(v)])
        # purely imaginary wavenumber path
        vi = diag_entry(1j * kap, L)
        rows.append([-kap, L, mp.re(vi), mp.im(vi)])  # negative kappa marks i*|kappa|
        print(f"  diag entry kappa={kap} done")
    emit_rows("kDiagSingleLayer", rows, 4)
    mp.mp.dps = 50

    # disk transmission eigenvalues: roots of
    # sqrt(n) J_m(kR) J_{m-1}(s k R) - J_{m-1}(kR) J_m(s k R)
    def disk_roots(R, n, mmax, kmax):
        s = mp.sqrt(n)
        found = []
        for m in range(0, mmax + 1):
            def f(k):
                return (s * mp.besselj(m, k * R) * mp.besselj(m - 1, s * k * R)
                        - mp.besselj(m - 1, k * R) * mp.besselj(m, s * k * R))
            k = mp.mpf('0.05')
            step = mp.mpf('0.002')
            prev = f(k)
            while k < kmax:
                k2 = k + step
                cur = f(k2)
                if prev * cur < 0:
                    r = mp.findroot(f, (k, k2), solver='bisect', tol=mp.mpf('1e-30'))
                    found.append((m, r))
                k, prev = k2, cur
        return found

    rows = [[mp.mpf(m), r] for m, r in disk_roots(mp.mpf('0.5'), 16, 2, 7)]
    emit_rows("kDiskRootsN16", rows, 2)
    rows = [[mp.mpf(m), r] for m, r in disk_roots(mp.mpf('0.5'), 9, 4, 5)]
    emit_rows("kDiskRootsN9", rows, 2)

    ref.append("}  // namespace refvals")
    with open("tests/support/reference_values.hpp", "w") as fh:
        fh.write("\n".join(ref))
    print("wrote tests/support/reference_values.hpp")


if __name__ == "__main__":
    main()
