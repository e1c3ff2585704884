"""Independent reference values for the unit and acceptance tests.

Run with python3; prints the values that are frozen into the C++ tests.
Nothing here shares code with the C++ library.
"""
import numpy as np
import mpmath as mp
from scipy import special

S, J, ALPHA, WC = 0.5, 1.0, 1.0, 100.0


def eq_magnetisation(T, field=0.0, terms=200000):
    """S - (2pi)^-3 int n(w(k)) d^3k via n = sum_j exp(-j w/T) and the
    lattice Green's-function identity (2pi)^-1 int exp(-a(1-cos k)) dk = i0e(a)."""
    j = np.arange(1, terms + 1, dtype=float)
    a = 2.0 * J * S * j / T
    total = np.sum(special.i0e(a) ** 3 * np.exp(-j * field / T))
    if field == 0.0:
        # tail: i0e(x) ~ (2 pi x)^-1/2 (1 + 1/(8x) + 9/(128 x^2))
        c = 2.0 * J * S / T
        lead = (2 * np.pi * c) ** -1.5
        tail = lead * (float(mp.zeta(1.5, terms + 1))
                       + 3 / (8 * c) * float(mp.zeta(2.5, terms + 1)))
        total += tail
    return S - total


def relaxation_saturated(T, times, n=96):
    """m(t) = S - <n (1 - exp(-gamma t))>_BZ for uncorrelated Ohmic noise.
    The integrand is smooth and periodic, so the unshifted trapezoid rule
    converges spectrally; k = 0 takes its limit 2 S alpha T t."""
    k = 2 * np.pi * np.arange(n) / n
    s2 = np.sin(k / 2) ** 2
    eps = 4.0 * J * S * (s2[:, None, None] + s2[None, :, None] + s2[None, None, :])
    out = []
    for t in times:
        with np.errstate(divide="ignore", invalid="ignore"):
            g = 2 * S * ALPHA * eps * np.exp(-eps / WC)
            val = -np.expm1(-g * t) / np.expm1(eps / T)
        val[0, 0, 0] = 2 * S * ALPHA * T * t
        out.append(S - val.mean())
    return out


def gaussian_lattice_ft(xi, n, k):
    r = np.arange(-n // 2, n // 2, dtype=float)
    f1 = np.exp(-r**2 / xi**2)
    return np.prod([np.sum(f1 * np.cos(k[m] * r)) for m in range(3)])


if __name__ == "__main__":
    mp.mp.dps = 30
    print("spectral_density s=1 w=6:", mp.nstr(6 * mp.e**-0.06, 17))
    print("spectral_density s=3 w=6:", mp.nstr(216 * 100**2 * mp.e**-0.06, 17))
    print("bose w=T:", mp.nstr(1 / (mp.e - 1), 17))
    print("occupation n0=0 g=1 n=2 t=1:", mp.nstr(2 * (1 - mp.e**-1), 17))
    print("gaussian F(0) xi=10:", mp.nstr(mp.pi**1.5 * 1000, 17))
    print("gaussian xi=10 F(0.05,0,0):", mp.nstr(mp.pi**1.5 * 1000 * mp.e**(-0.05**2 * 100 / 4), 17))
    for xi, kk in [(2, (0, 0, 0)), (2, (0.3, 0, 0)), (2, (0.5, 0.5, 0.5))]:
        print(f"lattice FT gaussian xi={xi} k={kk}:", repr(gaussian_lattice_ft(xi, 64, kk)))
    for T in [0.1, 0.5, 1.0, 2.0, 5.0]:
        print(f"m_inf T={T}:", repr(eq_magnetisation(T)))
    print("m_inf T=1 field=0.5:", repr(eq_magnetisation(1.0, field=0.5, terms=4000)))
    times = [0.01, 0.1, 1.0, 10.0]
    for T in [1.0]:
        a = relaxation_saturated(T, times, 64)
        b = relaxation_saturated(T, times, 96)
        print(f"m(t) T={T} t={times}:", [repr(x) for x in b], "grid change", max(abs(x - y) for x, y in zip(a, b)))
