#!/usr/bin/env python3
"""Reference values for the C++ tests, computed with mpmath at 50 digits.

Independent of the library: Bessel values come from mpmath.besselk, EOS derivatives
from numerical differentiation of the closed-form isentrope, the velocity threshold
from tanh-sinh quadrature.  Output is pasted into tests/reference_values.hpp.
"""
import mpmath as mp

mp.mp.dps = 50

GAMMAS = ["1e-3", "0.1", "1", "3", "10", "100"]


def K(j, x):
    return mp.besselk(j, x)


def h(i, x):
    return K(i, x) / K(i + 1, x)


def e_over_p(i, x):
    return 3 + x * h(i, x)


def lnp(i, x):
    # isentrope through eta = 0: ln p = gamma (h - 1) + (i - 3) ln gamma + ln(e^gamma K_{i+1})
    return x * h(i, x) + (i - 3) * mp.log(x) + mp.log(K(i + 1, x))


def h_prime(i, x):
    # from K_j' = -K_{j-1} - j K_j / x
    hh = h(i, x)
    return hh * hh + (2 * i + 1) * hh / x - 1


def dlnp(i, x):
    return mp.diff(lambda t: lnp(i, t), x)


def e_p(i, x):
    dE = h(i, x) + x * h_prime(i, x)
    return e_over_p(i, x) + dE / dlnp(i, x)


def p_epp(i, x):
    return mp.diff(lambda t: e_p(i, t), x) / dlnp(i, x)


def ubar_integrand(i, x):
    # times d ln gamma
    Phi = 3 / x + h(i, x)
    dPhi = -3 / (x * x) + h_prime(i, x)
    g = x * x * dPhi - 1
    chi = x * Phi + 1
    return mp.sqrt(g * (g + 1) / chi)


def ubar(i, x0, split=mp.mpf(300), Y0="3e-6"):
    body = mp.quad(lambda lg: ubar_integrand(i, mp.e ** lg), [mp.log(x0), mp.log(split)])
    # tail in y = gamma^(-1/2): d ln gamma = -2 dy / y, integrand -> const as y -> 0
    f = lambda y: 2 * ubar_integrand(i, 1 / (y * y)) / y
    y0 = mp.mpf(Y0)
    tail = mp.quad(f, [y0, 1 / mp.sqrt(split)])
    # [0, y0] from a quadratic through three points; the remainder is O(y0^4)
    f1, f2, f3 = f(y0), f(2 * y0), f(3 * y0)
    c2 = (f3 - 2 * f2 + f1) / (2 * y0 * y0)
    c1 = (f2 - f1) / y0 - 3 * c2 * y0
    c0 = f1 - c1 * y0 - c2 * y0 * y0
    tail += c0 * y0 + c1 * y0 ** 2 / 2 + c2 * y0 ** 3 / 3
    return mp.tanh(body + tail)


def fmt(v):
    return mp.nstr(v, 17, min_fixed=-30, max_fixed=30)


print("// gamma, K0..K4")
for g in GAMMAS:
    x = mp.mpf(g)
    print("  {%s, {%s}}," % (g, ", ".join(fmt(K(j, x)) for j in range(5))))
for name, i in (("mono", 1), ("diat", 0)):
    print("// %s: gamma, h, e/p, e_p, p e_pp" % name)
    for g in GAMMAS:
        x = mp.mpf(g)
        print("  {%s, %s, %s, %s, %s}," % (g, fmt(h(i, x)), fmt(e_over_p(i, x)), fmt(e_p(i, x)), fmt(p_epp(i, x))))
mp.mp.dps = 30
for name, i in (("mono", 1), ("diat", 0)):
    print("// %s ubar at gamma0 = 3: %s" % (name, fmt(ubar(i, mp.mpf(3)))))
