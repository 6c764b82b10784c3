"""Independent brute-force oracle for the pinned regression values.

Expands the elliptic polynomials symbolically with sympy by literally
summing over the even-signed permutation group, without sharing any code
with the C++ implementation. Run: python3 tests/oracle/brute_force.py
"""
import itertools
from fractions import Fraction

import sympy as sp

nu, z = sp.symbols("nu zeta")


def weyl_d(n):
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        for signs in itertools.product((1, -1), repeat=n):
            if sp.prod(signs) == 1:
                yield perm, signs, (-1) ** inv


def lambdas(n, tau, m):
    return [m + tau[k] + n - k for k in range(n + 1)]


def weight(n, tau, m, k):
    lam = lambdas(n, tau, m)
    return [lam[j] for j in range(n + 1) if j != k]


def act(perm, signs, w):
    out = [0] * len(w)
    for i, p in enumerate(perm):
        out[p] = w[i]
    return [s * x for s, x in zip(signs, out)]


def p_gamma(n, tau, m, k, d, zetas):
    w = weight(n, tau, m, k)
    total = 0
    for perm, signs, det in weyl_d(n):
        v = act(perm, signs, w)  # v[0] is slot e_2
        a = sp.Integer(1)
        for j in range(1, d):
            a *= -nu**2 - v[j - 1] ** 2
        for i in range(1, d):
            for j in range(i + 1, d):
                a *= v[i - 1] ** 2 - v[j - 1] ** 2
        b = sp.Integer(1)
        for j in range(d, n + 1):
            b *= zetas[j - d] ** (-v[j - 1])
        total += det * a * b
    return sp.expand(total)


def alt(n, tau, m, d, zetas):
    return sp.expand(sum((-1) ** k * p_gamma(n, tau, m, k, d, zetas) for k in range(n + 1)))


if __name__ == "__main__":
    print("P k=2 m=0 d=2:", p_gamma(2, (0, 0, 0), 0, 2, 2, [z]))
    print("P k=0 m=0 d=2:", p_gamma(2, (0, 0, 0), 0, 0, 2, [z]))
    print("alt m=0 d=2:", alt(2, (0, 0, 0), 0, 2, [z]))
    print("alt m=1 d=2:", alt(2, (0, 0, 0), 1, 2, [z]))
    print("identity m=0:", alt(2, (0, 0, 0), 0, 3, []))
    print("identity m=1:", alt(2, (0, 0, 0), 1, 3, []))
    # ME for the pi/2 class: zeta = i
    t = sp.symbols("t")
    for m in (0, 1, 2, 3):
        lam = lambdas(2, (0, 0, 0), m)
        me = 0
        for k in range(3):
            p = p_gamma(2, (0, 0, 0), m, k, 2, [sp.I])
            me += (-1) ** k * sp.integrate(p.subs(nu, t), (t, 0, lam[k]))
        print("ME m=%d:" % m, sp.nsimplify(sp.expand(me)))
    # MI stand-in n=2 m=0,1
    for m in (0, 1):
        lam = lambdas(2, (0, 0, 0), m)
        mi = sum((-1) ** k * sp.integrate(p_gamma(2, (0, 0, 0), m, k, 3, []).subs(nu, t), (t, 0, lam[k])) for k in range(3))
        print("MI m=%d:" % m, mi)
    print("coeffs k=2 m=0 zeta=i:", sp.Poly(p_gamma(2, (0, 0, 0), 0, 2, 2, [sp.I]), nu).all_coeffs())
    print("A d=3 w=(5,3):", sp.expand((-nu**2 - 25) * (-nu**2 - 9) * 16))
    print("int -2t^2-2 to 2:", sp.integrate(-2 * t**2 - 2, (t, 0, 2)))
    # n=3 checks
    z1, z2 = sp.symbols("z1 z2")
    print("n=3 d=2 alt m=0 tau=(1,1,0,0):", alt(3, (1, 1, 0, 0), 0, 2, [z1, z2]))
    print("n=3 identity m=0:", alt(3, (0, 0, 0, 0), 0, 4, []))
    print("n=1 d=1 alt m=2:", alt(1, (0, 0), 2, 1, [z]))
