"""Independent oracles for the frozen values in the C++ unit tests.

Uses scipy/sympy only, none of the library code. Run with
    python3 tests/oracles/oracle.py
and compare against the constants in tests/*.cpp.
"""
from fractions import Fraction as Fr
from itertools import combinations, product
from math import factorial, gcd, lcm

import numpy as np
import sympy
from scipy.optimize import linprog
from scipy.spatial import ConvexHull


def hull_vertices(pts):
    """Points not in the convex hull of the others (LP feasibility)."""
    out = []
    for i, p in enumerate(pts):
        others = [q for j, q in enumerate(pts) if j != i]
        a = np.array(others, dtype=float).T
        a_eq = np.vstack([a, np.ones(len(others))])
        b_eq = np.array(list(p) + [1.0])
        res = linprog(np.zeros(len(others)), A_eq=a_eq, b_eq=b_eq, bounds=(0, None))
        if res.status != 0:
            out.append(p)
    return out


def facets_through(pts, x):
    """Supporting hyperplanes of Conv(pts) (exact) that contain x."""
    n = len(pts[0])
    res = []
    for comb in combinations(pts, n):
        m = sympy.Matrix([[c - comb[0][k] for k, c in enumerate(q)] for q in comb[1:]])
        ns = m.nullspace()
        if len(ns) != 1:
            continue
        a = ns[0]
        vals = [sum(a[k] * q[k] for k in range(n)) for q in pts]
        b = sum(a[k] * comb[0][k] for k in range(n))
        if all(v >= b for v in vals) or all(v <= b for v in vals):
            on = tuple(sorted(q for q, v in zip(pts, vals) if v == b))
            if sum(a[k] * x[k] for k in range(n)) == b and on not in res:
                res.append(on)
    return res


def minkowski_normals(ps, qs):
    s = [tuple(a + b for a, b in zip(p, q)) for p in ps for q in qs]
    h = ConvexHull(np.array(s, dtype=float))
    out = set()
    for eq in h.equations:
        a = [Fr(x).limit_denominator(1000) for x in eq[:-1]]
        d = lcm(*[x.denominator for x in a])
        v = [int(x * d) for x in a]
        g = gcd(*v)
        out.add(tuple(x // g for x in v))
    return sorted(out)


def lower_facets(hs, n):
    """Facets of NP(hs) with dual (v,1), v > 0."""
    res = {}
    for comb in combinations(hs, n + 1):
        m = sympy.Matrix([[*p[:n], 1] for p in comb])
        if m.det() == 0:
            continue
        rhs = sympy.Matrix([-p[n] for p in comb])
        sol = m.LUsolve(rhs)
        v = [Fr(int(sympy.fraction(s)[0]), int(sympy.fraction(s)[1])) for s in sol[:n]]
        if any(x <= 0 for x in v):
            continue
        vals = [sum(a * b for a, b in zip(v, p[:n])) + p[n] for p in hs]
        lo = min(vals)
        if lo != -Fr(str(sol[n])):
            continue
        res[tuple(v)] = sorted(p for p, val in zip(hs, vals) if val == lo)
    return res


def under_volume(support, n):
    """n!·vol of the orthant below a convenient Newton polyhedron, via floats."""
    if n == 0:
        return 1
    big = max(max(p) for p in support) + 1
    pts = set()
    for p in support:
        for mask in product([0, 1], repeat=n):
            pts.add(tuple(big if m else c for c, m in zip(p, mask)))
    if n == 1:
        return min(p[0] for p in support)
    inside = ConvexHull(np.array(sorted(pts), dtype=float)).volume
    return round((big ** n - inside) * factorial(n))


def newton_number(support, n):
    total = 0
    for mask in product([0, 1], repeat=n):
        idx = [i for i in range(n) if mask[i]]
        k = len(idx)
        sub = [tuple(p[i] for i in idx) for p in support if all(p[j] == 0 for j in range(n) if j not in idx)]
        total += (-1) ** (n - k) * under_volume(sub, k)
    return total


def main():
    a, b, c, d, e, x = (0, 0, 0), (0, 0, 3), (4, 0, 0), (2, 2, 2), (0, 6, 0), (3, 1, 1)
    print("5.2 hull vertices", hull_vertices([a, b, c, d, e, x]))
    print("5.2 faces through X", facets_through([a, b, c, d, e], x))

    f = [(7, 0), (4, 1), (2, 2), (1, 3), (0, 5)]
    g = f + [(5, 0), (1, 2)]
    big = 20
    clip = lambda s: [p for q in s for p in (q, (big, q[1]), (q[0], big), (big, big))]
    print("3.6 Minkowski facet normals", minkowski_normals(clip(f), clip(g)))

    # image lattice of (w, a) -> v.w + a for v = (3,0,2)/7 on Z^3 + Z
    v = [Fr(3, 7), Fr(0), Fr(2, 7)]
    gens = [v[0], v[1], v[2], Fr(1)]
    den = lcm(*[q.denominator for q in gens])
    step = Fr(gcd(*[int(q * den) for q in gens]), den)
    print("2.5 image step", step, "xi", 1 / step)

    hs = [(2, 0, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1)]
    for vv in [(1, 1), (Fr(1, 2), Fr(1, 2)), (2, 2)]:
        vals = [vv[0] * p[0] + vv[1] * p[1] + p[2] for p in hs]
        print("local polytope", vv, [p[:2] for p, q in zip(hs, vals) if q == min(vals)])

    eps = sympy.symbols("eps", positive=True)
    xs = sympy.symbols("x")
    print("x^2 + eps roots", sympy.solve(xs ** 2 + eps, xs))

    h2 = [(4, 0, 0, 0), (0, 4, 0, 0), (2, 0, 2, 0), (0, 2, 2, 0), (0, 0, 5, 0), (1, 0, 0, 1)]
    for v3, pts in sorted(lower_facets(h2, 3).items()):
        print("2.3 full facet", v3, pts)
    for keep in [(0, 1), (0, 2), (0,)]:
        sub = [tuple(p[i] for i in keep) + (p[3],) for p in h2 if all(p[j] == 0 for j in range(3) if j not in keep)]
        for vk, pts in sorted(lower_facets(sub, len(keep)).items()):
            print("2.3 facet on", keep, vk, pts)
    print("1D facet", lower_facets([(3, 0), (1, 1)], 1))

    # x-axis base of Fs={(4,0),(0,4)}, Gs += (2,0),(0,2): v = 1/2, xi = 2
    hq = [(4, 0, 0), (0, 4, 0), (4, 0, 1), (0, 4, 1), (2, 0, 1), (0, 2, 1)]
    base = lower_facets([(p[0], p[2]) for p in hq if p[1] == 0], 1)
    print("x-axis base", base)
    vb = list(base)[0][0]
    xi = vb.denominator
    imgs = sorted({(p[1], int(xi * (vb * p[0] + p[2]))) for p in hq if p[1] != 0})
    print("trace support (y, eps)", imgs, "NP vertices", hull_vertices(imgs + [(10, 10)]))

    print("nu 4.6", newton_number([(9, 0), (7, 1), (5, 2), (2, 4), (0, 7)], 2))
    print("nu 8.2", newton_number([(7, 0, 0), (0, 7, 0), (0, 0, 7), (2, 2, 2)], 3))
    print("nu {(2,0),(0,2)}", newton_number([(2, 0), (0, 2)], 2), "with (1,0):",
          newton_number([(2, 0), (0, 2), (1, 0)], 2))


if __name__ == "__main__":
    main()
