#!/usr/bin/env python3
"""Independent oracle for the frozen values in tests/derived_values.inc.

Nothing here evaluates a closed-form coefficient formula. Weight vectors are
built directly from the sl(2) action on V(m) (x) V(n):

    f v_a = v_(a+1),  e v_a = a (m - a + 1) v_(a-1)

The highest weight vector of V(m+n-2k) is the kernel of e on the weight
space i + j = k, scaled so its i = 0 coordinate is binomial(m, k). Lowering
it p - k times gives the coordinate vector c; inverting the matrix of
coordinate columns for each weight space gives the Clebsch-Gordan rows. The
unitary coefficients come from sympy's SU(2) Clebsch-Gordan implementation
with j1 = m/2, j2 = n/2, J = (m+n)/2 - k, m1 = m/2 - i, m2 = n/2 - j.

Usage: python3 derive_values.py > ../derived_values.inc
"""

from fractions import Fraction
from math import comb

import sympy
from sympy.physics.quantum.cg import CG


def weight_basis(m, n, p):
    return [(i, p - i) for i in range(max(0, p - n), min(m, p) + 1)]


def apply_e(vec, m, n):
    out = {}
    for (i, j), a in vec.items():
        if i > 0:
            out[(i - 1, j)] = out.get((i - 1, j), 0) + a * i * (m - i + 1)
        if j > 0:
            out[(i, j - 1)] = out.get((i, j - 1), 0) + a * j * (n - j + 1)
    return {key: v for key, v in out.items() if v != 0}


def apply_f(vec, m, n):
    out = {}
    for (i, j), a in vec.items():
        if i < m:
            out[(i + 1, j)] = out.get((i + 1, j), 0) + a
        if j < n:
            out[(i, j + 1)] = out.get((i, j + 1), 0) + a
    return {key: v for key, v in out.items() if v != 0}


def highest_weight_vector(m, n, k):
    basis = weight_basis(m, n, k)
    target = weight_basis(m, n, k - 1) if k > 0 else []
    rows = []
    for t in target:
        row = []
        for b in basis:
            image = apply_e({b: 1}, m, n)
            row.append(image.get(t, 0))
        rows.append(row)
    if rows:
        kernel = sympy.Matrix(rows).nullspace()
        assert len(kernel) == 1
        v = [sympy.Rational(x) for x in kernel[0]]
    else:
        v = [sympy.Rational(1)]
    scale = sympy.Rational(comb(m, k)) / v[0]
    vec = {b: Fraction(int((x * scale).p), int((x * scale).q)) for b, x in zip(basis, v)}
    assert apply_e(vec, m, n) == {}
    return vec


class Oracle:
    def __init__(self, m, n):
        self.m, self.n = m, n
        self.coords = {}
        for k in range(min(m, n) + 1):
            vec = highest_weight_vector(m, n, k)
            for p in range(k, m + n - k + 1):
                for (i, j), a in vec.items():
                    assert a.denominator == 1
                    self.coords[(k, i, j)] = a.numerator
                vec = apply_f(vec, m, n)
        self.cg = {}
        for p in range(m + n + 1):
            basis = weight_basis(m, n, p)
            ks = [k for k in range(min(m, n) + 1) if k <= p <= m + n - k]
            a = sympy.Matrix([[self.coords.get((k, i, j), 0) for k in ks] for (i, j) in basis])
            inv = a.inv()
            for r, k in enumerate(ks):
                for col, (i, j) in enumerate(basis):
                    self.cg[(k, i, j)] = Fraction(int(inv[r, col].p), int(inv[r, col].q))

    def c(self, k, i, j):
        return self.coords.get((k, i, j), 0)


def unitary(m, n, k, i, j):
    half = sympy.Rational(1, 2)
    value = CG(m * half, m * half - i, n * half, n * half - j, (m + n) * half - k,
               (m + n) * half - i - j).doit()
    value = sympy.nsimplify(value)
    sign = 0 if value == 0 else (1 if value > 0 else -1)
    radicand = sympy.Rational(sympy.simplify(value ** 2))
    return sign, radicand


def fmt(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def window_tuples(m, n):
    for k in range(min(m, n) + 1):
        for i in range(m + 1):
            for j in range(n + 1):
                if k <= i + j <= m + n - k:
                    yield k, i, j


def main():
    print("// Generated by tests/oracle/derive_values.py; do not edit.")
    print("// clang-format off")
    print("inline const DerivedCoefficient kDerivedCoefficients[] = {")
    full = [(1, 1), (2, 5), (5, 3), (6, 6)]
    sampled = [(12, 11), (20, 17)]
    for m, n in full + sampled:
        o = Oracle(m, n)
        for idx, (k, i, j) in enumerate(window_tuples(m, n)):
            if (m, n) in sampled and idx % 37 != 0:
                continue
            print(f'  {{{m}, {n}, {k}, {i}, {j}, "{o.c(k, i, j)}", "{fmt(o.cg[(k, i, j)])}"}},')
    print("};")
    print()
    print("inline const DerivedNormalized kDerivedNormalized[] = {")
    for m, n in [(1, 1), (3, 4), (4, 2), (2, 2)]:
        for k, i, j in window_tuples(m, n):
            sign, radicand = unitary(m, n, k, i, j)
            print(f'  {{{m}, {n}, {k}, {i}, {j}, {sign}, "{fmt(Fraction(int(radicand.p), int(radicand.q)))}"}},')
    print("};")
    print("// clang-format on")


if __name__ == "__main__":
    main()
