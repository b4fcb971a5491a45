#!/usr/bin/env python3
"""Regenerates tests/reference_tables.hpp.

Tabulates high-precision reference values with mpmath (320-bit working
precision) and exact rational coefficient arithmetic with fractions.Fraction,
fully independent of the C++ code under test:

  * convergence tables err(n) = |f_n(1/2) - e^{i*2*(1/2)}| for the
    Taylor-matched coefficients and for the binomial coefficients, on the
    uniform grid h_j = 1 - 2j/n with a = 2,
  * the instantaneous frequency Im(f'(x)/f(x)) at x = 1/20 for n = 16 and
    n = 2 (uniform grid, a = 2).

Run from the repository root:  python3 tests/make_reference_tables.py
"""

from fractions import Fraction
from math import comb

import mpmath as mp

mp.mp.prec = 320

DIGITS = 40


def uniform_nodes(n):
    return [Fraction(n - 2 * j, n) for j in range(n + 1)]


def matched_coeffs(nodes, a):
    """X_j = prod_{k!=j} (h_k - a)/(h_k - h_j), exact."""
    xs = []
    for j, hj in enumerate(nodes):
        v = Fraction(1)
        for k, hk in enumerate(nodes):
            if k != j:
                v *= (hk - a) / (hk - hj)
        xs.append(v)
    return xs


def binomial_coeffs(n, a):
    return [
        comb(n, j) * Fraction(1 + a, 2) ** (n - j) * Fraction(1 - a, 2) ** j
        for j in range(n + 1)
    ]


def to_mpf(q):
    return mp.mpf(q.numerator) / mp.mpf(q.denominator)


def signal_value(coeffs, nodes, x):
    acc = mp.mpc(0)
    for c, h in zip(coeffs, nodes):
        theta = to_mpf(h * x)
        acc += to_mpf(c) * mp.expj(theta)
    return acc


def signal_derivative(coeffs, nodes, x):
    acc = mp.mpc(0)
    for c, h in zip(coeffs, nodes):
        theta = to_mpf(h * x)
        acc += to_mpf(c) * mp.mpc(0, to_mpf(h)) * mp.expj(theta)
    return acc


def fmt(v):
    return mp.nstr(v, DIGITS, strip_zeros=False)


def err_vs_limit(coeffs, nodes, x, a):
    f = signal_value(coeffs, nodes, x)
    limit = mp.expj(to_mpf(Fraction(a) * x))
    return abs(f - limit)


def local_frequency(coeffs, nodes, x):
    f = signal_value(coeffs, nodes, x)
    fp = signal_derivative(coeffs, nodes, x)
    return (fp / f).imag


def main():
    a = 2
    x_half = Fraction(1, 2)
    x_freq = Fraction(1, 20)
    ns = [4, 8, 16, 24, 32]

    # Self-checks on the exact coefficient arithmetic.
    assert matched_coeffs(uniform_nodes(2), a) == [3, -3, 1]
    assert binomial_coeffs(2, a) == [Fraction(9, 4), Fraction(-3, 2), Fraction(1, 4)]
    assert matched_coeffs([Fraction(1), Fraction(-1)], a) == [
        Fraction(3, 2),
        Fraction(-1, 2),
    ]
    for n in (1, 2, 5, 9):
        xs = matched_coeffs(uniform_nodes(n), a)
        for p in range(n + 1):
            assert sum(
                xj * h**p for xj, h in zip(xs, uniform_nodes(n))
            ) == Fraction(a) ** p

    rows_new = []
    rows_classic = []
    for n in ns:
        nodes = uniform_nodes(n)
        rows_new.append((n, err_vs_limit(matched_coeffs(nodes, a), nodes, x_half, a)))
        rows_classic.append((n, err_vs_limit(binomial_coeffs(n, a), nodes, x_half, a)))

    lf16 = local_frequency(matched_coeffs(uniform_nodes(16), a), uniform_nodes(16), x_freq)
    lf2 = local_frequency(matched_coeffs(uniform_nodes(2), a), uniform_nodes(2), x_freq)
    assert lf16 > 1 and lf2 > 1

    l1_24 = sum(abs(c) for c in matched_coeffs(uniform_nodes(24), a))
    l1_40 = sum(abs(c) for c in matched_coeffs(uniform_nodes(40), a))

    out = []
    out.append("// Generated by tests/make_reference_tables.py; do not edit by hand.")
    out.append("//")
    out.append("// Reference values tabulated with mpmath at 320-bit precision and")
    out.append("// exact rational coefficients, independent of the library code.")
    out.append("#pragma once")
    out.append("")
    out.append("namespace superosc::testing {")
    out.append("")
    out.append("struct ConvergenceRow {")
    out.append("  int n;")
    out.append("  const char* abs_err;  // |f_n(1/2) - e^{i}|, 40 significant digits")
    out.append("};")
    out.append("")
    out.append("// Taylor-matched coefficients, uniform grid, a = 2, x = 1/2.")
    out.append("inline constexpr ConvergenceRow kMatchedConvergence[] = {")
    for n, v in rows_new:
        out.append(f'    {{{n}, "{fmt(v)}"}},')
    out.append("};")
    out.append("")
    out.append("// Binomial coefficients, uniform grid, a = 2, x = 1/2.")
    out.append("inline constexpr ConvergenceRow kBinomialConvergence[] = {")
    for n, v in rows_classic:
        out.append(f'    {{{n}, "{fmt(v)}"}},')
    out.append("};")
    out.append("")
    out.append("// Im(f'(x)/f(x)) at x = 1/20, uniform grid, a = 2.")
    out.append(f'inline constexpr const char* kLocalFreqN16 = "{fmt(lf16)}";')
    out.append(f'inline constexpr const char* kLocalFreqN2 = "{fmt(lf2)}";')
    out.append("")
    out.append("}  // namespace superosc::testing")
    print("\n".join(out))

    import sys

    print(f"log2 l1(n=24) = {mp.log(to_mpf(l1_24), 2)}", file=sys.stderr)
    print(f"log2 l1(n=40) = {mp.log(to_mpf(l1_40), 2)}", file=sys.stderr)
    print(f"err_new = {[(n, mp.nstr(v, 8)) for n, v in rows_new]}", file=sys.stderr)
    print(f"err_classic = {[(n, mp.nstr(v, 8)) for n, v in rows_classic]}", file=sys.stderr)
    print(f"lf16 = {mp.nstr(lf16, 25)}  lf2 = {mp.nstr(lf2, 25)}", file=sys.stderr)


if __name__ == "__main__":
    main()
