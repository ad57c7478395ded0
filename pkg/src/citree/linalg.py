"""Exact linear algebra over the rationals: rank, kernel, row reduction.

The rank path is fraction-free (Bareiss) on integer rows; rational input is
cleared row by row first.  An optional modular pass can certify full rank
quickly, but any claimed deficiency is always re-verified exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _int_rows(rows):
    """Clear denominators row by row; scaling rows does not change rank."""
    out = []
    for row in rows:
        den = 1
        for c in row:
            c = Fraction(c)
            den = den * c.denominator // gcd(den, c.denominator)
        out.append([int(Fraction(c) * den) for c in row])
    return out


def bareiss_rank(rows) -> int:
    """Exact rank of an integer matrix via fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, nrows):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        for r in range(row + 1, nrows):
            factor = m[r][col]
            for c in range(col + 1, ncols):
                m[r][c] = (m[r][c] * pv - factor * m[row][c]) // prev
            m[r][col] = 0
        prev = pv
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def rank_mod_p(rows, p: int):
    """Rank of the matrix reduced mod p, or None if a denominator vanishes.

    rank mod p never exceeds the rational rank, so a full modular rank
    certifies full rank exactly.
    """
    m = []
    for row in rows:
        mr = []
        for c in row:
            c = Fraction(c)
            if c.denominator % p == 0:
                return None
            mr.append(c.numerator * pow(c.denominator, -1, p) % p)
        m.append(mr)
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, nrows):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = pow(m[row][col], -1, p)
        for r in range(row + 1, nrows):
            if m[r][col]:
                factor = m[r][col] * inv % p
                m[r] = [(a - factor * b) % p for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def rank(rows, prefilter_prime: int | None = None) -> int:
    """Exact rank over the rationals, optionally prefiltered mod a prime."""
    rows = list(rows)
    if not rows or not len(rows[0]):
        return 0
    if prefilter_prime:
        full = min(len(rows), len(rows[0]))
        modular = rank_mod_p(rows, prefilter_prime)
        if modular == full:
            return full
    return bareiss_rank(_int_rows(rows))


def rref(rows):
    """Reduced row echelon form over the rationals; returns (rows, pivots)."""
    m = [[Fraction(c) for c in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, len(m)):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = 1 / m[row][col]
        m[row] = [c * inv for c in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return [r for r in m if any(r)], pivots


def kernel_basis(rows, ncols=None):
    """Basis of the right kernel {v : M v = 0}, as tuples of Fractions."""
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in zip(reduced, pivots):
            v[pc] = -r[f]
        basis.append(tuple(v))
    return basis


def row_space_basis(rows):
    """Independent spanning subset data: rref rows (canonical basis)."""
    reduced, pivots = rref(rows)
    return reduced, pivots
