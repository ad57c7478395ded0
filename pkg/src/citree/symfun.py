"""Symmetric polynomial generators and their derivative identities.

Conventions, fixed once for the whole package:

* e_i is ALWAYS the signed elementary symmetric polynomial, so that
  prod(z - x_j) = sum_i e_i z^(n-i).  The unsigned version is never
  exposed; every formula here uses the signed one.
* e_i = 0 for i > n.
* p_0 is the constant n (the number of x-variables).  This convention is
  load-bearing: it makes sum_{i=0}^n e_i p_(m-i) vanish identically for
  every m >= n, including m = n where the e_n p_0 term appears.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .polyring import Polynomial, RingSpec

GENERATOR_KINDS = ("e_signed", "p", "p_tilde", "e_tilde")

_memo: dict = {}


def falling_factorial(m: int, k: int) -> int:
    """m (m-1) ... (m-k+1), with the empty product equal to 1."""
    out = 1
    for j in range(k):
        out *= m - j
    return out


def symmetric_generator(kind: str, n: int, i: int) -> Polynomial:
    """The generator family members e_i, p_i, p~_i, e~_i.

    e_signed and p live in K[x1..xn]; p_tilde and e_tilde in K[x1..xn, z],
    treating z as an extra (n+1)-st variable on equal footing.
    """
    key = (kind, n, i)
    if key in _memo:
        return _memo[key]
    if n < 1:
        raise ValueError("need n >= 1")
    if i < 0:
        raise ValueError("need i >= 0")
    if kind == "e_signed":
        ring = RingSpec(n, has_z=False)
        if i > n:
            poly = Polynomial.zero(ring)
        else:
            sign = (-1) ** i
            acc = {}
            for combo in combinations(range(n), i):
                exps = tuple(1 if j in combo else 0 for j in range(n))
                acc[exps] = sign
            poly = Polynomial(ring, acc)
    elif kind == "p":
        ring = RingSpec(n, has_z=False)
        if i == 0:
            poly = Polynomial.constant(ring, n)
        else:
            acc = {}
            for j in range(n):
                exps = tuple(i if k == j else 0 for k in range(n))
                acc[exps] = 1
            poly = Polynomial(ring, acc)
    elif kind == "p_tilde":
        ring = RingSpec(n, has_z=True)
        p = symmetric_generator("p", n, i).extend(ring)
        zpow = Polynomial.variable(ring, "z") ** i
        poly = p + zpow
    elif kind == "e_tilde":
        ring = RingSpec(n, has_z=True)
        if i > n + 1:
            raise ValueError(f"e_tilde index {i} out of range for n={n}")
        # signed elementary symmetric in the n+1 variables x1..xn, z
        sign = (-1) ** i
        acc = {}
        for combo in combinations(range(n + 1), i):
            exps = tuple(1 if j in combo else 0 for j in range(n + 1))
            acc[exps] = sign
        poly = Polynomial(ring, acc)
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    _memo[key] = poly
    return poly


def boundary_polynomial(kind: str, n: int, b: int | None, k: int) -> Polynomial:
    """The z-derivatives of sum_i e_i z^(n-i) (kind f) or its degree-b
    truncation sum_{i<=b} e_i z^(b-i) (kind g).

    Both live in K[x1..xn, z]; f needs 0 <= k <= n, g needs 0 <= b < n and
    0 <= k <= b.
    """
    ring = RingSpec(n, has_z=True)
    if kind == "f":
        top = n
        if not 0 <= k <= n:
            raise ValueError(f"k={k} out of range 0..{n}")
    elif kind == "g":
        if b is None or not 0 <= b < n:
            raise ValueError(f"b={b} out of range 0..{n - 1}")
        top = b
        if not 0 <= k <= b:
            raise ValueError(f"k={k} out of range 0..{b}")
    else:
        raise ValueError(f"unknown boundary kind {kind!r}")
    key = ("boundary", kind, n, top, k)
    if key in _memo:
        return _memo[key]
    z = Polynomial.variable(ring, "z")
    acc = Polynomial.zero(ring)
    for i in range(top + 1):
        coeff = falling_factorial(top - i, k)
        if coeff == 0:
            continue
        e_i = symmetric_generator("e_signed", n, i).extend(ring)
        acc = acc + e_i * (z ** (top - i - k)) * coeff
    _memo[key] = acc
    return acc


def newton_check(n: int, k: int):
    """Whether k e_k + sum_{i=0}^{k-1} e_i p_{k-i} vanishes identically.

    Returns (ok, residual); the residual polynomial is zero exactly when
    the identity holds.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    ring = RingSpec(n, has_z=False)
    residual = symmetric_generator("e_signed", n, k) * k
    for i in range(k):
        residual = residual + symmetric_generator("e_signed", n, i) * symmetric_generator("p", n, k - i)
    return residual.is_zero(), residual


def vanishing_sum_residual(n: int, m: int) -> Polynomial:
    """sum_{i=0}^{n} e_i p_{m-i}; identically zero for every m >= n."""
    if m < n:
        raise ValueError("need m >= n")
    ring = RingSpec(n, has_z=False)
    acc = Polynomial.zero(ring)
    for i in range(n + 1):
        acc = acc + symmetric_generator("e_signed", n, i) * symmetric_generator("p", n, m - i)
    return acc


# --- matrix identity for the derivative recursion ---------------------------

def _row_times_matrix(row, matrix):
    out = []
    for j in range(len(matrix[0])):
        acc = row[0] * matrix[0][j]
        for i in range(1, len(row)):
            acc = acc + row[i] * matrix[i][j]
        out.append(acc)
    return out


def _dot(row, col):
    acc = row[0] * col[0]
    for i in range(1, len(row)):
        acc = acc + row[i] * col[i]
    return acc


def _triangular_data(n: int, size: int):
    """The row [e_{size-1},..,e_0], the unipotent z-power matrix and z itself."""
    ring = RingSpec(n, has_z=True)
    z = Polynomial.variable(ring, "z")
    e_row = [symmetric_generator("e_signed", n, size - 1 - j).extend(ring) for j in range(size)]
    zmat = [[z ** (i - j) if i >= j else Polynomial.zero(ring) for j in range(size)] for i in range(size)]
    return ring, z, e_row, zmat


def derivative_vector(n: int, size: int, k: int):
    """Column of k-th z-derivatives of 1, z, ..., z^(size-1)."""
    ring = RingSpec(n, has_z=True)
    z = Polynomial.variable(ring, "z")
    out = []
    for j in range(size):
        c = falling_factorial(j, k)
        out.append(z ** (j - k) * c if c else Polynomial.zero(ring))
    return out


def derivative_identity_check(kind: str, n: int, b: int | None, k: int) -> bool:
    """Check e . Z . u^(k) = f^(k+1)/(k+1) (kind f, matrices of size n) or
    the size-b analogue ending in g^(k+1)/(k+1) (kind g), as exact
    polynomial identities."""
    if kind == "f":
        if not 2 <= k <= n - 1:
            raise ValueError(f"k={k} out of range 2..{n - 1}")
        size = n
    elif kind == "g":
        if b is None or not 0 <= b < n:
            raise ValueError(f"b={b} out of range 0..{n - 1}")
        if not 2 <= k <= b - 1:
            raise ValueError(f"k={k} out of range 2..{b - 1}")
        size = b
    else:
        raise ValueError(f"unknown identity kind {kind!r}")
    ring, _, e_row, zmat = _triangular_data(n, size)
    u_k = derivative_vector(n, size, k)
    lhs = _dot(_row_times_matrix(e_row, zmat), u_k)
    rhs = boundary_polynomial(kind, n, b, k + 1) * Fraction(1, k + 1)
    return lhs == rhs
