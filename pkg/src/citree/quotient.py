"""Artinian quotient algebras as graded vector spaces.

A built quotient carries the standard-monomial basis of every graded piece,
its Hilbert function, and exact multiplication matrices between pieces.
Ranks are computed exactly (fraction-free Bareiss); an optional modular
pass can certify full rank faster but never certifies a deficiency.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .ideals import Ideal, artinian_monomial_basis, artinian_offending_variable, normal_form
from .polyring import Polynomial


class NotArtinian(ValueError):
    def __init__(self, ideal, variable):
        super().__init__(
            f"quotient by {ideal} is not Artinian: no pure power of {variable} "
            "among the leading terms"
        )
        self.variable = variable


@dataclass(frozen=True)
class RationalMatrix:
    """Dense exact matrix: entries[r][c] is a Fraction."""

    rows: int
    cols: int
    entries: tuple

    @classmethod
    def from_rows(cls, rows):
        rows = tuple(tuple(Fraction(c) for c in row) for row in rows)
        return cls(len(rows), len(rows[0]) if rows else 0, rows)

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    def __mul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        out = []
        for r in range(self.rows):
            row = []
            for c in range(other.cols):
                acc = Fraction(0)
                for k in range(self.cols):
                    acc += self.entries[r][k] * other.entries[k][c]
                row.append(acc)
            out.append(tuple(row))
        return RationalMatrix(self.rows, other.cols, tuple(out))

    def apply(self, vector):
        if len(vector) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(
            sum((self.entries[r][k] * vector[k] for k in range(self.cols)), Fraction(0))
            for r in range(self.rows)
        )

    def to_json(self):
        return [[str(c) for c in row] for row in self.entries]


def rank_exact(M: RationalMatrix, prefilter_prime: int | None = None) -> int:
    """Exact rank over the rationals."""
    return linalg.rank(M.entries, prefilter_prime=prefilter_prime)


class QuotientAlgebra:
    """R/I with per-degree standard monomial bases, for Artinian I."""

    __slots__ = ("ideal", "basis_by_degree", "socle_degree", "_index", "_mult_cache")

    def __init__(self, ideal: Ideal, basis_by_degree):
        self.ideal = ideal
        self.basis_by_degree = basis_by_degree
        self.socle_degree = len(basis_by_degree) - 1
        self._index = {}
        for d, monos in enumerate(basis_by_degree):
            for pos, m in enumerate(monos):
                self._index[m] = (d, pos)
        self._mult_cache = {}

    @property
    def ring(self):
        return self.ideal.ring

    def dimension(self) -> int:
        return sum(len(b) for b in self.basis_by_degree)

    def hilbert_function(self):
        return tuple(len(b) for b in self.basis_by_degree)

    def graded_piece(self, d):
        if 0 <= d <= self.socle_degree:
            return self.basis_by_degree[d]
        return []

    def coordinates(self, p: Polynomial, degree: int):
        """Coordinate vector of the degree-d part of p mod the ideal."""
        rem = normal_form(p, self.ideal)
        vec = [Fraction(0)] * len(self.graded_piece(degree))
        for m, c in rem.terms:
            if sum(m) != degree:
                continue
            pos = self._index.get(m)
            if pos is None or pos[0] != degree:
                raise AssertionError("normal form left the standard basis")
            vec[pos[1]] = c
        return tuple(vec)


def build_quotient(I: Ideal) -> QuotientAlgebra:
    """Enumerate the standard monomial bases of an Artinian quotient."""
    basis = artinian_monomial_basis(I)
    if basis is None:
        raise NotArtinian(I, artinian_offending_variable(I))
    return QuotientAlgebra(I, basis)


def hilbert_function(A: QuotientAlgebra):
    return A.hilbert_function()


def mult_map_matrix(A: QuotientAlgebra, f: Polynomial, i: int, d: int | None = None) -> RationalMatrix:
    """Matrix of multiplication by homogeneous f from degree i to i + deg f.

    Rows are indexed by the target basis, columns by the source basis.
    """
    if f.is_zero():
        if d is None:
            d = 1
        return RationalMatrix.zero(len(A.graded_piece(i + d)), len(A.graded_piece(i)))
    if not f.is_homogeneous():
        raise ValueError("multiplier must be homogeneous")
    fd = f.degree()
    if d is not None and d != fd:
        raise ValueError(f"declared degree {d} differs from deg f = {fd}")
    if fd < 1:
        raise ValueError("multiplier must have positive degree")
    if not 0 <= i <= A.socle_degree - fd:
        raise ValueError(
            f"degree {i} out of range 0..{A.socle_degree - fd} for a degree-{fd} map"
        )
    key = (f, i)
    hit = A._mult_cache.get(key)
    if hit is not None:
        return hit
    source = A.graded_piece(i)
    target_len = len(A.graded_piece(i + fd))
    cols = []
    ring = A.ring
    for m in source:
        cols.append(A.coordinates(f * Polynomial.monomial(ring, m), i + fd))
    entries = tuple(tuple(col[r] for col in cols) for r in range(target_len))
    out = RationalMatrix(target_len, len(source), entries)
    A._mult_cache[key] = out
    return out
