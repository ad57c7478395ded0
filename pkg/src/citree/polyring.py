"""Sparse multivariate polynomials over the rationals.

Rings are K[x1..xn] or K[x1..xn, z] with the graded reverse lexicographic
order on monomials, variable order x1 > x2 > ... > xn > z.  All coefficients
are exact `fractions.Fraction` values; there is no floating point anywhere
in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Coeff = Union[int, Fraction]


class RingMismatch(ValueError):
    """Operands live in incompatible polynomial rings."""


class ParseError(ValueError):
    """Polynomial text that does not match the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at column {position}")
        self.position = position


@dataclass(frozen=True)
class RingSpec:
    """A polynomial ring K[x1..xn] or K[x1..xn, z].

    The monomial order is graded reverse lexicographic with the variable
    order x1 > x2 > ... > xn > z; z, when present, is always cheapest.
    """

    nvars: int
    has_z: bool = False

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("ring needs at least one x-variable")

    @property
    def total_vars(self) -> int:
        return self.nvars + (1 if self.has_z else 0)

    @property
    def var_names(self) -> tuple:
        names = tuple(f"x{i + 1}" for i in range(self.nvars))
        return names + ("z",) if self.has_z else names

    def var_index(self, name: str) -> int:
        try:
            return self.var_names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r} in {self}") from None

    def embeds_in(self, other: "RingSpec") -> bool:
        """x_i -> x_i and z -> z is a ring embedding into `other`."""
        return self.nvars <= other.nvars and (other.has_z or not self.has_z)

    def __str__(self):
        return "K[" + ", ".join(self.var_names) + "]"


# --- monomials ------------------------------------------------------------
# A monomial is a tuple of non-negative exponents, one per ring variable.

def mono_degree(exps) -> int:
    return sum(exps)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b) -> bool:
    """Whether a | b, i.e. the exponents of a are bounded by those of b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def grevlex_key(exps):
    """Sort key realizing grevlex: key(m1) > key(m2) iff m1 > m2."""
    return (sum(exps),) + tuple(-e for e in reversed(exps))


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients.

    Terms are stored sorted descending in the grevlex order, so equality
    and hashing are structural on the canonical form.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingSpec, coeffs: Mapping[tuple, Coeff] | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        merged: dict = {}
        width = ring.total_vars
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != width:
                raise ValueError(f"exponent vector {exps} has wrong arity for {ring}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = Fraction(c)
            if c:
                acc = merged.get(exps, 0) + c
                if acc:
                    merged[exps] = acc
                else:
                    del merged[exps]
        object.__setattr__(self, "ring", ring)
        object.__setattr__(
            self,
            "terms",
            tuple(sorted(merged.items(), key=lambda t: grevlex_key(t[0]), reverse=True)),
        )
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, ring: RingSpec) -> "Polynomial":
        return cls(ring)

    @classmethod
    def one(cls, ring: RingSpec) -> "Polynomial":
        return cls.constant(ring, 1)

    @classmethod
    def constant(cls, ring: RingSpec, c: Coeff) -> "Polynomial":
        return cls(ring, {(0,) * ring.total_vars: Fraction(c)})

    @classmethod
    def variable(cls, ring: RingSpec, var: int | str) -> "Polynomial":
        i = ring.var_index(var) if isinstance(var, str) else var
        if not 0 <= i < ring.total_vars:
            raise ValueError(f"variable index {i} out of range for {ring}")
        exps = tuple(1 if j == i else 0 for j in range(ring.total_vars))
        return cls(ring, {exps: 1})

    @classmethod
    def monomial(cls, ring: RingSpec, exps, c: Coeff = 1) -> "Polynomial":
        return cls(ring, {tuple(exps): Fraction(c)})

    # -- queries ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, exps) -> Fraction:
        exps = tuple(exps)
        for m, c in self.terms:
            if m == exps:
                return c
        return Fraction(0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {mono_degree(m) for m, _ in self.terms}
        return len(degs) == 1

    def leading_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def terms_dict(self) -> dict:
        return dict(self.terms)

    def uses_variable(self, var: int | str) -> bool:
        i = self.ring.var_index(var) if isinstance(var, str) else var
        return any(m[i] for m, _ in self.terms)

    # -- arithmetic ----------------------------------------------------------
    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        self._check_ring(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = acc.get(m, Fraction(0)) + c
        return Polynomial(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial.zero(self.ring)
            return Polynomial(self.ring, {m: c * other for m, c in self.terms})
        self._check_ring(other)
        acc: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                acc[m] = acc.get(m, Fraction(0)) + c1 * c2
        return Polynomial(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.one(self.ring)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def partial_derivative(self, var: int | str) -> "Polynomial":
        """Formal partial derivative with respect to one variable."""
        i = self.ring.var_index(var) if isinstance(var, str) else var
        if not 0 <= i < self.ring.total_vars:
            raise ValueError(f"variable index {i} out of range for {self.ring}")
        acc = {}
        for m, c in self.terms:
            e = m[i]
            if e:
                acc[m[:i] + (e - 1,) + m[i + 1:]] = c * e
        return Polynomial(self.ring, acc)

    def substitute(self, var: int | str, value: "Polynomial") -> "Polynomial":
        """Replace one variable by a polynomial, expanding to canonical form."""
        if self.ring.embeds_in(value.ring):
            ring = value.ring
        elif value.ring.embeds_in(self.ring):
            ring = self.ring
        else:
            raise RingMismatch(f"{value.ring} does not embed in {self.ring}")
        i = self.ring.var_index(var) if isinstance(var, str) else var
        p = self.extend(ring)
        v = value.extend(ring)
        i = ring.var_index(self.ring.var_names[i])
        powers = {0: Polynomial.one(ring)}
        out = Polynomial.zero(ring)
        for m, c in p.terms:
            e = m[i]
            if e not in powers:
                powers[e] = v ** e
            rest = Polynomial.monomial(ring, m[:i] + (0,) + m[i + 1:], c)
            out = out + rest * powers[e]
        return out

    def extend(self, ring: RingSpec) -> "Polynomial":
        """Reinterpret in a larger ring via x_i -> x_i, z -> z."""
        if ring == self.ring:
            return self
        old = self.ring
        if not old.embeds_in(ring):
            raise RingMismatch(f"{old} does not embed in {ring}")
        pad = (0,) * (ring.nvars - old.nvars)
        acc = {}
        for m, c in self.terms:
            xs = m[: old.nvars]
            ztail = m[old.nvars:]
            new = xs + pad + (ztail if ring.has_z else ())
            if ring.has_z and not old.has_z:
                new = xs + pad + (0,)
            acc[new] = c
        return Polynomial(ring, acc)

    def contract(self, ring: RingSpec) -> "Polynomial":
        """Reinterpret in a smaller ring; the dropped variables must be unused."""
        if ring == self.ring:
            return self
        old = self.ring
        if not ring.embeds_in(old):
            raise RingMismatch(f"{ring} does not embed in {old}")
        acc = {}
        for m, c in self.terms:
            xs = m[: old.nvars]
            zexp = m[old.nvars] if old.has_z else 0
            if any(xs[ring.nvars:]) or (zexp and not ring.has_z):
                raise RingMismatch(f"term uses a variable outside {ring}")
            new = xs[: ring.nvars] + ((zexp,) if ring.has_z else ())
            acc[new] = c
        return Polynomial(ring, acc)

    # -- canonical form ------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ring, self.terms)))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.ring}, {format_polynomial(self)})"


# --- text format -----------------------------------------------------------
# Grammar: rationals as `a` or `a/b`, variables x1..x<n> and z, operators
# + - * ^; juxtaposition is not allowed.  Example: 3/2*x1^2*z - x2

def _format_monomial(names, exps) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    names = p.ring.var_names
    pieces = []
    for pos, (m, c) in enumerate(p.terms):
        mono = _format_monomial(names, m)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        if pos == 0:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"{' + ' if c > 0 else ' - '}{body}")
    return "".join(pieces)


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", int(text[i:j]), i + 1))
            i = j
            continue
        if ch.isalpha():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("var", text[i:j], i + 1))
            i = j
            continue
        if ch in "+-*^/()":
            tokens.append((ch, ch, i + 1))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i + 1)
    tokens.append(("end", None, n + 1))
    return tokens


class _Parser:
    def __init__(self, tokens, ring: RingSpec):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self) -> Polynomial:
        kind, _, col = self.peek()
        sign = 1
        if kind in ("+", "-"):
            self.advance()
            sign = -1 if kind == "-" else 1
        out = self.term() * sign
        while True:
            kind, _, _ = self.peek()
            if kind == "+":
                self.advance()
                out = out + self.term()
            elif kind == "-":
                self.advance()
                out = out - self.term()
            else:
                return out

    def term(self) -> Polynomial:
        out = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            out = out * self.factor()
        return out

    def factor(self) -> Polynomial:
        base = self.base()
        if self.peek()[0] == "^":
            self.advance()
            kind, val, col = self.advance()
            if kind != "num":
                raise ParseError("expected integer exponent", col)
            return base ** val
        return base

    def base(self) -> Polynomial:
        kind, val, col = self.advance()
        if kind == "num":
            if self.peek()[0] == "/":
                self.advance()
                k2, v2, c2 = self.advance()
                if k2 != "num":
                    raise ParseError("expected integer denominator", c2)
                if v2 == 0:
                    raise ParseError("zero denominator", c2)
                return Polynomial.constant(self.ring, Fraction(val, v2))
            return Polynomial.constant(self.ring, val)
        if kind == "var":
            if val not in self.ring.var_names:
                raise ParseError(f"unknown variable {val!r}", col)
            return Polynomial.variable(self.ring, val)
        if kind == "(":
            out = self.expr()
            k2, _, c2 = self.advance()
            if k2 != ")":
                raise ParseError("expected ')'", c2)
            return out
        if kind == "-":
            return -self.base()
        raise ParseError("expected a rational, a variable or '('", col)


def parse_polynomial(text: str, ring: RingSpec) -> Polynomial:
    """Parse the text grammar into a canonical Polynomial."""
    parser = _Parser(_tokenize(text), ring)
    out = parser.expr()
    kind, _, col = parser.peek()
    if kind != "end":
        raise ParseError("trailing input", col)
    return out
