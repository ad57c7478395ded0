"""Groebner-basis engine and ideal calculus over the rationals.

Ideals carry homogeneous generators and a lazily computed reduced Groebner
basis under the ring's grevlex order; the reduced basis is canonical
(primitive integer coefficients, positive leading coefficient, sorted), so
two ideals are equal exactly when their reduced bases coincide.

Colon ideals are computed three ways, all cross-checked in the test suite:
an elimination (auxiliary variable) method for general quotients, a
kernel-lifting method on standard monomials for Artinian quotients, and a
basis-rewriting shortcut for division by the ring's cheapest variable.
"""

from __future__ import annotations

import heapq
import threading
from collections import namedtuple
from fractions import Fraction
from math import gcd

from . import linalg
from .polyring import Polynomial, RingMismatch, RingSpec, grevlex_key

# --- monomial orders on encoded keys ----------------------------------------
# A key is a tuple comparing like the monomial it encodes; multiplication of
# monomials is componentwise addition of keys.


class _Grevlex:
    """key(e) = (deg, -e_k, ..., -e_1): tuple order = grevlex."""

    __slots__ = ("width",)
    prunable = True

    def __init__(self, width):
        self.width = width

    def key(self, exps):
        return (sum(exps),) + tuple(-e for e in reversed(exps))

    def decode(self, key):
        return tuple(-e for e in reversed(key[1:]))


class _Elim:
    """One auxiliary variable in slot 0, eliminated before grevlex on the rest."""

    __slots__ = ("width",)
    prunable = False

    def __init__(self, width):
        self.width = width  # number of non-auxiliary variables

    def key(self, exps):
        rest = exps[1:]
        return (exps[0], sum(rest)) + tuple(-e for e in reversed(rest))

    def decode(self, key):
        return (key[0],) + tuple(-e for e in reversed(key[2:]))


def _kadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _ksub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _lcm_exps(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class _BasisElem:
    __slots__ = ("terms", "lm_key", "lm_exps", "lc")

    def __init__(self, terms, order):
        self.terms = terms
        self.lm_key = terms[0][0]
        self.lm_exps = order.decode(self.lm_key)
        self.lc = terms[0][1]


# --- core polynomial arithmetic ---------------------------------------------
# A core polynomial is a list of (key, int coefficient) pairs sorted
# descending by key.


def _content(terms, start=0):
    g = 0
    for i in range(start, len(terms)):
        g = gcd(g, terms[i][1])
        if g == 1:
            return 1
    return g


def _normalize(terms):
    """Primitive with positive leading coefficient."""
    if not terms:
        return terms
    g = _content(terms)
    if terms[0][1] < 0:
        g = -g
    if g != 1:
        terms = [(k, c // g) for k, c in terms]
    return terms


def _axpy_shift(a, p, i0, b, q, j0, shift):
    """a*p[i0:] + b*(q[j0:] * monomial(shift)), merged descending."""
    out = []
    i, j = i0, j0
    np_, nq = len(p), len(q)
    qk = None
    if j < nq:
        qk = _kadd(q[j][0], shift)
    while i < np_ and j < nq:
        ki, ci = p[i]
        if ki == qk:
            c = a * ci + b * q[j][1]
            if c:
                out.append((ki, c))
            i += 1
            j += 1
            qk = _kadd(q[j][0], shift) if j < nq else None
        elif ki > qk:
            out.append((ki, a * ci))
            i += 1
        else:
            out.append((qk, b * q[j][1]))
            j += 1
            qk = _kadd(q[j][0], shift) if j < nq else None
    while i < np_:
        out.append((p[i][0], a * p[i][1]))
        i += 1
    while j < nq:
        out.append((_kadd(q[j][0], shift), b * q[j][1]))
        j += 1
    return out


def _reduce_core(p, basis, order):
    """Full division remainder of a core polynomial by the basis.

    Returns a list of (key, Fraction) pairs, descending: the true normal
    form of (integer core) p, linear in p.  Reduction itself is
    fraction-free; the running scale is divided out on emission.
    """
    out = []
    work = list(p)
    start = 0
    scale = Fraction(1)
    steps = 0
    while start < len(work):
        klead, clead = work[start]
        elead = order.decode(klead)
        hit = None
        for be in basis:
            if _divides(be.lm_exps, elead):
                hit = be
                break
        if hit is None:
            out.append((klead, clead / scale))
            start += 1
            continue
        shift = _ksub(klead, hit.lm_key)
        g = gcd(clead, hit.lc)
        a = hit.lc // g
        b = clead // g
        work = _axpy_shift(a, work, start + 1, -b, hit.terms, 1, shift)
        start = 0
        scale *= a
        steps += 1
        if steps % 16 == 0 and work:
            cont = _content(work)
            if cont > 1:
                work = [(k, c // cont) for k, c in work]
                scale /= cont
    return out


def _fractions_to_primitive(frac_terms):
    """Scale a descending (key, Fraction) list to primitive positive ints."""
    if not frac_terms:
        return []
    den = 1
    for _, c in frac_terms:
        den = den * c.denominator // gcd(den, c.denominator)
    terms = [(k, int(c * den)) for k, c in frac_terms]
    return _normalize(terms)


def _reduce_to_primitive(p, basis, order):
    return _fractions_to_primitive(_reduce_core(p, basis, order))


def _spoly(f, g, order):
    l = _lcm_exps(f.lm_exps, g.lm_exps)
    lk = order.key(l)
    sf = _ksub(lk, f.lm_key)
    sg = _ksub(lk, g.lm_key)
    d = gcd(f.lc, g.lc)
    a = g.lc // d
    b = f.lc // d
    # a * x^sf * f - b * x^sg * g; the heads cancel by construction
    return _axpy_shift(a, [(_kadd(k, sf), c) for k, c in f.terms], 1,
                       -b, g.terms, 1, sg)


# --- standard monomials ------------------------------------------------------


def _pure_power_caps(lm_exps_list, width):
    """Per-variable pure-power exponents in a monomial ideal, or None."""
    caps = [None] * width
    for lm in lm_exps_list:
        nz = [v for v in range(width) if lm[v]]
        if len(nz) == 1:
            v = nz[0]
            if caps[v] is None or lm[v] < caps[v]:
                caps[v] = lm[v]
        elif not nz:
            return [0] * width  # unit ideal
    return caps


def _has_standard_monomial(lms, width, d):
    """Whether some degree-d monomial avoids all the leading monomials."""
    cand = [l for l in lms if sum(l) <= d]

    def rec(pos, remaining, alive):
        if not alive:
            return True
        if pos == width - 1:
            return all(l[pos] > remaining for l in alive)
        for e in range(remaining, -1, -1):
            na = [l for l in alive if l[pos] <= e]
            if rec(pos + 1, remaining - e, na):
                return True
        return False

    return rec(0, d, cand)


def standard_monomials_of_degree(lms, width, d):
    """Degree-d monomials outside the monomial ideal, descending grevlex."""
    cand = [l for l in lms if sum(l) <= d]
    out = []

    def rec(pos, remaining, prefix, alive):
        if pos == width - 1:
            m = prefix + (remaining,)
            if all(l[pos] > remaining for l in alive):
                out.append(m)
            return
        for e in range(remaining, -1, -1):
            na = [l for l in alive if l[pos] <= e]
            rec(pos + 1, remaining - e, prefix + (e,), na)

    rec(0, d, (), cand)
    out.sort(key=grevlex_key, reverse=True)
    return out


# --- Buchberger ---------------------------------------------------------------


class _GBState:
    __slots__ = ("order", "G", "pairs", "heap", "seq")

    def __init__(self, order):
        self.order = order
        self.G = []
        self.pairs = {}
        self.heap = []
        self.seq = 0


def _add_element(st: _GBState, terms):
    """Gebauer-Moeller pair update for one new basis element."""
    order = st.order
    h = _BasisElem(terms, order)
    t = len(st.G)
    G = st.G
    lcms = {i: _lcm_exps(G[i].lm_exps, h.lm_exps) for i in range(t)}

    remaining = sorted(range(t), key=lambda i: (sum(lcms[i]), order.key(lcms[i])))
    kept = []
    while remaining:
        i = remaining.pop(0)
        li = lcms[i]
        if _coprime(G[i].lm_exps, h.lm_exps) or not (
            any(_divides(lcms[j], li) for j in remaining)
            or any(_divides(lcms[j], li) for j in kept)
        ):
            kept.append(i)
    new_pairs = [i for i in kept if not _coprime(G[i].lm_exps, h.lm_exps)]

    # Buchberger's chain criterion against pending pairs
    hlm = h.lm_exps
    for (i, j), l in list(st.pairs.items()):
        if (
            _divides(hlm, l)
            and _lcm_exps(G[i].lm_exps, hlm) != l
            and _lcm_exps(G[j].lm_exps, hlm) != l
        ):
            del st.pairs[(i, j)]

    st.G.append(h)
    for i in new_pairs:
        st.pairs[(i, t)] = lcms[i]
        st.seq += 1
        heapq.heappush(st.heap, (order.key(lcms[i]), st.seq, i, t))


def _buchberger(cores, order, max_steps=500000):
    st = _GBState(order)
    seeds = [c for c in cores if c]
    seeds.sort(key=lambda c: c[0][0])
    for core in seeds:
        r = _reduce_to_primitive(core, st.G, order)
        if r:
            _add_element(st, r)

    # For homogeneous Artinian ideals, any S-pair whose lcm degree admits no
    # standard monomial reduces to zero, so such pairs are dropped.
    empty_from = None
    std_cache = {}
    steps = 0
    while st.heap:
        _, _, i, j = heapq.heappop(st.heap)
        l = st.pairs.pop((i, j), None)
        if l is None:
            continue
        if order.prunable:
            d = sum(l)
            if empty_from is not None and d >= empty_from:
                continue
            key = (len(st.G), d)
            known = std_cache.get(key)
            if known is None:
                lms = [g.lm_exps for g in st.G]
                caps = _pure_power_caps(lms, order.width)
                if caps is not None and all(c is not None for c in caps):
                    known = _has_standard_monomial(lms, order.width, d)
                else:
                    known = True
                std_cache[key] = known
            if not known:
                empty_from = d
                continue
        s = _spoly(st.G[i], st.G[j], order)
        r = _reduce_to_primitive(s, st.G, order)
        if r:
            _add_element(st, r)
        steps += 1
        if steps > max_steps:
            raise RuntimeError("Groebner computation exceeded the step budget")
    return _interreduce(st.G, order)


def _interreduce(G, order):
    """Minimal generators, fully tail-reduced: the reduced Groebner basis."""
    keep = []
    for g in sorted(G, key=lambda g: g.lm_key):
        if not any(_divides(k.lm_exps, g.lm_exps) for k in keep):
            keep.append(g)
    out = []
    for idx, g in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        r = _reduce_to_primitive(g.terms, others, order)
        out.append(_BasisElem(r, order))
    out.sort(key=lambda g: g.lm_key)
    return out


# --- public Ideal ------------------------------------------------------------

_GB_CACHE: dict = {}


def _poly_to_core_den(poly: Polynomial, order, t_exp=None):
    """Clear denominators and encode; with t_exp, prepend an auxiliary slot.

    Returns (terms, den) with terms = den * poly in core form.
    """
    den = 1
    for _, c in poly.terms:
        den = den * c.denominator // gcd(den, c.denominator)
    terms = []
    for m, c in poly.terms:
        coeff = int(c * den)
        if t_exp is None:
            terms.append((order.key(m), coeff))
        else:
            terms.append((order.key((t_exp,) + m), coeff))
    terms.sort(reverse=True)
    return terms, den


def _poly_to_core(poly: Polynomial, order, t_exp=None):
    return _poly_to_core_den(poly, order, t_exp)[0]


def _core_to_poly(terms, ring: RingSpec, order, divisor=1):
    acc = {}
    for k, c in terms:
        acc[order.decode(k)] = Fraction(c) / divisor
    return Polynomial(ring, acc)


class Ideal:
    """A homogeneous ideal with cached reduced Groebner basis."""

    __slots__ = ("ring", "generators", "_lock", "_elems", "_gb_polys", "_basis")

    def __init__(self, ring: RingSpec, generators):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise TypeError("generators must be Polynomial values")
            if g.ring != ring:
                raise RingMismatch(f"generator ring {g.ring} differs from {ring}")
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
            gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "_lock", threading.Lock())
        object.__setattr__(self, "_elems", None)
        object.__setattr__(self, "_gb_polys", None)
        object.__setattr__(self, "_basis", None)

    def __setattr__(self, *a):
        raise AttributeError("Ideal is immutable")

    @classmethod
    def from_strings(cls, ring: RingSpec, texts):
        from .polyring import parse_polynomial

        return cls(ring, [parse_polynomial(t, ring) for t in texts])

    def _order(self):
        return _Grevlex(self.ring.total_vars)

    def _gb_elems(self):
        if self._elems is None:
            with self._lock:
                if self._elems is None:
                    cache_key = (self.ring, tuple(g.terms for g in self.generators))
                    hit = _GB_CACHE.get(cache_key)
                    if hit is None:
                        order = self._order()
                        cores = [_poly_to_core(g, order) for g in self.generators]
                        hit = _buchberger(cores, order)
                        _GB_CACHE[cache_key] = hit
                    object.__setattr__(self, "_elems", hit)
        return self._elems

    def groebner_basis(self):
        """The reduced Groebner basis, canonical for the ideal."""
        if self._gb_polys is None:
            order = self._order()
            polys = tuple(_core_to_poly(g.terms, self.ring, order) for g in self._gb_elems())
            object.__setattr__(self, "_gb_polys", polys)
        return self._gb_polys

    def leading_exponents(self):
        return [g.lm_exps for g in self._gb_elems()]

    def is_unit(self) -> bool:
        elems = self._gb_elems()
        return bool(elems) and all(e == 0 for e in elems[0].lm_exps)

    def is_zero_ideal(self) -> bool:
        return not self._gb_elems()

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.groebner_basis() == other.groebner_basis()

    def __hash__(self):
        return hash((self.ring, self.groebner_basis()))

    def __str__(self):
        inside = ", ".join(str(g) for g in self.generators) or "0"
        return f"({inside})"

    def canonical_str(self) -> str:
        """Render through the reduced basis, identical for equal ideals."""
        inside = ", ".join(str(g) for g in self.groebner_basis()) or "0"
        return f"({inside})"

    def __repr__(self):
        return f"Ideal({self.ring}, {self})"


def groebner_basis(I: Ideal):
    return I.groebner_basis()


def normal_form(p: Polynomial, I: Ideal) -> Polynomial:
    """Remainder of p modulo the reduced basis; zero exactly on members."""
    if p.ring != I.ring:
        raise RingMismatch(f"{p.ring} vs {I.ring}")
    order = I._order()
    core, den = _poly_to_core_den(p, order)
    rem = _reduce_core(core, I._gb_elems(), order)
    acc = {order.decode(k): c / den for k, c in rem}
    return Polynomial(I.ring, acc)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        raise RingMismatch(f"{I.ring} vs {J.ring}")
    return I == J


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise RingMismatch(f"{I.ring} vs {J.ring}")
    return Ideal(I.ring, I.generators + J.generators)


def _last_variable(ring: RingSpec) -> int:
    return ring.total_vars - 1


def _exact_divide(p: Polynomial, f: Polynomial) -> Polynomial:
    """Quotient p/f for exactly divisible p; raises if division fails."""
    ring = p.ring
    out = {}
    rest = p
    flm = f.leading_monomial()
    flc = f.leading_coefficient()
    while not rest.is_zero():
        m = rest.leading_monomial()
        c = rest.leading_coefficient()
        if not all(a >= b for a, b in zip(m, flm)):
            raise ArithmeticError(f"{f} does not divide {p}")
        qm = tuple(a - b for a, b in zip(m, flm))
        qc = c / flc
        out[qm] = out.get(qm, Fraction(0)) + qc
        rest = rest - Polynomial.monomial(ring, qm, qc) * f
    return Polynomial(ring, out)


def _colon_by_last_variable(I: Ideal) -> Ideal:
    """(I : v) for the cheapest variable v, by rewriting the reduced basis.

    For a homogeneous ideal in grevlex with v cheapest, v | lm(g) forces
    v | g, and {g/v : v | lm g} + {g : otherwise} is a Groebner basis of
    the colon ideal.
    """
    order = I._order()
    slot = _last_variable(I.ring)
    vkey = order.key(tuple(1 if i == slot else 0 for i in range(I.ring.total_vars)))
    elems = []
    for g in I._gb_elems():
        if g.lm_exps[slot] > 0:
            shifted = [(_ksub(k, vkey), c) for k, c in g.terms]
            if any(min(order.decode(k)) < 0 for k, _ in shifted):
                raise AssertionError("division by the cheapest variable failed")
            elems.append(_BasisElem(shifted, order))
        else:
            elems.append(g)
    reduced = _interreduce(elems, order)
    out = Ideal(I.ring, [_core_to_poly(g.terms, I.ring, order) for g in reduced])
    with out._lock:
        object.__setattr__(out, "_elems", reduced)
    return out


def _colon_elimination(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f) through I ∩ (f), eliminating one auxiliary variable."""
    ring = I.ring
    order = _Elim(ring.total_vars)
    cores = [_poly_to_core(g, order, t_exp=1) for g in I.groebner_basis()]
    # (1 - t) * f
    fden = 1
    for _, c in f.terms:
        fden = fden * c.denominator // gcd(fden, c.denominator)
    mixed = []
    for m, c in f.terms:
        coeff = int(c * fden)
        mixed.append((order.key((0,) + m), coeff))
        mixed.append((order.key((1,) + m), -coeff))
    mixed.sort(reverse=True)
    cores.append(mixed)
    gb = _buchberger(cores, order)
    gens = []
    for g in gb:
        if g.lm_exps[0] == 0:
            # in this block order a t-free leading term forces t-free tails
            acc = {}
            for k, c in g.terms:
                exps = order.decode(k)
                acc[exps[1:]] = Fraction(c)
            inter = Polynomial(ring, acc)
            gens.append(_exact_divide(inter, f))
    return Ideal(ring, gens)


def _colon_artinian(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f) for Artinian quotients by lifting kernels of multiplication.

    In each degree d the kernel of x(f): (R/I)_d -> (R/I)_(d+e) lifts to
    the degree-d piece of the colon ideal modulo I, so I plus all the
    lifted kernels generates (I : f).
    """
    basis_by_degree = artinian_monomial_basis(I)
    order = I._order()
    elems = I._gb_elems()
    ring = I.ring
    e = f.degree()
    gens = list(I.generators)
    for d, monos in enumerate(basis_by_degree):
        if d + e >= len(basis_by_degree):
            # f * R_d lands beyond the socle, hence inside I
            gens.extend(Polynomial.monomial(ring, m) for m in monos)
            continue
        target = basis_by_degree[d + e]
        index = {m: i for i, m in enumerate(target)}
        rows = [[Fraction(0)] * len(monos) for _ in range(len(target))]
        for col, m in enumerate(monos):
            prod = f * Polynomial.monomial(ring, m)
            rem = _reduce_core(_poly_to_core(prod, order), elems, order)
            for k, c in rem:
                rows[index[order.decode(k)]][col] = c
        for vec in linalg.kernel_basis(rows, ncols=len(monos)):
            acc = {m: c for m, c in zip(monos, vec) if c}
            gens.append(Polynomial(ring, acc))
    return Ideal(ring, gens)


def ideal_colon(I: Ideal, f: Polynomial) -> Ideal:
    """The colon ideal (I : f) = {g : g*f in I}."""
    if f.ring != I.ring:
        raise RingMismatch(f"{f.ring} vs {I.ring}")
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    if not f.is_homogeneous():
        raise ValueError("colon divisor must be homogeneous")
    if f.degree() == 0:
        return I
    slot = _last_variable(I.ring)
    unit_last = tuple(1 if i == slot else 0 for i in range(I.ring.total_vars))
    if len(f.terms) == 1 and f.terms[0][0] == unit_last:
        return _colon_by_last_variable(I)
    if artinian_monomial_basis(I) is not None:
        return _colon_artinian(I, f)
    return _colon_elimination(I, f)


def colon_by_variable_power(I: Ideal, var: int | str, i: int) -> Ideal:
    """(I : v^i), iterated; (I : v^0) = I."""
    v = I.ring.var_index(var) if isinstance(var, str) else var
    if not 0 <= v < I.ring.total_vars:
        raise ValueError(f"variable index {v} out of range for {I.ring}")
    out = I
    last = v == _last_variable(I.ring)
    vpoly = Polynomial.variable(I.ring, v)
    for _ in range(i):
        out = _colon_by_last_variable(out) if last else ideal_colon(out, vpoly)
    return out


InitialIdeal = namedtuple("InitialIdeal", ["ideal", "is_monomial_ci"])


def initial_ideal(I: Ideal) -> InitialIdeal:
    """Leading-monomial ideal of the reduced basis, with a flag telling
    whether its minimal generators are powers of pairwise distinct
    variables (a monomial complete intersection)."""
    gens = []
    seen_vars = []
    is_ci = True
    for lm in I.leading_exponents():
        gens.append(Polynomial.monomial(I.ring, lm))
        nz = [v for v, e in enumerate(lm) if e]
        if len(nz) != 1 or nz[0] in seen_vars:
            is_ci = False
        else:
            seen_vars.append(nz[0])
    if not gens:
        is_ci = False
    return InitialIdeal(Ideal(I.ring, gens), is_ci)


def artinian_offending_variable(I: Ideal):
    """A variable without a pure power among the leading terms, or None."""
    if I.is_unit():
        return None
    caps = _pure_power_caps(I.leading_exponents(), I.ring.total_vars)
    if caps is None:
        return None
    for v, cap in enumerate(caps):
        if cap is None:
            return I.ring.var_names[v]
    return None


def artinian_monomial_basis(I: Ideal):
    """Standard monomials per degree 0..socle, or None when not Artinian.

    Cached on the ideal; every entry of the returned list is non-empty.
    """
    if I._basis is not None:
        return I._basis if I._basis != "non-artinian" else None
    width = I.ring.total_vars
    lms = I.leading_exponents()
    if I.is_unit():
        object.__setattr__(I, "_basis", [])
        return []
    caps = _pure_power_caps(lms, width)
    if caps is None or any(c is None for c in caps):
        object.__setattr__(I, "_basis", "non-artinian")
        return None
    bound = sum(c - 1 for c in caps) + 1
    out = []
    for d in range(bound + 1):
        monos = standard_monomials_of_degree(lms, width, d)
        if not monos:
            break
        out.append(monos)
    object.__setattr__(I, "_basis", out)
    return out


def quotient_dimension(I: Ideal):
    """dim_K of R/I when Artinian, else None."""
    basis = artinian_monomial_basis(I)
    if basis is None:
        return None
    return sum(len(b) for b in basis)


def certify_regular_sequence(gens) -> bool:
    """Whether n homogeneous forms in n variables cut out a quotient of
    dimension equal to the product of their degrees (equivalently, form a
    regular sequence in this square Artinian setting)."""
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator list")
    ring = gens[0].ring
    if len(gens) != ring.total_vars:
        raise ValueError(
            f"need exactly {ring.total_vars} generators in {ring}, got {len(gens)}"
        )
    product = 1
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("generators live in different rings")
        if g.is_zero() or not g.is_homogeneous() or g.degree() < 1:
            return False
        product *= g.degree()
    dim = quotient_dimension(Ideal(ring, gens))
    return dim == product
