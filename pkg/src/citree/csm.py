"""Central simple module decompositions and the instance verifiers.

For an Artinian quotient of K[x1..xm, v] (v the cheapest variable, playing
the distinguished linear form), the chain (I : v^i) + (v) is computed
exactly, deduplicated into blocks, and the successive quotients are checked
against their predicted cyclic presentations: numerator = denominator +
(e_{j-1}) and annihilator (denominator : e_{j-1}) with a shifted Hilbert
function match.

Every verifier returns a structured report; a failing sub-check is recorded
rather than raised, so a whole grid can run to completion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideals import (
    Ideal,
    artinian_monomial_basis,
    certify_regular_sequence,
    colon_by_variable_power,
    ideal_colon,
    ideal_equal,
    ideal_sum,
    normal_form,
    quotient_dimension,
)
from .polyring import Polynomial, RingSpec
from .symfun import boundary_polynomial, symmetric_generator


# --- symmetric generators relative to the distinguished variable ------------


def xpart(ring: RingSpec) -> int:
    """Number of leading variables (everything except the cheapest one)."""
    return ring.total_vars - 1


def sym_e(ring: RingSpec, i: int) -> Polynomial:
    """Signed elementary symmetric e_i in the leading variables, inside ring."""
    m = xpart(ring)
    return symmetric_generator("e_signed", m, i).extend(ring)


def sym_p(ring: RingSpec, i: int) -> Polynomial:
    """Power sum p_i in the leading variables, inside ring."""
    m = xpart(ring)
    return symmetric_generator("p", m, i).extend(ring)


def last_variable(ring: RingSpec) -> Polynomial:
    return Polynomial.variable(ring, ring.total_vars - 1)


def hf_of(J: Ideal):
    basis = artinian_monomial_basis(J)
    if basis is None:
        raise ValueError(f"{J} is not Artinian")
    return tuple(len(b) for b in basis)


def power_family_ideal(n: int, a: int) -> Ideal:
    """(p~_a, ..., p~_(a+n)) in K[x1..xn, z]."""
    ring = RingSpec(n, has_z=True)
    return Ideal(ring, [symmetric_generator("p_tilde", n, a + t) for t in range(n + 1)])


def mixed_family_ideal(n: int, a: int, b: int) -> Ideal:
    """(p~_a..p~_(a+b), e~_(b+2)..e~_(n+1)) in K[x1..xn, z]."""
    ring = RingSpec(n, has_z=True)
    gens = [symmetric_generator("p_tilde", n, a + t) for t in range(b + 1)]
    gens += [symmetric_generator("e_tilde", n, j) for j in range(b + 2, n + 2)]
    return Ideal(ring, gens)


def power_chain_ideal(ring: RingSpec, a: int, k: int) -> Ideal:
    """The k-th expected chain block for the pure power-sum family:
    (p_a..p_(a+n-k-1), e_(n+1-k)..e_n, v); the unit ideal at k = n+1."""
    n = xpart(ring)
    if k == n + 1:
        return Ideal(ring, [Polynomial.one(ring)])
    gens = [sym_p(ring, a + t) for t in range(n - k)]
    gens += [sym_e(ring, j) for j in range(n + 1 - k, n + 1)]
    gens.append(last_variable(ring))
    return Ideal(ring, gens)


def mixed_chain_ideal(ring: RingSpec, a: int, b: int, k: int) -> Ideal:
    """The k-th expected chain block for the mixed family; k = 0 skips
    e_(b+1), k = 1..b+1 follows the uniform pattern, k = b+2 is the unit."""
    n = xpart(ring)
    if k == b + 2:
        return Ideal(ring, [Polynomial.one(ring)])
    if k == 0:
        gens = [sym_p(ring, a + t) for t in range(b + 1)]
        gens += [sym_e(ring, j) for j in range(b + 2, n + 1)]
    else:
        gens = [sym_p(ring, a + t) for t in range(b + 1 - k)]
        gens += [sym_e(ring, j) for j in range(b + 2 - k, n + 1)]
    gens.append(last_variable(ring))
    return Ideal(ring, gens)


def module_annihilator_ideal(ring: RingSpec, a: int, j: int, with_v=True) -> Ideal:
    """(p_(a-1), ..., p_(a+j-3), e_j, ..., e_n) (+ the cheapest variable)."""
    n = xpart(ring)
    gens = [sym_p(ring, a - 1 + t) for t in range(j - 1)]
    gens += [sym_e(ring, i) for i in range(j, n + 1)]
    if with_v:
        gens.append(last_variable(ring))
    return Ideal(ring, gens)


# --- the chain ----------------------------------------------------------------


@dataclass
class CsmChain:
    """Deduplicated chain (I : v^i) + (v), i = 0..p, p the nilpotency index.

    entries[t] = (ideal, lo, hi): the ideal attained exactly for the
    exponents lo..hi; the last entry is the unit ideal at (p, p).
    """

    p: int
    entries: list

    def ideal_at(self, i: int) -> Ideal:
        for ideal, lo, hi in self.entries:
            if lo <= i <= hi:
                return ideal
        raise IndexError(f"exponent {i} outside 0..{self.p}")

    def distinct_ideals(self):
        return [e[0] for e in self.entries]


@dataclass
class CentralSimpleModule:
    """The j-th nonzero successive quotient numerator/denominator of the
    chain, with graded dimensions and an optional cyclic presentation."""

    index: int
    numerator: Ideal
    denominator: Ideal
    graded_dims: tuple
    shift: int
    cyclic_generator: Polynomial | None = None
    annihilator: Ideal | None = None


def nilpotency_index(A, y: Polynomial) -> int:
    """Least p with y^p = 0 in the quotient algebra."""
    power = Polynomial.one(A.ring)
    p = 0
    while True:
        if normal_form(power, A.ideal).is_zero():
            return p
        power = power * y
        p += 1
        if p > A.dimension() + 1:
            raise AssertionError("nilpotency index exceeded the dimension bound")


def add_last_variable(I: Ideal) -> Ideal:
    """I + (v) for the cheapest variable, built from v-reduced generators."""
    ring = I.ring
    slot = ring.total_vars - 1
    gens = [last_variable(ring)]
    for g in I.groebner_basis():
        acc = {m: c for m, c in g.terms if m[slot] == 0}
        if acc:
            gens.append(Polynomial(ring, acc))
    return Ideal(ring, gens)


def csm_chain(I: Ideal, verify_inclusions: bool = True) -> CsmChain:
    """Compute and deduplicate (I : v^i) + (v) until the unit ideal."""
    dim = quotient_dimension(I)
    if dim is None:
        raise ValueError(f"{I} is not Artinian")
    entries = []
    cur = I
    i = 0
    while True:
        C = add_last_variable(cur)
        if entries and C == entries[-1][0]:
            entries[-1][2] = i
        else:
            entries.append([C, i, i])
        if C.is_unit():
            break
        if i > dim + 1:
            raise AssertionError("chain failed to terminate")
        cur = colon_by_variable_power(cur, cur.ring.total_vars - 1, 1)
        i += 1
    if verify_inclusions:
        dims = [quotient_dimension(e[0]) for e in entries]
        for t in range(len(entries) - 1):
            small, big = entries[t][0], entries[t + 1][0]
            if not big.contains_ideal(small):
                raise AssertionError("chain is not increasing")
            if not dims[t] > dims[t + 1]:
                raise AssertionError("consecutive chain blocks are not strict")
    return CsmChain(p=i, entries=[tuple(e) for e in entries])


def central_simple_modules(I: Ideal, chain: CsmChain | None = None):
    """The nonzero successive quotients of the chain, top first."""
    if chain is None:
        chain = csm_chain(I)
    ideals = chain.distinct_ideals()
    hfs = [hf_of(J) for J in ideals]
    out = []
    m = len(ideals) - 1
    for j in range(1, m + 1):
        den_hf = hfs[m - j]
        num_hf = hfs[m - j + 1]
        width = max(len(den_hf), len(num_hf))
        dims = tuple(
            (den_hf[d] if d < len(den_hf) else 0) - (num_hf[d] if d < len(num_hf) else 0)
            for d in range(width)
        )
        nonzero = [d for d, v in enumerate(dims) if v]
        out.append(
            CentralSimpleModule(
                index=j,
                numerator=ideals[m - j + 1],
                denominator=ideals[m - j],
                graded_dims=dims,
                shift=nonzero[0] if nonzero else 0,
            )
        )
    return out


def cyclic_presentation(num: Ideal, den: Ideal, g: Polynomial):
    """Check num = den + (g), compute the annihilator (den : g) and the
    graded dimensions; returns (module, report)."""
    ring = num.ring
    presentation_ok = ideal_equal(num, ideal_sum(den, Ideal(ring, [g])))
    ann = ideal_colon(den, g)
    den_hf = hf_of(den)
    num_hf = hf_of(num)
    ann_hf = hf_of(ann)
    width = max(len(den_hf), len(num_hf))
    dims = tuple(
        (den_hf[d] if d < len(den_hf) else 0) - (num_hf[d] if d < len(num_hf) else 0)
        for d in range(width)
    )
    gdeg = g.degree()
    shifted = tuple([0] * gdeg) + tuple(ann_hf)
    padded = max(len(dims), len(shifted))
    dims_ok = tuple(dims + (0,) * (padded - len(dims))) == tuple(
        shifted + (0,) * (padded - len(shifted))
    )
    nonzero = [d for d, v in enumerate(dims) if v]
    module = CentralSimpleModule(
        index=0,
        numerator=num,
        denominator=den,
        graded_dims=dims,
        shift=nonzero[0] if nonzero else 0,
        cyclic_generator=g,
        annihilator=ann,
    )
    report = {
        "presentation_ok": presentation_ok,
        "dims_ok": dims_ok,
        "annihilator": ann.canonical_str(),
        "passed": presentation_ok and dims_ok,
    }
    return module, report


# --- report plumbing -----------------------------------------------------------


def _check(checks, name, ok, **detail):
    entry = {"name": name, "passed": bool(ok)}
    if detail:
        entry.update(detail)
    checks.append(entry)
    return bool(ok)


def _finish(report, checks):
    report["checks"] = checks
    report["passed"] = all(c["passed"] for c in checks)
    return report


# --- family verifiers -----------------------------------------------------------


def _verify_family_common(report, checks, I, expected_blocks, expected_count, a):
    """Chain blocks, CSM count, cyclic presentations and annihilators for a
    family whose j-th module is R/(p_(a-1)..p_(a+j-3), e_j..e_n)."""
    ring = I.ring
    n = xpart(ring)
    dim = quotient_dimension(I)
    degs = [g.degree() for g in I.generators]
    prod = 1
    for d in degs:
        prod *= d
    _check(checks, "dimension_product", dim == prod, dim=dim, expected=prod)
    hf = hf_of(I)
    _check(checks, "hilbert_symmetric", hf == tuple(reversed(hf)))

    chain = csm_chain(I)
    report["chain"] = [
        {"ideal": J.canonical_str(), "exponents": [lo, hi]} for J, lo, hi in chain.entries
    ]
    blocks_ok = len(expected_blocks) == len(chain.entries)
    for (J, lo, hi), (expect, elo, ehi) in zip(chain.entries, expected_blocks):
        if not blocks_ok:
            break
        blocks_ok = (lo, hi) == (elo, ehi) and ideal_equal(J, expect)
    _check(checks, "chain_blocks", blocks_ok,
           expected=[[lo, hi] for _, lo, hi in expected_blocks])

    # filtration: summing dim R/((I:v^i)+(v)) over all exponents recovers dim
    total = 0
    for J, lo, hi in chain.entries:
        total += (hi - lo + 1) * (quotient_dimension(J) or 0)
    _check(checks, "filtration_dimension", total == dim, total=total, dim=dim)

    modules = central_simple_modules(I, chain)
    _check(checks, "module_count", len(modules) == expected_count,
           count=len(modules), expected=expected_count)

    module_reports = []
    annihilators = []
    for mod in modules:
        j = mod.index
        g = sym_e(ring, j - 1)
        checked, sub = cyclic_presentation(mod.numerator, mod.denominator, g)
        expected_ann = module_annihilator_ideal(ring, a, j)
        ann_ok = ideal_equal(checked.annihilator, expected_ann)
        sub["annihilator_matches"] = ann_ok
        sub["shift_ok"] = checked.shift == j - 1
        sub["index"] = j
        sub["passed"] = sub["passed"] and ann_ok and sub["shift_ok"]
        module_reports.append(sub)
        annihilators.append(expected_ann)
        _check(checks, f"module_{j}", sub["passed"],
               annihilator=checked.annihilator.canonical_str())

    report["modules"] = module_reports

    # predicted annihilators form a decreasing chain of complete intersections
    chain_ok = True
    for t in range(len(annihilators) - 1):
        bigger = annihilators[t]       # J_j has smaller index -> larger ideal
        smaller = annihilators[t + 1]
        if not bigger.contains_ideal(smaller):
            chain_ok = False
    _check(checks, "annihilator_chain", chain_ok)
    ci_ok = True
    for t, J in enumerate(annihilators):
        j = t + 1
        gens = [symmetric_generator("p", n, a - 1 + s) for s in range(j - 1)]
        gens += [symmetric_generator("e_signed", n, i) for i in range(j, n + 1)]
        if not certify_regular_sequence(gens):
            ci_ok = False
    _check(checks, "annihilators_regular", ci_ok)
    return chain, modules


def verify_power_family(n: int, a: int) -> dict:
    """Full instance check for the family (p~_a .. p~_(a+n)): chain blocks
    of length a, module count 1 (a = 1) or n+1, cyclic presentations,
    annihilator and shifted-Hilbert matches."""
    if n < 1 or a < 1:
        raise ValueError("need n >= 1 and a >= 1")
    I = power_family_ideal(n, a)
    ring = I.ring
    report = {"verifier": "power-family", "params": {"n": n, "a": a},
              "ideal": str(I)}
    checks = []
    expected_blocks = []
    if a == 1:
        expected_blocks.append((power_chain_ideal(ring, a, n), 0, n))
        expected_blocks.append((power_chain_ideal(ring, a, n + 1), n + 1, n + 1))
    else:
        for k in range(n + 1):
            expected_blocks.append((power_chain_ideal(ring, a, k), k * a, (k + 1) * a - 1))
        expected_blocks.append((power_chain_ideal(ring, a, n + 1), (n + 1) * a, (n + 1) * a))
    expected_count = 1 if a == 1 else n + 1
    _verify_family_common(report, checks, I, expected_blocks, expected_count, a)
    return _finish(report, checks)


def verify_mixed_family(n: int, a: int, b: int) -> dict:
    """Full instance check for (p~_a..p~_(a+b), e~_(b+2)..e~_(n+1)):
    b+2 modules, block boundaries c_k = n - b + (k-1)a, and the single
    colon equality I : v^(n-b) = (p~_a..p~_(a+b), e_(b+1)..e_n)."""
    if n < 1 or a < 2 or not 0 <= b <= n - 1:
        raise ValueError("need n >= 1, a >= 2 and 0 <= b <= n-1")
    I = mixed_family_ideal(n, a, b)
    ring = I.ring
    report = {"verifier": "mixed-family", "params": {"n": n, "a": a, "b": b},
              "ideal": str(I)}
    checks = []

    def c_of(k):
        return n - b + (k - 1) * a

    expected_blocks = [(mixed_chain_ideal(ring, a, b, 0), 0, n - b - 1)]
    for k in range(1, b + 2):
        expected_blocks.append((mixed_chain_ideal(ring, a, b, k), c_of(k), c_of(k + 1) - 1))
    expected_blocks.append((mixed_chain_ideal(ring, a, b, b + 2), c_of(b + 2), c_of(b + 2)))
    expected_blocks = [e for e in expected_blocks if e[1] <= e[2]]
    # merge adjacent blocks whose predicted ideals coincide (deduplication
    # in the computed chain joins them)
    merged = []
    for ideal, lo, hi in expected_blocks:
        if merged and ideal_equal(merged[-1][0], ideal) and merged[-1][2] + 1 == lo:
            merged[-1][2] = hi
        else:
            merged.append([ideal, lo, hi])
    expected_blocks = [tuple(e) for e in merged]

    _verify_family_common(report, checks, I, expected_blocks, b + 2, a)

    swap_target = Ideal(ring, [symmetric_generator("p_tilde", n, a + t) for t in range(b + 1)]
                        + [sym_e(ring, j) for j in range(b + 1, n + 1)])
    colon = colon_by_variable_power(I, ring.total_vars - 1, n - b)
    _check(checks, "first_block_colon", ideal_equal(colon, swap_target),
           exponent=n - b)
    return _finish(report, checks)


# --- generator swaps --------------------------------------------------------------


def _f_presentations(n: int, a: int, k: int):
    """The two generating sets of I_k for the pure family: with the last
    power sum, and with z^a f^(k) in its place."""
    ring = RingSpec(n, has_z=True)
    z = Polynomial.variable(ring, "z")
    ptilde = [symmetric_generator("p_tilde", n, a + t) for t in range(n - k + 1)]
    fs = [boundary_polynomial("f", n, None, t) for t in range(k - 1, -1, -1)]
    with_p = ptilde + fs
    za_fk = (z ** a) * boundary_polynomial("f", n, None, k)
    with_f = ptilde[:-1] + [za_fk] + fs
    return Ideal(ring, with_p), Ideal(ring, with_f)


def _g_presentations(n: int, a: int, b: int, k: int):
    """The two generating sets of I_k for the mixed family (k = 1..b+1)."""
    ring = RingSpec(n, has_z=True)
    z = Polynomial.variable(ring, "z")
    ptilde = [symmetric_generator("p_tilde", n, a + t) for t in range(b + 2 - k)]
    gs = [boundary_polynomial("g", n, b, t) for t in range(k - 2, -1, -1)]
    es = [sym_e(ring, j) for j in range(b + 1, n + 1)]
    with_p = ptilde + gs + es
    za_gk = (z ** a) * boundary_polynomial("g", n, b, k - 1)
    with_g = ptilde[:-1] + [za_gk] + gs + es
    return Ideal(ring, with_p), Ideal(ring, with_g)


def verify_generator_swap(kind: str, n: int, a: int, b: int | None = None) -> dict:
    """Equality of the two presentations of every I_k: replacing the last
    power sum by z^a f^(k) (kind f) or z^a g^(k-1) (kind g)."""
    if a < 2:
        raise ValueError("need a >= 2")
    report = {"verifier": "generator-swap", "params": {"kind": kind, "n": n, "a": a, "b": b}}
    checks = []
    if kind == "f":
        ks = range(0, n + 1)
        for k in ks:
            I1, I2 = _f_presentations(n, a, k)
            _check(checks, f"k_{k}", ideal_equal(I1, I2))
    elif kind == "g":
        if b is None or not 0 <= b < n:
            raise ValueError("kind g needs 0 <= b < n")
        for k in range(1, b + 2):
            I1, I2 = _g_presentations(n, a, b, k)
            _check(checks, f"k_{k}", ideal_equal(I1, I2))
    else:
        raise ValueError(f"unknown swap kind {kind!r}")
    return _finish(report, checks)


# --- colon identities ----------------------------------------------------------


def verify_colon_identity(n: int, a: int, s: int | None = None) -> dict:
    """Colon of a chain block by the next elementary symmetric polynomial.

    With s given (0 <= s <= n-2):
      (p_a..p_(a+s), e_(s+2)..e_n, v) : e_(s+1)
        = (p_(a-1)..p_(a+s-1), e_(s+2)..e_n, v).
    Without s, the top case:
      (p_a..p_(a+n-1), v) : e_n = (p_(a-1)..p_(a+n-2), v).
    """
    if a < 2:
        raise ValueError("need a >= 2, the identities shift indices down by one")
    ring = RingSpec(n, has_z=True)
    v = last_variable(ring)
    report = {"verifier": "colon-identity", "params": {"n": n, "a": a, "s": s}}
    checks = []
    if s is None:
        J = Ideal(ring, [sym_p(ring, a + t) for t in range(n)] + [v])
        expected = Ideal(ring, [sym_p(ring, a - 1 + t) for t in range(n)] + [v])
        divisor = sym_e(ring, n)
        top = n - 1
    else:
        if not 0 <= s <= n - 2:
            raise ValueError(f"s={s} out of range 0..{n - 2}")
        J = Ideal(ring, [sym_p(ring, a + t) for t in range(s + 1)]
                  + [sym_e(ring, i) for i in range(s + 2, n + 1)] + [v])
        expected = Ideal(ring, [sym_p(ring, a - 1 + t) for t in range(s + 1)]
                         + [sym_e(ring, i) for i in range(s + 2, n + 1)] + [v])
        divisor = sym_e(ring, s + 1)
        top = s
    colon = ideal_colon(J, divisor)
    _check(checks, "colon_equality", ideal_equal(colon, expected),
           colon=colon.canonical_str(), expected=expected.canonical_str())

    # the combination sum_{i=0}^{top+1} e_i p_(a+top-i) lies in (e_(top+2)..e_n)
    m = xpart(ring)
    acc = Polynomial.zero(RingSpec(m))
    for i in range(top + 2):
        acc = acc + symmetric_generator("e_signed", m, i) * symmetric_generator("p", m, a + top - i)
    tail = Ideal(RingSpec(m), [symmetric_generator("e_signed", m, i) for i in range(top + 2, m + 1)])
    _check(checks, "newton_membership", normal_form(acc, tail).is_zero())
    return _finish(report, checks)


# --- chain block verifiers (standalone) ---------------------------------------


def verify_chain_blocks(kind: str, n: int, a: int, b: int | None = None) -> dict:
    """Exponent ranges of the deduplicated chain against the predictions:
    blocks of length a starting at ka (kind f), or the c_k = n-b+(k-1)a
    boundaries with a leading block of length n-b (kind g)."""
    if a < 2:
        raise ValueError("need a >= 2 for the block structure")
    report = {"verifier": "chain-blocks", "params": {"kind": kind, "n": n, "a": a, "b": b}}
    checks = []
    if kind == "f":
        I = power_family_ideal(n, a)
        ring = I.ring
        expected = [(power_chain_ideal(ring, a, k), k * a, (k + 1) * a - 1) for k in range(n + 1)]
        expected.append((power_chain_ideal(ring, a, n + 1), (n + 1) * a, (n + 1) * a))
    elif kind == "g":
        if b is None or not 0 <= b <= n - 1:
            raise ValueError("kind g needs 0 <= b <= n-1")
        I = mixed_family_ideal(n, a, b)
        ring = I.ring

        def c_of(k):
            return n - b + (k - 1) * a

        expected = [(mixed_chain_ideal(ring, a, b, 0), 0, n - b - 1)]
        for k in range(1, b + 2):
            expected.append((mixed_chain_ideal(ring, a, b, k), c_of(k), c_of(k + 1) - 1))
        expected.append((mixed_chain_ideal(ring, a, b, b + 2), c_of(b + 2), c_of(b + 2)))
        expected = [e for e in expected if e[1] <= e[2]]
        merged = []
        for ideal, lo, hi in expected:
            if merged and ideal_equal(merged[-1][0], ideal) and merged[-1][2] + 1 == lo:
                merged[-1][2] = hi
            else:
                merged.append([ideal, lo, hi])
        expected = [tuple(e) for e in merged]
    else:
        raise ValueError(f"unknown chain kind {kind!r}")

    chain = csm_chain(I)
    report["chain"] = [{"ideal": J.canonical_str(), "exponents": [lo, hi]} for J, lo, hi in chain.entries]
    ok = len(chain.entries) == len(expected)
    for (J, lo, hi), (E, elo, ehi) in zip(chain.entries, expected):
        if not ok:
            break
        ok = (lo, hi) == (elo, ehi) and ideal_equal(J, E)
    _check(checks, "blocks", ok, expected=[[lo, hi] for _, lo, hi in expected])

    # strictness via strictly dropping quotient dimensions
    dims = [quotient_dimension(J) for J, _, _ in chain.entries]
    _check(checks, "strict_inclusions", all(x > y for x, y in zip(dims, dims[1:])),
           dims=dims)
    if kind == "g":
        swap_target = Ideal(ring, [symmetric_generator("p_tilde", n, a + t) for t in range(b + 1)]
                            + [sym_e(ring, j) for j in range(b + 1, n + 1)])
        colon = colon_by_variable_power(I, ring.total_vars - 1, n - b)
        _check(checks, "first_block_colon", ideal_equal(colon, swap_target))
    return _finish(report, checks)


# --- terminal module (least exponent where the chain moves) --------------------


def verify_terminal_csm(I: Ideal) -> dict:
    """Recompute q = min{i : (I : v^i) + (v) != I + (v)} directly and check
    it against the deduplicated chain; when (I : v^q) is everything there
    is exactly one module, the full quotient by the variable."""
    report = {"verifier": "terminal-csm", "ideal": str(I)}
    checks = []
    chain = csm_chain(I)
    base = chain.entries[0][0]
    q = None
    ring = I.ring
    cur = I
    for i in range(1, chain.p + 1):
        cur = colon_by_variable_power(cur, ring.total_vars - 1, 1)
        if not ideal_equal(add_last_variable(cur), base):
            q = i
            break
    _check(checks, "q_found", q is not None, q=q)
    if q is not None:
        _check(checks, "q_matches_chain", chain.entries[0][2] + 1 == q,
               chain_hi=chain.entries[0][2])
        modules = central_simple_modules(I, chain)
        last = modules[-1]
        _check(checks, "terminal_module",
               ideal_equal(last.numerator, chain.ideal_at(q))
               and ideal_equal(last.denominator, base))
        full = colon_by_variable_power(I, ring.total_vars - 1, q)
        if full.is_unit():
            _check(checks, "single_module", len(modules) == 1)
            dims_match = last.graded_dims == hf_of(base)
            _check(checks, "module_is_quotient_by_variable", dims_match)
    return _finish(report, checks)


def filtration_check(I: Ideal) -> dict:
    """Sum of dim R/((I : v^i) + (v)) over i equals dim R/I."""
    chain = csm_chain(I)
    total = 0
    summands = []
    for J, lo, hi in chain.entries:
        d = quotient_dimension(J) or 0
        summands.extend([d] * (hi - lo + 1))
        total += (hi - lo + 1) * d
    dim = quotient_dimension(I)
    return {
        "verifier": "filtration",
        "ideal": str(I),
        "summands": summands,
        "total": total,
        "dimension": dim,
        "passed": total == dim,
    }
