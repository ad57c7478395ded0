"""Groebner engine: bases, normal forms, colons, certification.

The brute-force oracle here never touches the Groebner machinery: degree
by degree it spans the ideal with monomial multiples of the generators and
row-reduces over the rationals.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from citree import linalg
from citree.ideals import (
    Ideal,
    _colon_artinian,
    _colon_by_last_variable,
    _colon_elimination,
    artinian_monomial_basis,
    certify_regular_sequence,
    colon_by_variable_power,
    ideal_colon,
    ideal_equal,
    ideal_sum,
    initial_ideal,
    normal_form,
    quotient_dimension,
    standard_monomials_of_degree,
)
from citree.polyring import Polynomial, RingSpec, parse_polynomial
from citree.symfun import symmetric_generator

R1Z = RingSpec(1, True)
R2 = RingSpec(2)
R2Z = RingSpec(2, True)


def P(text, ring):
    return parse_polynomial(text, ring)


# --- brute-force membership oracle (no Groebner bases) --------------------------


def oracle_degree_span(gens, degree):
    """Row space of the degree-d piece of the ideal, in monomial coordinates."""
    if not gens:
        return [], []
    ring = gens[0].ring
    monos = standard_monomials_of_degree([], ring.total_vars, degree)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in gens:
        gdeg = g.degree()
        if gdeg > degree:
            continue
        for m in standard_monomials_of_degree([], ring.total_vars, degree - gdeg):
            prod = g * Polynomial.monomial(ring, m)
            row = [Fraction(0)] * len(monos)
            for mono, c in prod.terms:
                row[index[mono]] = c
            rows.append(row)
    return rows, monos


def oracle_member(p, gens):
    """Membership of a homogeneous polynomial via exact row reduction."""
    if p.is_zero():
        return True
    degree = p.degree()
    rows, monos = oracle_degree_span(gens, degree)
    index = {m: i for i, m in enumerate(monos)}
    target = [Fraction(0)] * len(monos)
    for mono, c in p.terms:
        target[index[mono]] = c
    base = linalg.rank(rows)
    return linalg.rank(rows + [target]) == base


def oracle_hilbert(gens, ring, up_to):
    out = []
    for d in range(up_to + 1):
        rows, monos = oracle_degree_span(gens, d)
        out.append(len(monos) - linalg.rank(rows))
    return out


# --- spec examples ----------------------------------------------------------------


def test_gb_two_generators():
    I = Ideal.from_strings(R1Z, ["x1 + z", "x1^2 + z^2"])
    assert [str(g) for g in I.groebner_basis()] == ["x1 + z", "z^2"]


def test_gb_coprime_leading_terms():
    I = Ideal.from_strings(R2, ["x1^2", "x2^2"])
    assert [str(g) for g in I.groebner_basis()] == ["x2^2", "x1^2"]


def test_gb_zero_ideal():
    I = Ideal(R2, [])
    assert I.groebner_basis() == ()
    assert I.is_zero_ideal()


def test_normal_form_substitution():
    I = Ideal.from_strings(R1Z, ["x1 + z"])
    assert normal_form(P("x1^2 + z^2", R1Z), I) == P("2*z^2", R1Z)


def test_normal_form_membership_of_generators():
    I = Ideal.from_strings(R2Z, ["x1^2 + x2*z", "x2^3"])
    for g in I.generators:
        assert normal_form(g, I).is_zero()


def test_normal_form_unit_on_proper_ideal():
    I = Ideal.from_strings(R2, ["x1^2", "x2^2"])
    one = Polynomial.one(R2)
    assert normal_form(one, I) == one


def test_ideal_equal_unit_multiples():
    lhs = Ideal.from_strings(R2, ["x1 + x2", "x1*x2"])
    e1 = symmetric_generator("e_signed", 2, 1)
    e2 = symmetric_generator("e_signed", 2, 2)
    assert ideal_equal(lhs, Ideal(R2, [e1, e2]))


def test_ideal_not_equal():
    assert not ideal_equal(Ideal.from_strings(R2, ["x1"]), Ideal.from_strings(R2, ["x1^2"]))


def test_ideal_sum_examples():
    assert ideal_equal(
        ideal_sum(Ideal.from_strings(R2, ["x1^2"]), Ideal.from_strings(R2, ["x2"])),
        Ideal.from_strings(R2, ["x1^2", "x2"]),
    )
    I = Ideal.from_strings(R2, ["x1^2"])
    assert ideal_equal(ideal_sum(I, I), I)


def test_ideal_sum_power_family_with_z():
    gens = [symmetric_generator("p_tilde", 2, i) for i in (2, 3, 4)]
    I = Ideal(R2Z, gens)
    with_z = ideal_sum(I, Ideal.from_strings(R2Z, ["z"]))
    p2 = symmetric_generator("p", 2, 2).extend(R2Z)
    p3 = symmetric_generator("p", 2, 3).extend(R2Z)
    expected = Ideal(R2Z, [p2, p3, Polynomial.variable(R2Z, "z")])
    assert ideal_equal(with_z, expected)


def test_colon_simple():
    I = Ideal.from_strings(R2, ["x1^2", "x1*x2"])
    assert ideal_equal(ideal_colon(I, P("x2", R2)), Ideal.from_strings(R2, ["x1"]))


def test_colon_by_one_is_identity():
    I = Ideal.from_strings(R2, ["x1^2", "x2^2"])
    assert ideal_colon(I, Polynomial.one(R2)) == I


def test_colon_error_on_zero():
    I = Ideal.from_strings(R2, ["x1"])
    with pytest.raises(ValueError):
        ideal_colon(I, Polynomial.zero(R2))


def test_colon_power_sum_block():
    # (p_2, p_3, z) : e_2 = (p_1, p_2, z)
    z = Polynomial.variable(R2Z, "z")
    p = lambda i: symmetric_generator("p", 2, i).extend(R2Z)
    e2 = symmetric_generator("e_signed", 2, 2).extend(R2Z)
    J = Ideal(R2Z, [p(2), p(3), z])
    expected = Ideal(R2Z, [p(1), p(2), z])
    assert ideal_equal(ideal_colon(J, e2), expected)


def test_colon_by_variable_power_examples():
    I = Ideal.from_strings(R1Z, ["x1 + z", "x1^2 + z^2"])
    assert ideal_equal(colon_by_variable_power(I, "z", 1), Ideal.from_strings(R1Z, ["x1", "z"]))
    assert colon_by_variable_power(I, "z", 0) == I
    gens = [symmetric_generator("p_tilde", 2, i) for i in (2, 3, 4)]
    J = Ideal(R2Z, gens)
    assert colon_by_variable_power(J, "z", 6).is_unit()


def test_colon_by_non_last_variable():
    I = Ideal.from_strings(R2, ["x1^2", "x1*x2"])
    assert ideal_equal(colon_by_variable_power(I, "x1", 1),
                       Ideal.from_strings(R2, ["x1", "x2"]))


def test_initial_ideal_examples():
    I = Ideal.from_strings(R1Z, ["x1 + z", "x1^2 + z^2"])
    init = initial_ideal(I)
    assert init.is_monomial_ci
    assert ideal_equal(init.ideal, Ideal.from_strings(R1Z, ["x1", "z^2"]))

    sq = initial_ideal(Ideal.from_strings(R2, ["x1^2", "x2^2"]))
    assert sq.is_monomial_ci
    assert ideal_equal(sq.ideal, Ideal.from_strings(R2, ["x1^2", "x2^2"]))

    e = initial_ideal(Ideal(R2, [symmetric_generator("e_signed", 2, i) for i in (1, 2)]))
    assert e.is_monomial_ci
    assert ideal_equal(e.ideal, Ideal.from_strings(R2, ["x1", "x2^2"]))

    not_ci = initial_ideal(Ideal.from_strings(R2, ["x1^2", "x1*x2"]))
    assert not not_ci.is_monomial_ci


def test_certify_regular_sequence_examples():
    p2 = symmetric_generator("p", 2, 2)
    p3 = symmetric_generator("p", 2, 3)
    assert certify_regular_sequence([p2, p3])
    assert quotient_dimension(Ideal(R2, [p2, p3])) == 6

    tildes = [symmetric_generator("p_tilde", 2, i) for i in (2, 3, 4)]
    assert certify_regular_sequence(tildes)
    assert quotient_dimension(Ideal(R2Z, tildes)) == 24

    x1 = Polynomial.variable(R2, 0)
    assert not certify_regular_sequence([x1, x1 * x1])
    with pytest.raises(ValueError):
        certify_regular_sequence([x1])


def test_homogeneity_required():
    with pytest.raises(ValueError):
        Ideal.from_strings(R2, ["x1 + x1^2"])


# --- oracle cross-checks -----------------------------------------------------------


def test_membership_against_oracle():
    gens = [P("x1^2 - x2*z", R2Z), P("x2^2", R2Z)]
    I = Ideal(R2Z, gens)
    probes = [
        P("x1^2*x2 - x2^2*z", R2Z),
        P("x1^3", R2Z),
        P("x2^2*z", R2Z),
        P("x1*x2*z", R2Z),
        P("x1^4 - 2*x1^2*x2*z + x2^2*z^2", R2Z),
    ]
    for probe in probes:
        assert normal_form(probe, I).is_zero() == oracle_member(probe, gens)


def test_hilbert_against_oracle():
    e_gens = [symmetric_generator("e_signed", 3, i) for i in (1, 2, 3)]
    I = Ideal(RingSpec(3), e_gens)
    basis = artinian_monomial_basis(I)
    engine_hf = [len(b) for b in basis]
    assert engine_hf == [1, 2, 2, 1]
    assert oracle_hilbert(e_gens, RingSpec(3), 4) == [1, 2, 2, 1, 0]


def test_buchberger_criterion_on_output():
    # all S-polynomials of the reduced basis reduce to zero
    from citree.ideals import _reduce_to_primitive, _spoly

    gens = [P("x1^2 + x2*z", R2Z), P("x1*x2 - z^2", R2Z), P("x2^3", R2Z)]
    I = Ideal(R2Z, gens)
    order = I._order()
    elems = I._gb_elems()
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            s = _spoly(elems[i], elems[j], order)
            assert not _reduce_to_primitive(s, elems, order)


# --- property tests ------------------------------------------------------------------

small_coeff = st.integers(min_value=-3, max_value=3)


def homogeneous_polys(ring, degree):
    monos = standard_monomials_of_degree([], ring.total_vars, degree)
    return st.lists(small_coeff, min_size=len(monos), max_size=len(monos)).map(
        lambda cs: Polynomial(ring, dict(zip(monos, cs)))
    )


@st.composite
def small_ideals(draw, ring=R2Z):
    count = draw(st.integers(min_value=1, max_value=3))
    gens = []
    for _ in range(count):
        d = draw(st.integers(min_value=1, max_value=3))
        gens.append(draw(homogeneous_polys(ring, d)))
    return Ideal(ring, gens)


@settings(max_examples=25, deadline=None)
@given(small_ideals(), homogeneous_polys(R2Z, 2))
def test_normal_form_idempotent(I, p):
    once = normal_form(p, I)
    assert normal_form(once, I) == once


@settings(max_examples=20, deadline=None)
@given(small_ideals(), homogeneous_polys(R2Z, 2))
def test_membership_oracle_property(I, probe):
    assert normal_form(probe, I).is_zero() == oracle_member(probe, list(I.generators))


@settings(max_examples=25, deadline=None)
@given(small_ideals(), homogeneous_polys(R2Z, 1), homogeneous_polys(R2Z, 2))
def test_colon_membership_characterization(I, f, g):
    if f.is_zero():
        return
    C = ideal_colon(I, f)
    assert normal_form(g, C).is_zero() == normal_form(g * f, I).is_zero()


@settings(max_examples=20, deadline=None)
@given(small_ideals())
def test_colon_chain_monotone(I):
    prev = ideal_sum(I, Ideal.from_strings(R2Z, ["z"]))
    cur = I
    for _ in range(3):
        cur = colon_by_variable_power(cur, "z", 1)
        step = ideal_sum(cur, Ideal.from_strings(R2Z, ["z"]))
        assert step.contains_ideal(prev)
        prev = step


@settings(max_examples=20, deadline=None)
@given(small_ideals())
def test_colon_routes_agree(I):
    # the rewriting shortcut, the elimination route and (when Artinian)
    # the kernel-lifting route compute the same colon
    z = Polynomial.variable(R2Z, "z")
    fast = _colon_by_last_variable(I)
    elim = _colon_elimination(I, z)
    assert ideal_equal(fast, elim)
    if artinian_monomial_basis(I) is not None:
        kern = _colon_artinian(I, z)
        assert ideal_equal(fast, kern)


@settings(max_examples=15, deadline=None)
@given(small_ideals(), homogeneous_polys(R2Z, 2))
def test_colon_routes_agree_general_divisor(I, f):
    if f.is_zero():
        return
    elim = _colon_elimination(I, f)
    if artinian_monomial_basis(I) is not None:
        assert ideal_equal(elim, _colon_artinian(I, f))
    assert elim.contains_ideal(I)


def test_regular_sequence_permutation_invariant():
    gens = [symmetric_generator("p", 2, 2), symmetric_generator("p", 2, 3)]
    assert certify_regular_sequence(gens) == certify_regular_sequence(gens[::-1])
