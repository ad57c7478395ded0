"""The binary tree of complete intersections.

Members of the power-sum family A_n(a, m) live in K[x1..xn]; the left child
of an ideal is (I : xn) and the right child is the contraction of I + (xn)
to one variable fewer.  This module enumerates the families, verifies the
tree closure conditions on bounded enumerations, checks Hilbert-function
additivity of the child split, derives central-simple-module arrows with
the engine, and exports diagrams as DOT or JSON.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .csm import (
    central_simple_modules,
    csm_chain,
    cyclic_presentation,
    sym_e,
)
from .ideals import (
    Ideal,
    certify_regular_sequence,
    colon_by_variable_power,
    ideal_equal,
    ideal_sum,
    normal_form,
    quotient_dimension,
    standard_monomials_of_degree,
)
from .lefschetz import find_lefschetz_element, module_slp_search, module_view
from .polyring import Polynomial, RingSpec
from .quotient import build_quotient
from .symfun import symmetric_generator

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def member_label(n: int, a: int, m: int) -> str:
    """Compact label with the level and column as subscripts, e.g. ''"""
    return f"{n}".translate(_SUB) + str(a) + f"{m}".translate(_SUB)


@dataclass(frozen=True)
class FamilyMember:
    n: int
    a: int
    m: int
    label: str
    ideal: Ideal


@dataclass
class TreeNode:
    ideal: Ideal
    depth: int
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None
    colon_exponent: int = 0


def family_member(n: int, a: int, m: int) -> FamilyMember:
    """A_n(a, m): m power sums of consecutive degrees starting at a,
    padded with e_(m+1)..e_n; a >= 2 except for the coinvariant member
    A_n(1, n) = (e_1..e_n)."""
    if n < 1 or not 1 <= m <= n:
        raise ValueError(f"invalid member level n={n}, m={m}")
    ring = RingSpec(n, has_z=False)
    if a == 1:
        if m != n:
            raise ValueError("a = 1 requires m = n")
        gens = [symmetric_generator("e_signed", n, i) for i in range(1, n + 1)]
    elif a >= 2:
        gens = [symmetric_generator("p", n, a + t) for t in range(m)]
        gens += [symmetric_generator("e_signed", n, i) for i in range(m + 1, n + 1)]
    else:
        raise ValueError(f"invalid a={a}")
    if not certify_regular_sequence(gens):
        raise AssertionError(f"family member ({n},{a},{m}) failed certification")
    return FamilyMember(n, a, m, member_label(n, a, m), Ideal(ring, gens))


def family_members(n: int, a_max: int):
    """All of A_n with a <= a_max: the a = 1 member plus the grid a >= 2."""
    out = [family_member(n, 1, n)]
    for a in range(2, a_max + 1):
        for m in range(1, n + 1):
            out.append(family_member(n, a, m))
    return out


# --- children ------------------------------------------------------------------


def _smaller_ring(ring: RingSpec) -> RingSpec:
    if ring.has_z:
        return RingSpec(ring.nvars, has_z=False)
    if ring.nvars < 2:
        raise ValueError("no smaller ring below one variable")
    return RingSpec(ring.nvars - 1, has_z=False)


def contract_modulo_last(I: Ideal) -> Ideal:
    """Contraction of I + (v) to the ring without the cheapest variable."""
    small = _smaller_ring(I.ring)
    slot = I.ring.total_vars - 1
    gens = []
    for g in ideal_sum(I, Ideal(I.ring, [Polynomial.variable(I.ring, slot)])).groebner_basis():
        if g.leading_monomial()[slot] == 0:
            gens.append(g.contract(small))
    return Ideal(small, gens)


def children(I: Ideal):
    """(left, right): (I : v) when v is not already in I, and the
    contraction of I + (v) when the ring has at least two variables."""
    slot = I.ring.total_vars - 1
    v = Polynomial.variable(I.ring, slot)
    left = None
    if not normal_form(v, I).is_zero():
        left = colon_by_variable_power(I, slot, 1)
    right = None
    if I.ring.total_vars >= 2:
        right = contract_modulo_last(I)
    return left, right


def exact_sequence_check(I: Ideal) -> dict:
    """Hilbert additivity of the child split: the v-multiplication embeds
    R/(I : v) shifted by one, with quotient R/(I + (v))."""
    slot = I.ring.total_vars - 1
    left = colon_by_variable_power(I, slot, 1)
    right = ideal_sum(I, Ideal(I.ring, [Polynomial.variable(I.ring, slot)]))
    hf = _hf_or_empty(I)
    hf_left = _hf_or_empty(left)
    hf_right = _hf_or_empty(right)
    width = max(len(hf), len(hf_left) + 1, len(hf_right))

    def at(v, d):
        return v[d] if 0 <= d < len(v) else 0

    ok = all(
        at(hf, d) == at(hf_left, d - 1) + at(hf_right, d) for d in range(width)
    )
    return {
        "verifier": "exact-sequence",
        "ideal": str(I),
        "hilbert": list(hf),
        "left": list(hf_left),
        "right": list(hf_right),
        "passed": ok,
    }


def _hf_or_empty(I: Ideal):
    from .ideals import artinian_monomial_basis

    basis = artinian_monomial_basis(I)
    if basis is None:
        raise ValueError(f"{I} is not Artinian")
    return tuple(len(b) for b in basis)


# --- complete intersection certification for computed ideals --------------------


def minimal_generator_degrees(I: Ideal):
    """Degrees of a minimal homogeneous generating set (graded Nakayama)."""
    from .ideals import artinian_monomial_basis

    basis = artinian_monomial_basis(I)
    if basis is None:
        raise ValueError(f"{I} is not Artinian")
    ring = I.ring
    width = ring.total_vars
    socle = len(basis) - 1
    degs = []
    prev_ideal_basis = []  # polynomials of the previous degree spanning I_(d-1)
    for d in range(0, socle + 2):
        monos = standard_monomials_of_degree([], width, d)
        std = set(basis[d]) if d <= socle else set()
        in_monos = [m for m in monos if m not in std]
        index = {m: i for i, m in enumerate(monos)}
        # triangular basis of I_d: m - nf(m) for leading monomials m in In(I)_d
        cur_basis = []
        for m in in_monos:
            poly = Polynomial.monomial(ring, m) - normal_form(Polynomial.monomial(ring, m), I)
            cur_basis.append(poly)
        dim_id = len(cur_basis)
        rows = []
        for f in prev_ideal_basis:
            for v in range(width):
                prod = f * Polynomial.variable(ring, v)
                row = [Fraction(0)] * len(monos)
                for mono, c in prod.terms:
                    row[index[mono]] = c
                rows.append(row)
        spanned = linalg.rank(rows) if rows else 0
        fresh = dim_id - spanned
        degs.extend([d] * fresh)
        prev_ideal_basis = cur_basis
    return degs


def certify_complete_intersection(I: Ideal) -> bool:
    """Artinian with exactly nvars minimal generators whose degree product
    is the quotient dimension."""
    dim = quotient_dimension(I)
    if dim is None:
        return False
    degs = minimal_generator_degrees(I)
    if len(degs) != I.ring.total_vars:
        return False
    prod = 1
    for d in degs:
        prod *= d
    return prod == dim


# --- bounded family enumerations -------------------------------------------------


def monomial_ci_family(n: int, exp_max: int):
    """All (x1^a1, ..., xn^an) with 1 <= ai <= exp_max."""
    ring = RingSpec(n, has_z=False)
    out = []

    def rec(prefix):
        if len(prefix) == n:
            gens = [Polynomial.variable(ring, i) ** e for i, e in enumerate(prefix)]
            out.append({"ideal": Ideal(ring, gens), "exponents": tuple(prefix)})
            return
        for e in range(1, exp_max + 1):
            rec(prefix + [e])

    rec([])
    return out


def colon_closure_family(n: int, a_max: int):
    """The colon closures of the power-sum members: (p_a..p_(a+n-1)) : xn^i
    for 0 <= i <= an-1, and (p_a..p_(a+b-1), e_(b+1)..e_n) : xn^i for
    0 <= i <= (a-1)b + n - 1."""
    ring = RingSpec(n, has_z=False)
    slot = n - 1
    out = []
    for a in range(1, a_max + 1):
        base = Ideal(ring, [symmetric_generator("p", n, a + t) for t in range(n)])
        cur = base
        for i in range(a * n):
            out.append({"ideal": cur, "kind": "pure", "a": a, "b": None, "i": i})
            cur = colon_by_variable_power(cur, slot, 1)
    for a in range(2, a_max + 1):
        for b in range(1, n):
            gens = [symmetric_generator("p", n, a + t) for t in range(b)]
            gens += [symmetric_generator("e_signed", n, i) for i in range(b + 1, n + 1)]
            cur = Ideal(ring, gens)
            for i in range((a - 1) * b + n):
                out.append({"ideal": cur, "kind": "mixed", "a": a, "b": b, "i": i})
                cur = colon_by_variable_power(cur, slot, 1)
    return out


def _find_in(ideal: Ideal, pool) -> bool:
    dim = quotient_dimension(ideal)
    for entry in pool:
        if quotient_dimension(entry["ideal"]) == dim and ideal_equal(entry["ideal"], ideal):
            return True
    return False


def verify_tree_conditions(kind: str, n_max: int, bound: int) -> dict:
    """Closure of a bounded family enumeration under both children:
    the right child of every level-n member appears at level n-1, the
    left child (when it exists) stays at level n, and every member is a
    complete intersection of full length.  Hilbert additivity of the
    split is checked at every member."""
    if kind == "monomial":
        families = {n: monomial_ci_family(n, bound) for n in range(1, n_max + 1)}
    elif kind == "colon-closure":
        families = {n: colon_closure_family(n, bound) for n in range(1, n_max + 1)}
    else:
        raise ValueError(f"unknown family kind {kind!r}")
    report = {"verifier": "tree-conditions", "params": {"kind": kind, "n_max": n_max, "bound": bound}}
    checks = []
    counts = {n: len(families[n]) for n in families}
    report["family_sizes"] = counts
    for n in range(1, n_max + 1):
        for entry in families[n]:
            I = entry["ideal"]
            name = f"n{n}:{entry}"
            ci_ok = certify_complete_intersection(I)
            exact_ok = exact_sequence_check(I)["passed"] if n >= 1 else True
            left_ok = True
            right_ok = True
            left, right = children(I) if n >= 2 else (None, None)
            if n >= 2:
                right_ok = _find_in(right, families[n - 1])
                slot = n - 1
                v = Polynomial.variable(I.ring, slot)
                if not normal_form(v, I).is_zero():
                    left_ok = _find_in(left, families[n])
            elif n == 1:
                # level 1: left child (when present) must stay in the family
                slot = 0
                v = Polynomial.variable(I.ring, slot)
                if not normal_form(v, I).is_zero():
                    left_ok = _find_in(colon_by_variable_power(I, slot, 1), families[1])
            ok = ci_ok and exact_ok and left_ok and right_ok
            if not ok:
                checks.append({
                    "name": name, "passed": False, "ci": ci_ok,
                    "exact_sequence": exact_ok, "left": left_ok, "right": right_ok,
                })
    checks.append({"name": "all_members", "passed": not any(not c["passed"] for c in checks),
                   "members": sum(counts.values())})
    report["checks"] = checks
    report["passed"] = all(c["passed"] for c in checks)
    return report


# --- central simple module arrows -------------------------------------------------


def _contract_annihilator(ann: Ideal) -> Ideal:
    """Drop the cheapest variable from an annihilator that contains it."""
    small = _smaller_ring(ann.ring)
    slot = ann.ring.total_vars - 1
    gens = []
    for g in ann.groebner_basis():
        if g.leading_monomial()[slot] == 0:
            gens.append(g.contract(small))
    return Ideal(small, gens)


def resolve_member_label(ideal: Ideal, n: int, a_bound: int):
    """Find (a, m) with A_n(a, m) equal to the ideal, or None."""
    dim = quotient_dimension(ideal)
    candidates = [family_member(n, 1, n)]
    for a in range(2, a_bound + 1):
        for m in range(1, n + 1):
            candidates.append(family_member(n, a, m))
    for cand in candidates:
        if quotient_dimension(cand.ideal) == dim and ideal_equal(cand.ideal, ideal):
            return cand
    return None


def member_csm_arrows(member: FamilyMember, check_modules: bool = False, seed: int = 0):
    """Engine-derived arrows from one member to the members one level down.

    Every central simple module of (A, xn) is presented cyclically by the
    matching elementary symmetric polynomial; its annihilator, contracted
    below xn, is located inside the level-(n-1) family by exact ideal
    equality."""
    n = member.n
    if n < 2:
        return [], {"passed": True, "modules": []}
    I = member.ideal
    chain = csm_chain(I)
    modules = central_simple_modules(I, chain)
    arrows = []
    details = []
    passed = True
    for mod in modules:
        j = mod.index
        g = sym_e(I.ring, j - 1)
        checked, sub = cyclic_presentation(mod.numerator, mod.denominator, g)
        entry = {"j": j, "presentation": sub["passed"]}
        target = None
        if sub["passed"]:
            contracted = _contract_annihilator(checked.annihilator)
            target = resolve_member_label(contracted, n - 1, max(member.a, 2))
        if target is None:
            passed = False
            entry["target"] = None
        else:
            entry["target"] = target.label
            arrows.append((j, target))
        if check_modules:
            amb = build_quotient(mod.denominator)
            view = module_view(amb, g)
            found = module_slp_search(view, seed=seed)
            entry["module_slp"] = found is not None
            passed = passed and found is not None
        details.append(entry)
    return arrows, {"passed": passed, "modules": details}


def verify_family_slp(n_max: int, a_max: int, check_modules: bool = True, seed: int = 0) -> dict:
    """Every family member up to the bounds admits a Lefschetz element with
    all power maps of full rank, and its central simple modules land in
    the family one level down (with module-level Lefschetz checks when
    check_modules is set)."""
    report = {"verifier": "family-slp", "params": {"n_max": n_max, "a_max": a_max},
              "seed": seed, "members": []}
    ok_all = True
    for n in range(1, n_max + 1):
        for member in family_members(n, a_max):
            A = build_quotient(member.ideal)
            found = find_lefschetz_element(A, seed=seed)
            entry = {
                "label": member.label,
                "n": n, "a": member.a, "m": member.m,
                "dimension": A.dimension(),
                "hilbert": list(A.hilbert_function()),
                "slp": found is not None,
            }
            if found is not None:
                y, rep = found
                entry["linear_form"] = str(y)
                entry["tries"] = rep.tries
            arrows, arrow_report = member_csm_arrows(member, check_modules=check_modules, seed=seed)
            if n >= 2:
                entry["arrows"] = [{"j": j, "to": t.label} for j, t in arrows]
                entry["arrows_ok"] = arrow_report["passed"]
            ok_all = ok_all and entry["slp"] and arrow_report["passed"]
            report["members"].append(entry)
    report["passed"] = ok_all
    return report


def csm_diagram(roots, check_modules: bool = False, seed: int = 0) -> dict:
    """Arrow diagram spanned by iterating central-simple-module arrows from
    the given members down to one variable."""
    nodes = {}
    edges = []
    queue = list(roots)
    resolved = {}
    all_ok = True
    while queue:
        member = queue.pop(0)
        if member.label in nodes:
            continue
        hf = list(build_quotient(member.ideal).hilbert_function())
        nodes[member.label] = {
            "label": member.label,
            "level": member.n,
            "ideal": str(member.ideal),
            "hilbert": hf,
        }
        if member.n < 2:
            continue
        if member.label not in resolved:
            arrows, rep = member_csm_arrows(member, check_modules=check_modules, seed=seed)
            resolved[member.label] = arrows
            all_ok = all_ok and rep["passed"]
        for j, target in resolved[member.label]:
            edges.append({"from": member.label, "to": target.label, "kind": "csm", "index": j})
            queue.append(target)
    edges.sort(key=lambda e: (-nodes[e["from"]]["level"], e["from"], e["index"]))
    return {
        "nodes": sorted(nodes.values(), key=lambda v: (-v["level"], v["label"])),
        "edges": edges,
        "passed": all_ok,
    }


def binary_tree(root: Ideal, max_depth: int) -> TreeNode:
    """Left/right tree under (I : v) and the contraction of I + (v)."""
    node = TreeNode(ideal=root, depth=root.ring.total_vars)
    if max_depth <= 0:
        return node
    left, right = children(root)
    if left is not None and not ideal_equal(left, root):
        node.left = binary_tree(left, max_depth - 1)
        node.left.colon_exponent = node.colon_exponent + 1
    if right is not None:
        node.right = binary_tree(right, max_depth - 1)
    return node


def tree_graph(node: TreeNode) -> dict:
    """Flatten a TreeNode into the same graph schema as csm_diagram."""
    nodes = []
    edges = []

    def walk(cur, name):
        hf = list(_hf_or_empty(cur.ideal))
        nodes.append({"label": name, "level": cur.depth,
                      "ideal": cur.ideal.canonical_str(), "hilbert": hf})
        if cur.left is not None:
            child = f"{name}L"
            edges.append({"from": name, "to": child, "kind": "left", "index": cur.left.colon_exponent})
            walk(cur.left, child)
        if cur.right is not None:
            child = f"{name}R"
            edges.append({"from": name, "to": child, "kind": "right", "index": 0})
            walk(cur.right, child)

    walk(node, "root")
    return {"nodes": nodes, "edges": edges, "passed": True}


def export_dot(graph: dict) -> str:
    """Deterministic graphviz rendering of a diagram graph."""
    lines = ["digraph tree {", "  rankdir=TB;"]
    levels = {}
    for node in graph["nodes"]:
        levels.setdefault(node["level"], []).append(node["label"])
        lines.append(f'  "{node["label"]}" [shape=box];')
    for level in sorted(levels, reverse=True):
        members = " ".join(f'"{l}";' for l in sorted(levels[level]))
        lines.append("  { rank=same; " + members + " }")
    for e in graph["edges"]:
        style = {"left": "dashed", "right": "solid", "csm": "solid"}[e["kind"]]
        lines.append(
            f'  "{e["from"]}" -> "{e["to"]}" [style={style}, label="{e["index"]}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(graph: dict) -> str:
    import json

    return json.dumps({"nodes": graph["nodes"], "edges": graph["edges"]},
                      sort_keys=True, indent=2) + "\n"


def export_tree(subject, format: str = "dot") -> str:
    """Serialize a diagram: a graph dict, a TreeNode, or family members
    (whose module arrows are derived first)."""
    if isinstance(subject, TreeNode):
        graph = tree_graph(subject)
    elif isinstance(subject, dict):
        graph = subject
    else:
        graph = csm_diagram(list(subject))
    if format == "dot":
        return export_dot(graph)
    if format == "json":
        return export_json(graph)
    raise ValueError(f"unknown export format {format!r}")
