from fractions import Fraction
from itertools import product

import pytest

from tancone.grid import upper_points
from tancone.indexsets import (
    admissible_pairs,
    bruhat_leq,
    enumerate_indices,
    sharp,
    star,
)
from tancone.patch import (
    PatchMatrix,
    SignConvention,
    build_patch,
    column_inner_products,
    form_eps,
    generator_set,
    good_subset,
    initial_chain,
    mirror_sign,
    pair_minor,
    select_convention,
)
from tancone.ring import PolyRing, reduced_groebner, initial_ideal_generators
from tancone.verify import all_triples


def cofactor_det(entries, rows, cols, ring):
    """Independent determinant oracle: recursive first-row expansion."""
    if not rows:
        return ring.one()
    r, rest = rows[0], rows[1:]
    total = ring.zero()
    for j, c in enumerate(cols):
        rem = cols[:j] + cols[j + 1 :]
        sub = cofactor_det(entries, rest, rem, ring)
        term = entries[(r, c)] * sub
        total = total + (term if j % 2 == 0 else term.scale(-1))
    return total


def test_selected_convention_is_isotropic():
    for d in (1, 2, 3):
        conv = select_convention(d)
        for beta in enumerate_indices(d):
            m = build_patch(beta, d)
            assert m.convention == conv
            assert all(not p.terms for p in column_inner_products(m))


def test_verbatim_strict_rule_fails_isotropy_at_d2():
    # the strict-inequality boundary reading cannot be isotropic for every
    # beta under either candidate form; the selector must reject it
    for form in ("standard", "alternating"):
        conv = SignConvention("strict", form)
        broken = 0
        for beta in enumerate_indices(2):
            ring = PolyRing.for_patch(beta, 2)
            m = PatchMatrix(beta, 2, ring, conv)
            if any(p.terms for p in column_inner_products(m)):
                broken += 1
        assert broken > 0
    assert select_convention(2).rule == "split"


def test_patch_matrix_beta_13():
    m = build_patch((1, 3), 2)
    ring = m.ring
    X = {v: ring.gen(v) for v in ring.variables}
    assert m.entry(1, 1) == ring.one() and m.entry(3, 3) == ring.one()
    assert m.entry(1, 3) == ring.zero() and m.entry(3, 1) == ring.zero()
    assert m.entry(2, 1) == X[(2, 1)]
    assert m.entry(2, 3) == X[(2, 3)]
    assert m.entry(4, 1) == X[(4, 1)]
    # mirrored entry carries the isotropy-selected sign
    assert m.entry(4, 3) == X[(2, 1)].scale(-1)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_patch_variable_count(d):
    for beta in enumerate_indices(d):
        m = build_patch(beta, d)
        seen = set()
        for r in range(1, 2 * d + 1):
            for c in beta:
                for mono in m.entry(r, c).terms:
                    seen.add(mono)
        seen.discard((0,) * m.ring.nvars)
        assert len(seen) == d * (d + 1) // 2


def test_minor_examples():
    m = build_patch((1, 3), 2)
    ring = m.ring
    X41, X21, X23 = (ring.gen(v) for v in ring.variables)
    assert m.minor((2, 4)) == (X41 * X23 + X21 * X21).scale(-1)
    assert m.minor((1, 2)) == X23
    assert m.minor((1, 3)) == ring.one()


@pytest.mark.parametrize("d", [2, 3])
def test_minor_matches_cofactor_oracle(d):
    for beta in enumerate_indices(d):
        m = build_patch(beta, d)
        for theta in enumerate_indices(d, ambient_only=True):
            rows = sorted(set(theta) - set(beta))
            cols = sorted(set(beta) - set(theta))
            assert m.minor(theta) == cofactor_det(m.entries, rows, cols, m.ring)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_minor_sign_symmetry_with_sharp(d):
    for beta in enumerate_indices(d):
        m = build_patch(beta, d)
        for theta in enumerate_indices(d, ambient_only=True):
            f = m.minor(theta)
            g = m.minor(sharp(theta, d))
            assert f == g or f == g.scale(-1)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_minor_homogeneous_of_beta_degree(d):
    for beta in enumerate_indices(d):
        m = build_patch(beta, d)
        for pair in admissible_pairs(d):
            f = pair_minor(m, pair)
            assert f.terms
            assert f.is_homogeneous()
            assert f.degree() == pair.beta_degree(beta)


def test_generator_set_point_case():
    gens = generator_set((1, 3), (1, 3), (1, 3), 2)
    ring = gens.ring
    X41, X21, X23 = (ring.gen(v) for v in ring.variables)
    assert set(map(str, gens.polys)) == {
        "X(2,3)",
        "X(2,1)",
        "X(4,1)",
        "X(4,1)*X(2,3) + X(2,1)^2",
    }
    gb = reduced_groebner(gens.polys)
    inits = initial_ideal_generators(gb)
    assert sorted(ring.format_monomial(mo) for mo in inits) == [
        "X(2,1)",
        "X(2,3)",
        "X(4,1)",
    ]


def test_generator_set_free_case_empty():
    gens = generator_set((1, 2), (1, 3), (3, 4), 2)
    assert gens.polys == []


def test_generator_set_requires_valid_triple():
    with pytest.raises(ValueError):
        generator_set((3, 4), (1, 3), (1, 3), 2)
    with pytest.raises(ValueError):
        generator_set((1, 4), (1, 4), (1, 4), 2)


def test_good_subset_point_case():
    gens = generator_set((1, 3), (1, 3), (1, 3), 2)
    pairs, polys = good_subset(gens)
    assert set(map(str, polys)) == {"X(2,3)", "X(2,1)", "X(4,1)"}
    # the mixed-sign chain X(4,1)*X(2,3) disqualifies its pair
    excluded = [p for p in gens.pairs if p.top == (2, 4) and p.bot == (2, 4)]
    assert excluded and excluded[0] not in pairs


def test_good_subset_is_subset_of_generators():
    for a, b, g in all_triples(2):
        gens = generator_set(a, b, g, 2)
        pairs, polys = good_subset(gens)
        assert set(pairs) <= set(gens.pairs)
        assert {str(p) for p in polys} <= {str(p) for p in gens.polys}


def test_initial_chain_classification():
    gens = generator_set((1, 3), (1, 3), (1, 3), 2)
    by_str = {str(f): f for f in gens.polys}
    mixed = by_str["X(4,1)*X(2,3) + X(2,1)^2"]
    ch = initial_chain(mixed)
    assert ch == ((4, 1), (2, 3))  # a chain, but mixed-sign
    ring = gens.ring
    X21 = ring.gen((2, 1))
    assert initial_chain(X21 * X21) is None  # not squarefree


def fixed_point_coords(betap, beta, d, ring):
    moved = set(beta) - set(betap)
    return [
        Fraction(1) if (c in moved and r == star(c, d)) else Fraction(0)
        for (r, c) in ring.variables
    ]


def eval_at(f, coords):
    total = Fraction(0)
    for mono, c in f.terms.items():
        v = Fraction(c)
        for i, e in enumerate(mono):
            if e:
                v *= coords[i] ** e
        total += v
    return total


def support_mixes(betap, beta, d):
    moved = sorted(set(beta) - set(betap))
    base = sorted(set(beta) - set(moved))
    for choice in product(*[(c, star(c, d)) for c in moved]):
        yield tuple(sorted(base + list(choice)))


@pytest.mark.parametrize("d", [2, 3])
def test_point_substitution_oracle(d):
    """Generators vanish at the indicator point of a fixed point exactly
    when the point's whole Pluecker support lies inside [alpha, gamma]."""
    for a, b, g in all_triples(d):
        gens = generator_set(a, b, g, d)
        for bp in enumerate_indices(d):
            coords = fixed_point_coords(bp, b, d, gens.ring)
            vanishes = all(eval_at(f, coords) == 0 for f in gens.polys)
            in_variety = all(
                bruhat_leq(a, mix) and bruhat_leq(mix, g)
                for mix in support_mixes(bp, b, d)
            )
            assert vanishes == in_variety


def test_mirror_sign_rules():
    # strictly-lower points at d=2 under the selected split rule
    assert mirror_sign("split", 4, 3, 2) == -1  # c* = d boundary
    assert mirror_sign("strict", 4, 3, 2) == 1  # verbatim reading differs
    assert mirror_sign("split", 4, 2, 2) == 1


def test_form_eps_shapes():
    assert [form_eps("standard", i, 2) for i in range(1, 5)] == [1, 1, -1, -1]
    assert [form_eps("alternating", i, 2) for i in range(1, 5)] == [1, -1, 1, -1]
