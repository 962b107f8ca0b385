"""Patterns, complexity counts, polynomial action, periods."""

import random

import pytest

from gridalgebra import (
    LaurentPoly,
    Patch,
    Shape,
    TorusConfig,
    ZZ,
    apply_poly,
    complexity,
    detect_periods,
    extract_patterns,
    is_annihilated,
    rectangle_complexity_profile,
)
from gridalgebra.errors import EmptyValidRegion, ShapeTooLarge, ZeroPolynomial
from gridalgebra.formats import poly_from_text

from helpers import brute_force_torus_patterns, random_poly, random_torus


def P(text, domain=ZZ):
    return poly_from_text(text, domain)


CHECKER = TorusConfig.checkerboard()


def test_shape_canonical_order():
    s = Shape([(1, 0), (0, 0), (0, 1)])
    assert s.cells == ((0, 0), (1, 0), (0, 1))  # sorted by (u2, u1)


def test_extract_checkerboard_two_phases():
    pats = extract_patterns(CHECKER, Shape.rectangle(2, 2))
    assert len(pats) == 2


def test_extract_constant_single_pattern():
    for shape in (Shape.rectangle(3, 2), Shape.plus()):
        assert len(extract_patterns(TorusConfig.constant(7), shape)) == 1


def test_extract_distinct_patch_cells():
    patch = Patch((0, 0), [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    pats = extract_patterns(patch, Shape([(0, 0)]))
    assert len(pats) == 9


def test_extract_patch_shape_too_large():
    patch = Patch((0, 0), [[1, 2], [3, 4]])
    with pytest.raises(ShapeTooLarge):
        extract_patterns(patch, Shape.rectangle(3, 1))


def test_complexity_checkerboard():
    assert complexity(CHECKER, Shape.rectangle(2, 2)) == (2, True)


def test_complexity_distinct_dominoes():
    patch = Patch((0, 0), [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert complexity(patch, Shape.rectangle(2, 1)) == (6, False)


def test_complexity_constant():
    assert complexity(TorusConfig.constant(0), Shape.rectangle(4, 4)) == (1, True)


def test_profile_constant_all_low():
    table = rectangle_complexity_profile(TorusConfig.constant(3), 4, 4)
    assert all(entry == (1, True) for entry in table.values())


def test_profile_period3_stripes():
    stripes = TorusConfig([[0, 1, 2]])  # value depends on x mod 3 only
    table = rectangle_complexity_profile(stripes, 4, 3)
    for m in range(1, 4):
        count, low = table[(1, m)]
        assert count == 3
        assert low == (3 <= m)


def test_profile_matches_brute_force():
    rng = random.Random(3)
    torus = TorusConfig([[rng.randint(0, 1) for _ in range(8)] for _ in range(8)])
    table = rectangle_complexity_profile(torus, 3, 3)
    for (n, m), (count, low) in table.items():
        expected = len(brute_force_torus_patterns(torus, Shape.rectangle(n, m)))
        assert count == expected
        assert low == (count <= n * m)


def test_profile_patch_bounds():
    patch = Patch((0, 0), [[1, 2], [3, 4]])
    with pytest.raises(ShapeTooLarge):
        rectangle_complexity_profile(patch, 3, 1)


def test_apply_monomial_translates():
    rng = random.Random(5)
    torus = random_torus(rng)
    moved = apply_poly(LaurentPoly.monomial(ZZ, (1, 0)), torus)
    for i, j in torus.fundamental_cells():
        assert moved.value_at((i, j)) == torus.value_at((i - 1, j))


def test_apply_period_binomial_annihilates():
    rng = random.Random(9)
    torus = random_torus(rng)
    f = P(f"x^{torus.k} - 1")
    out = apply_poly(f, torus)
    assert all(out.value_at(c) == 0 for c in out.fundamental_cells())


def test_apply_checkerboard_neighbor_sum():
    # hand convolution: (1 + x) c at u is c_u + c_{u-(1,0)} = 0 + 1
    out = apply_poly(P("1 + x"), CHECKER)
    assert all(out.value_at(c) == 1 for c in out.fundamental_cells())


def test_apply_patch_valid_region():
    patch = Patch((0, 0), [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    out = apply_poly(P("x - 1"), patch)
    assert out.origin == (1, 0)
    assert out.width == 2 and out.height == 3
    # (f c)_u = sum_v f_v c_{u-v}: left neighbor minus self
    assert out.value_at((1, 0)) == 1 - 2


def test_apply_empty_region():
    patch = Patch((0, 0), [[1, 2], [3, 4]])
    with pytest.raises(EmptyValidRegion):
        apply_poly(P("x^3 - 1"), patch)


def test_apply_rejects_zero():
    with pytest.raises(ZeroPolynomial):
        apply_poly(LaurentPoly.zero(ZZ), CHECKER)


def test_is_annihilated_periods():
    torus = TorusConfig([[0, 1, 2], [1, 2, 0]])
    assert is_annihilated(torus, P("x^3 - 1")).kind == "yes"
    assert is_annihilated(torus, P("y^2 - 1")).kind == "yes"
    assert is_annihilated(torus, P("x - 1")).kind == "no"


def test_is_annihilated_checkerboard_x_squared():
    assert is_annihilated(CHECKER, P("x^2 - 1")).kind == "yes"


def test_is_annihilated_constant_counterexample():
    check = is_annihilated(TorusConfig.constant(1), P("x - 2"))
    assert check.kind == "no" and check.witness == (0, 0)


def test_is_annihilated_patch_region_verdict():
    patch = Patch((0, 0), [[1, 1, 1], [1, 1, 1]])
    check = is_annihilated(patch, P("x - 1"))
    assert check.kind == "yes_on_region"
    assert check.region == (1, 0, 2, 1)


def test_periods_binomial_equivalence():
    # x^t - 1 annihilates exactly at torus periods, both directions
    rng = random.Random(17)
    for _ in range(25):
        torus = random_torus(rng, kmax=5, lmax=5)
        bound = max(torus.k, torus.l)
        detected = detect_periods(torus)
        for tx in range(-bound, bound + 1):
            for ty in range(-bound, bound + 1):
                if (tx, ty) == (0, 0):
                    continue
                from gridalgebra import normalize_direction

                u = normalize_direction((tx, ty))
                if max(abs(u[0]), abs(u[1])) > bound:
                    continue
                mult = (tx // u[0]) if u[0] else (ty // u[1])
                expected = u in detected and abs(mult) % detected[u] == 0
                got = is_annihilated(torus, P(f"x^{tx}*y^{ty} - 1")).kind == "yes"
                assert got == expected


def test_detect_periods_examples():
    cb = detect_periods(CHECKER)
    assert cb[(1, 0)] == 2 and cb[(0, 1)] == 2 and cb[(1, 1)] == 1

    const = detect_periods(TorusConfig.constant(4))
    assert const[(1, 0)] == 1 and const[(0, 1)] == 1

    stripes = detect_periods(TorusConfig([[0], [1]]))  # rows alternate in y
    assert stripes[(1, 0)] == 1 and stripes[(0, 1)] == 2


def test_apply_linearity_and_composition():
    rng = random.Random(21)
    for _ in range(15):
        torus = random_torus(rng, kmax=4, lmax=4)
        f, g = random_poly(rng), random_poly(rng)
        both = apply_poly(f + g, torus) if not (f + g).is_zero else None
        fa = apply_poly(f, torus)
        ga = apply_poly(g, torus)
        if both is not None:
            for c in torus.fundamental_cells():
                assert both.value_at(c) == fa.value_at(c) + ga.value_at(c)
        composed = apply_poly(f * g, torus)
        staged = apply_poly(f, apply_poly(g, torus))
        assert composed == staged


def test_patch_complexity_translation_invariant():
    rng = random.Random(25)
    rows = [[rng.randint(0, 2) for _ in range(5)] for _ in range(4)]
    a = Patch((0, 0), rows)
    b = Patch((-3, 7), rows)
    for shape in (Shape.rectangle(2, 2), Shape([(0, 0), (1, 1)])):
        assert complexity(a, shape) == complexity(b, shape)


def test_torus_extraction_matches_brute_force():
    rng = random.Random(27)
    for _ in range(10):
        torus = random_torus(rng, kmax=5, lmax=5)
        shape = Shape([(0, 0), (1, 0), (0, 1), (2, 1)])
        ours = {p.values for p in extract_patterns(torus, shape)}
        assert ours == brute_force_torus_patterns(torus, shape)
