"""Round-trip fidelity of the text and JSON formats."""

import random

import pytest

from gridalgebra import GF, LaurentPoly, Patch, QQ, Shape, TorusConfig, ZZ
from gridalgebra.errors import InputFormatError
from gridalgebra.formats import (
    grid_from_text,
    grid_to_text,
    parse_shape_spec,
    poly_from_json,
    poly_from_text,
    poly_to_json,
    poly_to_text,
    shape_from_json,
    shape_to_json,
    source_from_json,
    source_to_json,
)

from helpers import random_poly


def test_poly_text_examples():
    f = poly_from_text("1 + x^-1 + y^2")
    assert f.terms == {(0, 0): 1, (-1, 0): 1, (0, 2): 1}
    assert poly_from_text(poly_to_text(f)) == f


def test_poly_text_signs_and_coefficients():
    f = poly_from_text("-3*x^-2*y + 1 - 2*y^5")
    assert f.terms == {(-2, 1): -3, (0, 0): 1, (0, 5): -2}


def test_poly_text_rational():
    f = poly_from_text("3/2*x - 1/3", QQ)
    from fractions import Fraction

    assert f.terms == {(1, 0): Fraction(3, 2), (0, 0): Fraction(-1, 3)}
    assert poly_from_text(poly_to_text(f), QQ) == f


def test_poly_text_zero():
    assert poly_from_text("0").is_zero
    assert poly_to_text(LaurentPoly.zero(ZZ)) == "0"


def test_poly_text_rejects_garbage():
    for bad in ("", "1 +", "x**2", "z + 1", "1 ++ x"):
        with pytest.raises(InputFormatError):
            poly_from_text(bad)


def test_poly_text_roundtrip_random():
    rng = random.Random(101)
    for dom in (ZZ, QQ, GF(7)):
        for _ in range(40):
            f = random_poly(rng, dom, max_terms=6, span=4)
            assert poly_from_text(poly_to_text(f), dom) == f


def test_poly_json_roundtrip_random():
    rng = random.Random(103)
    for dom in (ZZ, QQ, GF(5)):
        for _ in range(40):
            f = random_poly(rng, dom, max_terms=6, span=4)
            data = poly_to_json(f)
            assert poly_from_json(data) == f
    # domain travels inside the JSON
    f = random_poly(rng, GF(5))
    assert poly_from_json(poly_to_json(f)).domain == GF(5)


def test_poly_json_bigint_coefficients():
    f = LaurentPoly(ZZ, {(0, 0): 10**30, (5, -7): -(2**80)})
    assert poly_from_json(poly_to_json(f)) == f


def test_shape_roundtrip():
    for shape in (Shape.plus(), Shape.rectangle(3, 2), Shape([(5, -3), (0, 0)])):
        assert shape_from_json(shape_to_json(shape)) == shape


def test_shape_specs():
    assert parse_shape_spec("plus") == Shape.plus()
    assert parse_shape_spec("rect:3x2") == Shape.rectangle(3, 2)
    with pytest.raises(InputFormatError):
        parse_shape_spec("blob")


def test_grid_text_roundtrip():
    rows = [[1, -2, 3], [4, 5, -6]]
    assert grid_from_text(grid_to_text(rows)) == rows
    with pytest.raises(InputFormatError):
        grid_from_text("1 2\nx y\n")


def test_source_json_roundtrip():
    torus = TorusConfig([[0, 1], [2, 3]])
    assert source_from_json(source_to_json(torus)) == torus
    patch = Patch((-2, 5), [[1, 2, 3], [4, 5, 6]])
    assert source_from_json(source_to_json(patch)) == patch


def test_sft_spec_json_roundtrip():
    from gridalgebra import ClusterTile, cotiler_sft
    from gridalgebra.formats import sft_spec_from_json, sft_spec_to_json

    spec = cotiler_sft(ClusterTile(Shape.plus()))
    assert sft_spec_from_json(sft_spec_to_json(spec)) == spec


def test_annihilator_result_json_roundtrip():
    from gridalgebra import extract_patterns, find_annihilator
    from gridalgebra.formats import (
        annihilator_result_from_json,
        annihilator_result_to_json,
    )

    for torus in (TorusConfig.checkerboard(), TorusConfig.constant(4)):
        result = find_annihilator(extract_patterns(torus, Shape([(0, 0), (1, 0)])))
        data = annihilator_result_to_json(result)
        back = annihilator_result_from_json(data)
        assert back == result
