"""Clifford algebras by normal ordering, the quotient map, deformation
maps between algebras, twisted products, gauge action, symbol and
quantization."""

import random
from fractions import Fraction

import pytest

from cliffbundle import (AlgebraContext, BilinearForm, CharacteristicError,
                         CliffElt, CliffordContext, DualElt, Field, FormError,
                         QuadraticForm, RATIONALS, TensorElt,
                         clifford_contract, clifford_contract_vec, contract,
                         deform, deform_apply, dual_two_form, exp_contract,
                         interior, quantize, quotient_map, symbol,
                         twisted_mul)
from cliffbundle.sampling import (rand_alternating, rand_bilinear, rand_cliff,
                                  rand_dual_two_form, rand_linear_form,
                                  rand_quadratic, rand_tensor, rand_vector)

from oracles import quantize_perm_sum

FIELDS = (RATIONALS, Field(2), Field(7))


def _hyperbolic_plane():
    # Q(e1) = Q(e2) = 0, polar(e1, e2) = 1
    ctx = AlgebraContext(2, RATIONALS)
    return CliffordContext(QuadraticForm.make(ctx, [0, 0], [[1]]))


def test_normal_ordering_hyperbolic():
    cctx = _hyperbolic_plane()
    e1 = CliffElt.blade(cctx, (1,))
    e2 = CliffElt.blade(cctx, (2,))
    assert e1 * e2 == CliffElt.blade(cctx, (1, 2))
    assert e2 * e1 == CliffElt.unit(cctx) - CliffElt.blade(cctx, (1, 2))
    assert e1 * e1 == CliffElt.zero(cctx)
    assert (e1 * e2 + e2 * e1) == CliffElt.unit(cctx)


def test_vector_squares():
    rng = random.Random(2)
    for field in FIELDS:
        ctx = AlgebraContext(4, field)
        for _ in range(30):
            cctx = CliffordContext(rand_quadratic(rng, ctx))
            x = rand_vector(rng, ctx)
            xe = CliffElt.from_vector(cctx, x)
            assert xe * xe == cctx.quadratic(x) * CliffElt.unit(cctx)


def test_quotient_is_algebra_map():
    rng = random.Random(4)
    for field in FIELDS:
        ctx = AlgebraContext(4, field)
        for _ in range(25):
            cctx = CliffordContext(rand_quadratic(rng, ctx))
            u = rand_tensor(rng, ctx, max_grade=3, terms=2)
            v = rand_tensor(rng, ctx, max_grade=3, terms=2)
            assert quotient_map(cctx, u * v) \
                == quotient_map(cctx, u) * quotient_map(cctx, v)


def test_quotient_kills_defining_relations():
    rng = random.Random(6)
    ctx = AlgebraContext(4, RATIONALS)
    for _ in range(25):
        cctx = CliffordContext(rand_quadratic(rng, ctx))
        x = rand_vector(rng, ctx)
        rel = TensorElt.from_vector(x) * TensorElt.from_vector(x) \
            - cctx.quadratic(x) * TensorElt.unit(ctx)
        assert not quotient_map(cctx, rel)


def test_quotient_nontrivial():
    # the unit never dies, for any quadratic form
    rng = random.Random(8)
    for field in FIELDS:
        ctx = AlgebraContext(3, field)
        for _ in range(10):
            cctx = CliffordContext(rand_quadratic(rng, ctx))
            assert quotient_map(cctx, TensorElt.unit(ctx))


def test_descended_contraction():
    rng = random.Random(10)
    for field in FIELDS:
        ctx = AlgebraContext(4, field)
        for _ in range(20):
            cctx = CliffordContext(rand_quadratic(rng, ctx))
            f = rand_linear_form(rng, ctx)
            u = rand_tensor(rng, ctx)
            assert quotient_map(cctx, TensorElt(ctx, dict())) == CliffElt.zero(cctx)
            assert clifford_contract(f, quotient_map(cctx, u)) \
                == quotient_map(cctx, contract(f, u))


def test_deform_between_algebras():
    rng = random.Random(12)
    for field in FIELDS:
        ctx = AlgebraContext(4, field)
        for _ in range(20):
            target = CliffordContext(rand_quadratic(rng, ctx))
            F = rand_bilinear(rng, ctx)
            src = target.shift(F)
            w = rand_cliff(rng, src)
            out = deform(F, w, target=target)
            assert out.cctx == target
            # vectors are fixed, the unit is fixed
            assert deform(F, CliffElt.unit(src), target=target) \
                == CliffElt.unit(target)
            x = rand_vector(rng, ctx)
            assert deform(F, CliffElt.from_vector(src, x), target=target) \
                == CliffElt.from_vector(target, x)


def test_deform_context_mismatch():
    # the element's form must equal target form + quadratic part of F
    ctx = AlgebraContext(2, RATIONALS)
    cctx = CliffordContext(QuadraticForm.make(ctx, [1, 1], [[0]]))
    F = BilinearForm.zero(ctx)
    wrong_target = CliffordContext(QuadraticForm.make(ctx, [5, 5], [[0]]))
    with pytest.raises(FormError):
        deform(F, CliffElt.unit(cctx), target=wrong_target)


def test_deform_apply_operator():
    rng = random.Random(14)
    for field in FIELDS:
        ctx = AlgebraContext(3, field)
        for _ in range(20):
            base = CliffordContext(rand_quadratic(rng, ctx))
            F = rand_bilinear(rng, ctx)
            src = base.shift(F)
            u = rand_cliff(rng, src, terms=2)
            v = rand_cliff(rng, src, terms=2)
            w = rand_cliff(rng, base, terms=2)
            assert deform_apply(F, u * v, w) \
                == deform_apply(F, u, deform_apply(F, v, w))
            assert deform_apply(F, u, CliffElt.unit(base)) \
                == deform(F, u, target=base)


def test_twisted_product_vector_rule():
    rng = random.Random(16)
    for field in FIELDS:
        ctx = AlgebraContext(4, field)
        for _ in range(20):
            cctx = CliffordContext(rand_quadratic(rng, ctx))
            F = rand_bilinear(rng, ctx)
            x = rand_vector(rng, ctx)
            v = rand_cliff(rng, cctx)
            xe = CliffElt.from_vector(cctx, x)
            assert twisted_mul(F, xe, v) == xe * v + clifford_contract_vec(F, x, v)


def test_twisted_product_associative():
    rng = random.Random(18)
    ctx = AlgebraContext(3, RATIONALS)
    for _ in range(10):
        cctx = CliffordContext(rand_quadratic(rng, ctx))
        F = rand_bilinear(rng, ctx)
        u = rand_cliff(rng, cctx, terms=2)
        v = rand_cliff(rng, cctx, terms=2)
        w = rand_cliff(rng, cctx, terms=2)
        assert twisted_mul(F, twisted_mul(F, u, v), w) \
            == twisted_mul(F, u, twisted_mul(F, v, w))


def test_dual_wedge_antisymmetry():
    ctx = AlgebraContext(3, RATIONALS)
    f = DualElt.from_linear(rand_linear_form(random.Random(1), ctx))
    g = DualElt.from_linear(rand_linear_form(random.Random(2), ctx))
    assert f * g == -(g * f)
    assert not (f * f)


def test_interior_composes():
    rng = random.Random(20)
    ctx = AlgebraContext(4, RATIONALS)
    for _ in range(20):
        cctx = CliffordContext(rand_quadratic(rng, ctx))
        w = rand_cliff(rng, cctx)
        f = DualElt.from_linear(rand_linear_form(rng, ctx))
        g = DualElt.from_linear(rand_linear_form(rng, ctx))
        assert interior(f * g, w) == interior(f, interior(g, w))


def test_exp_contract_is_deformation():
    rng = random.Random(22)
    ctx = AlgebraContext(4, RATIONALS)
    for _ in range(20):
        cctx = CliffordContext(rand_quadratic(rng, ctx))
        a = rand_alternating(rng, ctx)
        astar = dual_two_form(a)
        w = rand_cliff(rng, cctx)
        assert exp_contract(astar, w) == deform(a, w, target=cctx)


def test_exp_contract_needs_char_zero():
    ctx = AlgebraContext(2, Field(3))
    cctx = CliffordContext(QuadraticForm.zero(ctx))
    astar = rand_dual_two_form(random.Random(0), ctx)
    with pytest.raises(CharacteristicError):
        exp_contract(astar, CliffElt.unit(cctx))


def test_symbol_quantize_round_trip():
    rng = random.Random(24)
    for field in (RATIONALS, Field(7)):
        ctx = AlgebraContext(4, field)
        for _ in range(20):
            cctx = CliffordContext(rand_quadratic(rng, ctx))
            w = rand_cliff(rng, cctx)
            assert quantize(cctx, symbol(w)) == w


def test_symbol_rejects_char_two():
    ctx = AlgebraContext(2, Field(2))
    cctx = CliffordContext(QuadraticForm.make(ctx, [1, 1], [[1]]))
    with pytest.raises(CharacteristicError):
        symbol(CliffElt.unit(cctx))


def test_quantize_matches_permutation_sum():
    rng = random.Random(26)
    ctx = AlgebraContext(4, RATIONALS)
    ext = CliffordContext.exterior(ctx)
    for _ in range(10):
        cctx = CliffordContext(rand_quadratic(rng, ctx))
        for k in range(1, 5):
            ys = [rand_vector(rng, ctx) for _ in range(k)]
            wedge = CliffElt.unit(ext)
            for y in ys:
                wedge = wedge * CliffElt.from_vector(ext, y)
            assert quantize(cctx, wedge) == quantize_perm_sum(cctx, ys)


def test_symbol_fixes_orthogonal_blades():
    ctx = AlgebraContext(3, RATIONALS)
    q = QuadraticForm.make(ctx, [2, -1, Fraction(1, 3)])
    cctx = CliffordContext(q)
    ext = CliffordContext.exterior(ctx)
    for blade in [(), (1,), (2, 3), (1, 2, 3)]:
        assert symbol(CliffElt.blade(cctx, blade)) == CliffElt.blade(ext, blade)


def test_grade_involution_and_reverse_descend():
    rng = random.Random(28)
    for field in FIELDS:
        ctx = AlgebraContext(4, field)
        for _ in range(15):
            cctx = CliffordContext(rand_quadratic(rng, ctx))
            u = rand_tensor(rng, ctx)
            pu = quotient_map(cctx, u)
            assert quotient_map(cctx, u.grade_involution()) == pu.grade_involution()
            assert quotient_map(cctx, u.reverse()) == pu.reverse()


def test_cliff_json_round_trip():
    rng = random.Random(30)
    ctx = AlgebraContext(3, Field(5))
    cctx = CliffordContext(rand_quadratic(rng, ctx))
    for _ in range(20):
        w = rand_cliff(rng, cctx)
        assert CliffElt.from_json(cctx, w.to_json()) == w
    assert CliffordContext.from_json(cctx.to_json()) == cctx


def test_blade_validation():
    ctx = AlgebraContext(3, RATIONALS)
    cctx = CliffordContext(QuadraticForm.zero(ctx))
    with pytest.raises(FormError):
        CliffElt.blade(cctx, (2, 1))
    with pytest.raises(FormError):
        CliffElt.blade(cctx, (1, 1))
    with pytest.raises(FormError):
        CliffElt.blade(cctx, (4,))
