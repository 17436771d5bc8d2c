"""Tensor-algebra operators: contractions, deformations, divided powers."""

import random

import pytest

from cliffbundle import (AlgebraContext, CapExceeded, Field, FormError,
                         LinearForm, RATIONALS, TensorElt, Vector, contract,
                         contract_vec, divided_power, left_mul, pfaffian,
                         tensor_deform, tensor_deform_apply)
from cliffbundle.sampling import (rand_alternating, rand_bilinear,
                                  rand_linear_form, rand_tensor)

from oracles import deform_word_pairs

FIELDS = (RATIONALS, Field(2), Field(7))


def test_contraction_explicit_signs():
    # i_f(x1 (x) x2 (x) x3) = f(x1) x2x3 - f(x2) x1x3 + f(x3) x1x2
    ctx = AlgebraContext(3, RATIONALS)
    f = LinearForm.make(ctx, [2, 3, 5])
    u = TensorElt.from_word(ctx, (1, 2, 3))
    got = contract(f, u)
    expected = (TensorElt.from_word(ctx, (2, 3), 2)
                + TensorElt.from_word(ctx, (1, 3), -3)
                + TensorElt.from_word(ctx, (1, 2), 5))
    assert got == expected


def test_contraction_kills_scalars():
    ctx = AlgebraContext(2, RATIONALS)
    f = LinearForm.make(ctx, [1, 1])
    assert not contract(f, TensorElt.unit(ctx))


def test_contraction_is_antiderivation():
    rng = random.Random(2)
    for field in FIELDS:
        ctx = AlgebraContext(4, field)
        for _ in range(50):
            f = rand_linear_form(rng, ctx)
            g = rand_linear_form(rng, ctx)
            u = rand_tensor(rng, ctx)
            assert not contract(f, contract(f, u))
            assert contract(f, contract(g, u)) == -contract(g, contract(f, u))


def test_contraction_left_multiplication():
    rng = random.Random(4)
    for field in FIELDS:
        ctx = AlgebraContext(4, field)
        for _ in range(50):
            f = rand_linear_form(rng, ctx)
            x = Vector.make(ctx, [rng.randint(-3, 3) for _ in range(4)])
            u = rand_tensor(rng, ctx)
            lhs = left_mul(x, contract(f, u)) + contract(f, left_mul(x, u))
            assert lhs == f(x) * u


def test_deform_matches_pair_expansion():
    rng = random.Random(6)
    for field in FIELDS:
        ctx = AlgebraContext(3, field)
        for _ in range(10):
            F = rand_bilinear(rng, ctx)
            for length in range(5):
                for _ in range(8):
                    word = tuple(rng.randint(1, 3) for _ in range(length))
                    assert tensor_deform(F, TensorElt.from_word(ctx, word)) \
                        == deform_word_pairs(F, word)


def test_deform_group_law():
    rng = random.Random(8)
    for field in FIELDS:
        ctx = AlgebraContext(4, field)
        for _ in range(25):
            F = rand_bilinear(rng, ctx)
            G = rand_bilinear(rng, ctx)
            u = rand_tensor(rng, ctx)
            assert tensor_deform(F, tensor_deform(G, u)) == tensor_deform(F + G, u)
            assert tensor_deform(F, tensor_deform(-F, u)) == u


def test_deform_fixes_low_grades():
    ctx = AlgebraContext(3, RATIONALS)
    rng = random.Random(10)
    F = rand_bilinear(rng, ctx)
    assert tensor_deform(F, TensorElt.unit(ctx)) == TensorElt.unit(ctx)
    v = TensorElt.from_word(ctx, (2,))
    assert tensor_deform(F, v) == v


def test_divided_power_grade_zero_is_pfaffian():
    # full contraction of e1 (x) ... (x) e2n against an alternating form
    rng = random.Random(12)
    for field in (RATIONALS, Field(7)):
        for n in (1, 2, 3):
            ctx = AlgebraContext(2 * n, field)
            for _ in range(10):
                a = rand_alternating(rng, ctx)
                word = TensorElt.from_word(ctx, tuple(range(1, 2 * n + 1)))
                full = divided_power(a, n, word)
                assert full.grade_part(0) == full
                assert full.coeff(()) == pfaffian(a)


def test_divided_power_binomial():
    rng = random.Random(14)
    for field in FIELDS:
        ctx = AlgebraContext(4, field)
        for _ in range(15):
            F = rand_bilinear(rng, ctx)
            k, l = rng.randint(0, 2), rng.randint(0, 2)
            u = rand_tensor(rng, ctx, max_grade=6, terms=2)
            binom = 1
            for i in range(1, k + 1):
                binom = binom * (k + l - i + 1) // i
            assert divided_power(F, k, divided_power(F, l, u)) \
                == field(binom) * divided_power(F, k + l, u)


def test_deform_apply_word_by_word():
    # the operator form of the deformation, checked against the sum of
    # a left multiplication and a contraction for a single generator
    rng = random.Random(16)
    ctx = AlgebraContext(3, RATIONALS)
    for _ in range(20):
        F = rand_bilinear(rng, ctx)
        v = rand_tensor(rng, ctx)
        x = TensorElt.from_word(ctx, (2,))
        got = tensor_deform_apply(F, x, v)
        expected = left_mul(Vector.basis(ctx, 2), v) + contract(F.row_form(2), v)
        assert got == expected


def test_grade_cap_enforced():
    ctx = AlgebraContext(2, RATIONALS, grade_cap=3)
    u = TensorElt.from_word(ctx, (1, 2, 1))
    with pytest.raises(CapExceeded):
        u * u


def test_word_validation():
    ctx = AlgebraContext(2, RATIONALS)
    with pytest.raises(FormError):
        TensorElt.from_word(ctx, (0,))
    with pytest.raises(FormError):
        TensorElt.from_word(ctx, (3,))


def test_involutions():
    rng = random.Random(18)
    ctx = AlgebraContext(4, RATIONALS)
    for _ in range(30):
        u = rand_tensor(rng, ctx)
        assert u.grade_involution().grade_involution() == u
        assert u.reverse().reverse() == u
    w = TensorElt.from_word(ctx, (1, 2, 3))
    assert w.reverse() == TensorElt.from_word(ctx, (3, 2, 1))
    assert w.grade_involution() == -w


def test_contract_vec_uses_rows():
    rng = random.Random(20)
    ctx = AlgebraContext(3, RATIONALS)
    F = rand_bilinear(rng, ctx)
    u = rand_tensor(rng, ctx)
    x = Vector.make(ctx, [1, -2, 3])
    direct = contract_vec(F, x, u)
    via_form = contract(F.partial_left(x), u)
    assert direct == via_form


def test_tensor_json_round_trip():
    rng = random.Random(22)
    ctx = AlgebraContext(3, Field(7))
    for _ in range(20):
        u = rand_tensor(rng, ctx)
        assert TensorElt.from_json(ctx, u.to_json()) == u
