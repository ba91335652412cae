import itertools
import random
from fractions import Fraction

import pytest

from fgalg.errors import DimensionMismatch
from fgalg.tensorlemma import TensorElement, Verdict, lemma_check, star, tensor_spaces

from conftest import E

AB = (E("a"), E("b"))


def T(matrix, u=AB, v=AB):
    return TensorElement(matrix, u, v)


def test_tensor_rank_examples():
    assert tensor_spaces(T([[1, 0], [0, 1]])).rank == 2
    assert tensor_spaces(T([[1, 2], [2, 4]])).rank == 1
    sp = tensor_spaces(T([[0, 0], [0, 0]]))
    assert sp.rank == 0 and sp.u_space == [] and sp.v_space == []


def test_tensor_spaces_vectors():
    sp = tensor_spaces(T([[0, 0], [1, 2]]))
    assert sp.u_space == [[0, 1]]
    assert sp.v_space == [[1, 2]]


def test_lemma_examples():
    s = TensorElement([[1]], [E("a")], [E("b")])
    res = lemma_check(s, s.scale(2))
    assert res.verdict is Verdict.DEPENDENT and res.lam == Fraction(1, 2)
    res = lemma_check(s.scale(2), s)
    assert res.verdict is Verdict.DEPENDENT and res.lam == 2
    s, t = T.__call__([[1, 0], [0, 0]]), T([[0, 0], [0, 1]])
    assert lemma_check(s, t).verdict is Verdict.NOT_STAR_COMMUTING
    zero = T([[0, 0], [0, 0]])
    assert lemma_check(zero, T([[1, 1], [0, 1]])) == lemma_check(zero, T([[1, 1], [0, 1]]))
    res = lemma_check(zero, T([[1, 1], [0, 1]]))
    assert res.verdict is Verdict.DEPENDENT and res.lam == 0


def test_star_example_terms():
    s, t = T([[1, 0], [0, 0]]), T([[0, 0], [0, 1]])
    from fgalg.words import Word
    assert star(s, t) == {(0, Word([1, 2]), 1): 1}
    assert star(t, s) == {(1, Word([2, 1]), 0): 1}


def test_shape_validation():
    with pytest.raises(DimensionMismatch):
        T([[1, 0]])
    with pytest.raises(DimensionMismatch):
        lemma_check(T([[1, 0], [0, 1]]), TensorElement([[1]], [E("a")], [E("b")]))


def test_exhaustive_star_commuting_pairs_are_proportional():
    entries = (-1, 0, 1)
    mats = [((a, b), (c, d)) for a, b, c, d in itertools.product(entries, repeat=4)]
    for ms in mats:
        for mt in mats:
            res = lemma_check(T(ms), T(mt))
            assert res.verdict is not Verdict.ZERO_DIVISOR_IN_MU


def test_rank_subadditive_and_scale_invariant():
    rng = random.Random(2)
    for _ in range(50):
        ms = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)]
        mt = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)]
        basis = (E("a"), E("b"), E("ab"))
        s, t = TensorElement(ms, basis, basis), TensorElement(mt, basis, basis)
        rs, rt = tensor_spaces(s).rank, tensor_spaces(t).rank
        assert tensor_spaces(s + t).rank <= rs + rt
        assert tensor_spaces(s.scale(Fraction(-3, 2))).rank == rs


def test_zero_divisor_detected_for_degenerate_mu():
    # u_1 + u_2 = 0, so v * (u_1 + u_2) vanishes and mu has zero divisors
    U, V = (E("1"), E("-1")), (E("a"), E("b"))
    s = TensorElement([[1, 0], [1, 0]], U, V)
    t = TensorElement([[0, 1], [0, 1]], U, V)
    assert star(s, t) == {} == star(t, s)
    assert lemma_check(s, t).verdict is Verdict.ZERO_DIVISOR_IN_MU
