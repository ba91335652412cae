import random

import pytest

from fgalg.errors import NotMember
from fgalg.subgroup import basis_and_rewrite, contains, evaluate, fold
from fgalg.words import ONE, Word, all_words

from conftest import W


def random_word(rng, rank=2, length=4):
    letters = []
    while len(letters) < length:
        x = rng.choice([1, -1]) * rng.randint(1, rank)
        if not letters or letters[-1] != -x:
            letters.append(x)
    return Word(letters)


def random_product(rng, gens, factors):
    w = ONE
    for _ in range(factors):
        g = rng.choice(gens)
        w = w * (g if rng.random() < 0.5 else g.inverse())
    return w


def test_fold_examples():
    g = fold([W("ab"), W("ba")])
    assert g.rank == 2
    assert g.basis() == [W("ab"), W("ba")]
    assert g.rewrite(W("abab")) == W("aa")
    g = fold([W("a^2"), W("a^3")])
    assert g.rank == 1
    assert g.basis() == [W("a")]
    assert g.rewrite(W("a^2")) == W("aa")
    with pytest.raises(NotMember):
        g.rewrite(W("b"))
    g = fold([])
    assert g.rank == 0 and g.num_vertices == 1
    assert g.contains(ONE) and not g.contains(W("a"))


def test_contains_examples():
    g = fold([W("a^2"), W("b")])
    assert contains(g, W("a^2b"))
    assert not contains(g, W("a"))
    assert contains(g, ONE)


def test_whole_group():
    g = fold([W("a"), W("b"), W("ab")])
    assert g.rank == 2 and g.num_vertices == 1
    assert all(g.contains(w) for w in all_words(2, 3))


def test_index_two_subgroup():
    # words of even length form a subgroup of index 2, rank 3
    g = fold([W("aa"), W("ab"), W("aB")])
    assert g.rank == 3
    for w in all_words(2, 5):
        assert g.contains(w) == (len(w) % 2 == 0)


def test_random_products_are_members():
    rng = random.Random(11)
    for _ in range(40):
        gens = [random_word(rng, 2, rng.randint(1, 4)) for _ in range(rng.randint(1, 3))]
        g = fold(gens)
        basis, rewrite = basis_and_rewrite(g)
        assert g.rank <= len(gens)
        for _ in range(10):
            w = random_product(rng, gens, rng.randint(0, 4))
            if len(w) > 8:
                continue
            assert g.contains(w)
            assert evaluate(rewrite(w), basis) == w
        for x in gens:
            assert g.contains(x)


def test_basis_generates_same_subgroup():
    rng = random.Random(5)
    for _ in range(30):
        gens = [random_word(rng, 3, rng.randint(1, 5)) for _ in range(3)]
        g = fold(gens)
        h = fold(g.basis())
        assert (h.num_vertices, h.out, h.basis()) == (g.num_vertices, g.out, g.basis())


def nielsen(rng, gens):
    gens = list(gens)
    i = rng.randrange(len(gens))
    move = rng.randrange(3)
    if move == 0:
        gens[i] = gens[i].inverse()
    elif move == 1:
        j = rng.randrange(len(gens))
        gens[i], gens[j] = gens[j], gens[i]
    elif len(gens) > 1:
        j = rng.choice([k for k in range(len(gens)) if k != i])
        gens[i] = gens[i] * gens[j]
    return gens


def test_rank_invariant_under_nielsen_moves():
    rng = random.Random(3)
    for _ in range(25):
        gens = [random_word(rng, 2, rng.randint(1, 4)) for _ in range(rng.randint(1, 3))]
        g0 = fold(gens)
        moved = gens
        for _ in range(6):
            moved = nielsen(rng, moved)
        g1 = fold(moved)
        assert g1.rank == g0.rank
        assert (g1.out, g1.basis()) == (g0.out, g0.basis())


def test_canonical_form_independent_of_generator_order():
    gens = [W("abA"), W("b^2"), W("aba")]
    assert fold(gens).out == fold(gens[::-1]).out
