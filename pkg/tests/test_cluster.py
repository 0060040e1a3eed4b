import random

import pytest

from bminors.cluster import (
    BadDirection,
    ExchangeMatrix,
    build_bmatrix,
    e_set,
    exchange_step,
    find_symmetrizer,
    initial_seed,
    kplus,
    mutate_matrix,
)
from bminors.rootdata import make_minor_spec


def test_e_set_examples():
    assert e_set(make_minor_spec(2, 4, 1)) == (1, 2)
    assert e_set(make_minor_spec(3, 3, 1)) == ()
    assert e_set(make_minor_spec(3, 8, 5)) == (1, 2, 3, 4, 5)


def test_kplus_sentinel():
    spec = make_minor_spec(2, 4, 1)
    assert kplus(spec, 1) == 3
    assert kplus(spec, 3) == 5  # past the word
    assert kplus(spec, -2) == 2


def test_bmatrix_b2_principal():
    spec = make_minor_spec(2, 4, 1)
    b = build_bmatrix(spec)
    assert b.principal() == [[0, -1], [2, 0]]
    assert find_symmetrizer(b.principal()) == [2, 1]
    # frozen rows
    assert b.entry(-1, 1) == 1
    assert b.entry(-2, 2) == 1
    assert b.entry(-2, 1) == -2
    assert b.entry(3, 1) == -1
    assert b.entry(4, 2) == -1
    assert b.entry(3, 2) == 1


def test_no_self_entries():
    for r, n in [(2, 4), (3, 8), (4, 13)]:
        b = build_bmatrix(make_minor_spec(r, n, 1))
        assert all(b.entry(k, k) == 0 for k in b.cols)


def test_mutation_involution_random():
    rng = random.Random(11)
    mats = [
        build_bmatrix(make_minor_spec(r, n, 1))
        for r, n in [(2, 4), (2, 3), (3, 8), (3, 6), (4, 13), (4, 16)]
        if n > r
    ]
    count = 0
    while count < 100:
        b = rng.choice(mats)
        if not b.cols:
            continue
        k = rng.choice(b.cols)
        assert mutate_matrix(mutate_matrix(b, k), k) == b
        count += 1


def test_mutation_preserves_symmetrizability():
    b = build_bmatrix(make_minor_spec(2, 4, 1))
    mutated = mutate_matrix(b, 1)
    assert find_symmetrizer(mutated.principal()) is not None
    with pytest.raises(BadDirection):
        mutate_matrix(b, 4)


def test_mutate_zero_matrix():
    z = ExchangeMatrix((1, 2), (1, 2), {})
    assert mutate_matrix(z, 1) == z


def test_symmetrizer_cases():
    assert find_symmetrizer([[0, 1], [-1, 0]]) == [1, 1]
    assert find_symmetrizer([[0, 1], [1, 0]]) is None
    assert find_symmetrizer([[0, 2], [-1, 0]]) == [1, 2]


def test_symmetrizer_matches_root_lengths():
    """The letter-length diagonal (2 on long letters, 1 on the short one)
    always symmetrizes the principal part."""
    for r in (2, 3, 4):
        for n in range(r + 1, r * r + 1):
            spec = make_minor_spec(r, n, 1)
            b = build_bmatrix(spec)
            if not b.cols:
                continue
            assert find_symmetrizer(b.principal()) is not None
            d = [2 if spec.letter(k) < r else 1 for k in b.cols]
            mat = b.principal()
            size = len(b.cols)
            for i in range(size):
                for j in range(size):
                    assert d[i] * mat[i][j] == -d[j] * mat[j][i]


def test_exchange_step_is_exact_and_involutive():
    spec = make_minor_spec(2, 3, 1)
    seed = initial_seed(spec)
    stepped = exchange_step(seed, 1)
    assert stepped.cluster[1] != seed.cluster[1]
    # frozen labels unchanged
    for label in seed.matrix.rows:
        if label != 1:
            assert stepped.cluster[label] == seed.cluster[label]
    back = exchange_step(stepped, 1)
    assert back.cluster == seed.cluster
    assert back.matrix == seed.matrix


def test_exchange_sweep_small():
    for r in (2, 3):
        for n in range(r + 1, 2 * r + 1):
            spec = make_minor_spec(r, n, 1)
            seed = initial_seed(spec)
            for k in seed.matrix.cols:
                exchange_step(seed, k)  # raises on any division failure


def test_deep_mutation_sequences_stay_laurent():
    """Values after several mutations are still regular on the cell, so
    every exchange division along the way must be exact."""
    import itertools

    for r, n in [(2, 4), (3, 6)]:
        seed = initial_seed(make_minor_spec(r, n, 1))
        for seq in itertools.product(seed.matrix.cols, repeat=3):
            s = seed
            for k in seq:
                s = exchange_step(s, k)


def test_matrix_json_and_text():
    b = build_bmatrix(make_minor_spec(2, 4, 1))
    data = b.json_dict()
    assert data["cols"] == [1, 2]
    assert data["rows"][:2] == [-1, -2]
    text = b.text()
    assert text == b.text()
    assert str(b.entry(2, 1)) in text
