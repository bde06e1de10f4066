import pytest

from dihedral_monoid import InvalidK, InvalidN, InvalidWord, MATRIX, group_H, new_presentation, relation_words
from dihedral_monoid.presentation import (
    block_b,
    block_c,
    conjugation_exponent,
    length_lex_key,
    residue_add,
    sorted_length_lex,
)


def _valid_pairs(max_n):
    return [(n, k) for n in range(4, max_n + 1) for k in range(2, n) if k * k % n == 1]


def test_valid_pairs_up_to_8():
    assert _valid_pairs(8) == [(4, 3), (5, 4), (6, 5), (7, 6), (8, 3), (8, 5), (8, 7)]


@pytest.mark.parametrize("n,k", [(3, 2), (2, 1), (0, 1), (-4, 3)])
def test_small_n_rejected(n, k):
    with pytest.raises(InvalidN):
        new_presentation(n, k)


@pytest.mark.parametrize("n,k", [(4, 2), (8, 2), (4, 1), (4, 4), (4, 0), (8, 9)])
def test_bad_k_rejected(n, k):
    with pytest.raises(InvalidK) as e:
        new_presentation(n, k)
    assert "k^2 ≡ 1 mod n" in str(e.value)


def test_residues_live_in_1_to_n(p43):
    assert residue_add(p43, 4, 1) == 1
    assert residue_add(p43, 1, -1) == 4
    assert p43.res(0) == 4
    assert p43.res(-7) == 1


def test_relation_words_4_3(p43):
    rels = relation_words(p43)
    assert len(rels) == 8
    assert rels == {
        (1, 2, 3, 4), (2, 3, 4, 1), (3, 4, 1, 2), (4, 1, 2, 3),
        (1, 4, 3, 2), (2, 1, 4, 3), (3, 2, 1, 4), (4, 3, 2, 1),
    }


def test_relation_count_is_2n(pres):
    rels = relation_words(pres)
    assert len(rels) == 2 * pres.n
    assert all(len(r) == pres.n and sorted(r) == list(range(1, pres.n + 1)) for r in rels)


def test_blocks_4_3(p43):
    assert block_b(p43, 1) == (2, 3)
    assert block_c(p43, 1) == (4, 3)
    assert block_b(p43, 4) == (1, 2)


def test_blocks_have_length_n_minus_2(pres):
    for q in range(1, pres.n + 1):
        assert len(block_b(pres, q)) == pres.n - 2
        assert len(block_c(pres, q)) == pres.n - 2
    assert block_b(pres, 1) == pres.z[1:-1]


def test_group_is_dihedral(pres):
    H = group_H(pres)
    assert len(H) == 2 * pres.n
    assert conjugation_exponent(pres) == pres.k


def test_check_word(p43):
    assert p43.check_word([1, 4]) == (1, 4)
    assert p43.check_word([]) == ()
    for bad in ([0], [5], [1, -1]):
        with pytest.raises(InvalidWord):
            p43.check_word(bad)


def test_length_lex():
    assert length_lex_key((4,)) < length_lex_key((1, 1))
    assert sorted_length_lex([(2, 1), (1,), (1, 2), ()]) == [(), (1,), (1, 2), (2, 1)]


def test_matrix_constant():
    assert MATRIX == ((4, 3), (5, 4), (6, 5), (8, 3), (8, 5), (8, 7))
