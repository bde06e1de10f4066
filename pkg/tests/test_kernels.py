import random

import pytest

from dihedral_monoid import kernels, new_presentation, normal_form
from dihedral_monoid.kernels import _pure

needs_c = pytest.mark.skipif("cython" not in kernels.BACKENDS, reason="compiled kernels not built")


@pytest.fixture
def restore_backend():
    before = kernels.BACKEND
    yield
    kernels.use(before)


def test_pure_backend_always_present():
    assert "python" in kernels.BACKENDS


def test_unknown_backend(restore_backend):
    with pytest.raises(ValueError):
        kernels.use("fortran")


def test_switch_backend(restore_backend):
    kernels.use("python")
    assert kernels.BACKEND == "python"
    assert kernels.class_labels is _pure.class_labels


@needs_c
@pytest.mark.parametrize("nk", [(4, 3), (5, 4), (6, 5), (8, 3), (8, 5), (8, 7)])
def test_backends_agree_on_normal_forms(nk):
    c = kernels.BACKENDS["cython"]
    p = new_presentation(*nk)
    rng = random.Random(7)
    words = [tuple(rng.randint(1, p.n) for _ in range(rng.randint(0, 4 * p.n))) for _ in range(300)]
    assert list(c.normal_forms(p.n, p.k, words)) == [normal_form(p, w) for w in words]


@needs_c
@pytest.mark.parametrize("nk,length", [((4, 3), 6), ((5, 4), 6), ((6, 5), 6)])
def test_backends_agree_exhaustively(nk, length):
    c = kernels.BACKENDS["cython"]
    p = new_presentation(*nk)
    rels = sorted(p.relation_set)
    assert list(c.class_labels(p.n, length, rels)) == list(_pure.class_labels(p.n, length, rels))
    assert list(c.all_normal_forms(p.n, p.k, length)) == list(_pure.all_normal_forms(p.n, p.k, length))


@needs_c
def test_count_roots_agree():
    c = kernels.BACKENDS["cython"]
    labels = _pure.class_labels(4, 5, sorted(new_presentation(4, 3).relation_set))
    assert c.count_roots(labels) == _pure.count_roots(labels) == 972
