"""The compiled and pure-Python kernels must agree call for call."""

import random

import pytest
from hypothesis import given, strategies as st

from wlpositroid import kernels
from wlpositroid import _pykernels

BACKENDS = kernels.available_backends()


def test_backend_name():
    assert kernels.BACKEND in BACKENDS
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_walk_error(name):
    with pytest.raises(ValueError):
        BACKENDS[name].necklace_walk(4, 2, [[0], [], [], []], 1)


@given(st.integers(0, 2**32 - 1))
def test_backends_agree(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 12)
    k = rng.randint(0, 6)
    adj = [rng.getrandbits(k) if k else 0 for _ in range(n)]
    J = rng.getrandbits(n)
    allowed = [rng.getrandbits(k) for _ in range(k)]
    orders = [rng.sample(range(k), rng.randint(0, k)) for _ in range(n)]
    ref = _pykernels
    for mod in BACKENDS.values():
        assert mod.independent(adj, J, k) == ref.independent(adj, J, k)
        assert mod.bases_masks(adj, n, k) == ref.bases_masks(adj, n, k)
        assert mod.perfect_matchings(allowed) == ref.perfect_matchings(allowed)
        try:
            want = ref.necklace_walk(n, k, orders, 1)
        except ValueError:
            with pytest.raises(ValueError):
                mod.necklace_walk(n, k, orders, 1)
        else:
            assert mod.necklace_walk(n, k, orders, 1) == want


def test_wide_inputs_fall_back():
    # 70 rows is past the 64-bit masks; the dispatcher must still answer
    allowed = [1 << r for r in range(70)]
    assert kernels.perfect_matchings(allowed) == [tuple(range(70))]


def test_pure_python_backend_end_to_end(monkeypatch):
    from wlpositroid import checks
    from wlpositroid.diagram import all_admissible

    monkeypatch.setattr(kernels, "_impl", _pykernels)
    for W in all_admissible(7, min_n=7):
        neck = checks.grassmann_necklace(W)
        assert not checks.check_oracle(W, neck)
        assert not checks.check_le(W, neck)
    assert not checks.golden_necklace()
