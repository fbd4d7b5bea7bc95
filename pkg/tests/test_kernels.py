import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fplab import _kernels as K

BACKENDS = ["numpy"] + (["numba"] if K.HAS_NUMBA else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    old = K.get_backend()
    K.set_backend(request.param)
    yield request.param
    K.set_backend(old)


def naive_rref(a, p):
    """Row reduction with fraction-free bookkeeping, plain Python."""
    rows = [[int(v) % p for v in row] for row in a]
    n = len(rows)
    m = len(rows[0]) if n else 0
    pivots = []
    r = 0
    for c in range(m):
        pivot = next((i for i in range(r, n) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [v * inv % p for v in rows[r]]
        for i in range(n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(v - f * w) % p for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return rows, pivots, r


matrices = st.tuples(st.integers(1, 5), st.integers(1, 5), st.sampled_from([2, 3, 5, 7, 31])).flatmap(
    lambda t: st.lists(
        st.lists(st.integers(0, t[2] - 1), min_size=t[1], max_size=t[1]),
        min_size=t[0],
        max_size=t[0],
    ).map(lambda rows: (np.array(rows, dtype=np.int64), t[2]))
)


class TestRref:
    @given(matrices)
    @settings(max_examples=40, deadline=None)
    def test_matches_reference(self, case):
        a, p = case
        expected_rows, expected_piv, expected_rank = naive_rref(a, p)
        for b in BACKENDS:
            K.set_backend(b)
            R, piv, rank = K.rref(a, p)
            assert rank == expected_rank
            assert list(piv) == expected_piv
            assert R.tolist() == expected_rows

    def test_rank_of_identity(self, backend):
        assert K.rank(np.eye(4, dtype=np.int64), 5) == 4

    def test_rank_of_zero(self, backend):
        assert K.rank(np.zeros((3, 4), dtype=np.int64), 5) == 0


class TestSolveInv:
    def test_solve_roundtrip(self, backend):
        rng = np.random.default_rng(5)
        for p in (3, 5, 7):
            for _ in range(10):
                n = int(rng.integers(1, 6))
                a = rng.integers(0, p, size=(n, n))
                b = rng.integers(0, p, size=(n, 2))
                x = K.solve(a, b, p)
                if x is None:
                    assert K.rank(a, p) < n
                else:
                    assert np.array_equal(K.matmul(a, x, p), b % p)

    def test_inv(self, backend):
        a = np.array([[1, 2], [3, 4]])
        inv = K.inv(a, 5)
        assert np.array_equal(K.matmul(a, inv, 5), np.eye(2, dtype=np.int64))

    def test_singular_even_with_full_augmented_rank(self, backend):
        # the unsolvable system 0*x = 1 must not report a solution
        assert K.solve(np.array([[0]]), np.array([[1]]), 5) is None


class TestMatmul:
    @given(matrices)
    @settings(max_examples=30, deadline=None)
    def test_against_numpy(self, case):
        a, p = case
        rng = np.random.default_rng(a.sum() % 97)
        b = rng.integers(0, p, size=(a.shape[1], 3))
        for back in BACKENDS:
            K.set_backend(back)
            assert np.array_equal(K.matmul(a, b, p), (a @ b) % p)

    def test_chunking_is_exercised(self):
        # large modulus forces the numpy fallback to split accumulation
        K.set_backend("numpy")
        p = (1 << 30) + 3  # not prime; matmul only needs a modulus
        a = np.full((4, 300), p - 1, dtype=np.int64)
        b = np.full((300, 4), p - 1, dtype=np.int64)
        out = K.matmul(a, b, p)
        assert np.array_equal(out, (a.astype(object) @ b.astype(object) % p).astype(np.int64))


def naive_min_block_weight(g, p, block):
    g = np.asarray(g)
    k, n = g.shape
    best = n // block + 1
    for msg in itertools.product(range(p), repeat=k):
        if not any(msg):
            continue
        cw = (np.array(msg) @ g) % p
        blocks = cw.reshape(-1, block)
        weight = int((blocks.any(axis=1)).sum())
        best = min(best, weight)
    return best


class TestMinBlockWeight:
    def test_reference_agreement(self, backend):
        rng = np.random.default_rng(11)
        for p, k, n, block in ((2, 3, 6, 2), (3, 2, 6, 3), (5, 2, 4, 1), (3, 4, 6, 2)):
            for _ in range(4):
                g = rng.integers(0, p, size=(k, n))
                assert K.min_block_weight(g, p, block) == naive_min_block_weight(g, p, block)

    def test_block_validation(self, backend):
        with pytest.raises(ValueError):
            K.min_block_weight(np.ones((1, 5), dtype=np.int64), 3, 2)


def test_backend_selection():
    with pytest.raises(ValueError):
        K.set_backend("gpu")
    K.set_backend("numpy")
    assert K.get_backend() == "numpy"
    if K.HAS_NUMBA:
        K.set_backend("numba")
        assert K.get_backend() == "numba"
