"""Hot numeric kernels: batch rank queries, KNN voting, LOF scoring.

Each kernel has two implementations with identical semantics:

* a numba ``@njit`` version (default when numba imports cleanly), and
* a pure-numpy fallback.

Set the environment variable ``SCALEFREE_NO_NUMBA=1`` before import to force
the numpy path; ``set_backend()`` switches at runtime (used by the tests and
by ``benchmarks/bench_backends.py``).

Rank sums are accumulated as int64 and divided once, so rank and average-rank
outputs are bitwise identical across the two backends.

All kernels expect C-contiguous float64 arrays; validation happens in the
calling modules.
"""

import os

import numpy as np

_FORCE_NUMPY = os.environ.get("SCALEFREE_NO_NUMBA", "").strip() not in ("", "0")

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

_BACKEND = "numba" if (_HAVE_NUMBA and not _FORCE_NUMPY) else "numpy"


def active_backend() -> str:
    """Name of the backend currently answering kernel calls."""
    return _BACKEND


def set_backend(name: str) -> None:
    """Switch kernel backend at runtime ("numba" or "numpy")."""
    global _BACKEND
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not _HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not installed")
    _BACKEND = name


def numba_available() -> bool:
    return _HAVE_NUMBA


# ---------------------------------------------------------------------------
# numpy implementations
# ---------------------------------------------------------------------------


def _rank_batch_np(sorted_values: np.ndarray, queries: np.ndarray) -> np.ndarray:
    """Count of values strictly below each query (lower-bound search)."""
    return np.searchsorted(sorted_values, queries, side="left").astype(np.float64)


def _ares_batch_np(subsamples: np.ndarray, queries: np.ndarray) -> np.ndarray:
    """Average, over sub-samples, of the strictly-below count of each query."""
    totals = np.zeros(queries.shape[0], dtype=np.int64)
    for row in subsamples:
        totals += np.searchsorted(row, queries, side="left")
    return totals / subsamples.shape[0]


def _knn_predict_np(
    train_x: np.ndarray,
    train_codes: np.ndarray,
    test_x: np.ndarray,
    k: int,
    n_classes: int,
) -> np.ndarray:
    preds = np.empty(test_x.shape[0], dtype=np.int64)
    for a in range(test_x.shape[0]):
        d2 = ((train_x - test_x[a]) ** 2).sum(axis=1)
        # stable sort keeps lower training-row index first among distance ties
        nearest = np.argsort(d2, kind="stable")[:k]
        votes = np.bincount(train_codes[nearest], minlength=n_classes)
        preds[a] = votes.argmax()  # first max = smallest label code
    return preds


def _lof_np(x: np.ndarray, k: int) -> np.ndarray:
    n = x.shape[0]
    d2 = np.empty((n, n), dtype=np.float64)
    for i in range(n):
        d2[i] = ((x - x[i]) ** 2).sum(axis=1)
    np.fill_diagonal(d2, np.inf)

    kdist2 = np.partition(d2, k - 1, axis=1)[:, k - 1]
    # neighborhood of i: every other point within i's k-distance (ties included)
    member = d2 <= kdist2[:, None]
    counts = member.sum(axis=1)

    reach = np.sqrt(np.maximum(kdist2[None, :], d2))
    reach_sum = np.where(member, reach, 0.0).sum(axis=1)
    with np.errstate(divide="ignore"):
        lrd = np.where(reach_sum > 0.0, counts / reach_sum, np.inf)

    lrd_sum = np.where(member, lrd[None, :], 0.0).sum(axis=1)
    # a point whose whole neighborhood sits at distance zero has infinite
    # density, and so do all of its neighbors: its outlier ratio is 1
    with np.errstate(invalid="ignore"):
        scores = np.where(np.isinf(lrd), 1.0, lrd_sum / (counts * lrd))
    return scores


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

if _HAVE_NUMBA:

    @njit(cache=True)
    def _lower_bound(values, x):
        lo = 0
        hi = values.shape[0]
        while lo < hi:
            mid = (lo + hi) >> 1
            if values[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        return lo

    @njit(cache=True)
    def _rank_batch_nb(sorted_values, queries):
        n = queries.shape[0]
        out = np.empty(n, dtype=np.float64)
        for i in range(n):
            out[i] = _lower_bound(sorted_values, queries[i])
        return out

    @njit(cache=True)
    def _ares_batch_nb(subsamples, queries):
        # sub-samples outer, queries inner: keeps one sorted row hot in cache
        # and amortizes per-query overhead so cost stays linear in both axes
        t = subsamples.shape[0]
        n = queries.shape[0]
        totals = np.zeros(n, dtype=np.int64)
        for j in range(t):
            row = subsamples[j]
            for i in range(n):
                totals[i] += _lower_bound(row, queries[i])
        out = np.empty(n, dtype=np.float64)
        for i in range(n):
            out[i] = totals[i] / t
        return out

    @njit(cache=True)
    def _knn_predict_nb(train_x, train_codes, test_x, k, n_classes):
        n, m = train_x.shape
        preds = np.empty(test_x.shape[0], dtype=np.int64)
        d2 = np.empty(n, dtype=np.float64)
        votes = np.empty(n_classes, dtype=np.int64)
        for a in range(test_x.shape[0]):
            for i in range(n):
                s = 0.0
                for c in range(m):
                    diff = train_x[i, c] - test_x[a, c]
                    s += diff * diff
                d2[i] = s
            for v in range(n_classes):
                votes[v] = 0
            for _ in range(k):
                best = 0
                best_d = np.inf
                for i in range(n):
                    if d2[i] < best_d:  # strict: lowest index wins ties
                        best_d = d2[i]
                        best = i
                votes[train_codes[best]] += 1
                d2[best] = np.inf
            winner = 0
            winner_votes = votes[0]
            for v in range(1, n_classes):
                if votes[v] > winner_votes:  # strict: smallest code wins ties
                    winner_votes = votes[v]
                    winner = v
            preds[a] = winner
        return preds

    @njit(cache=True)
    def _lof_nb(x, k):
        n, m = x.shape
        d2 = np.empty((n, n), dtype=np.float64)
        for i in range(n):
            d2[i, i] = np.inf
            for j in range(i + 1, n):
                s = 0.0
                for c in range(m):
                    diff = x[i, c] - x[j, c]
                    s += diff * diff
                d2[i, j] = s
                d2[j, i] = s

        kdist2 = np.empty(n, dtype=np.float64)
        for i in range(n):
            row = d2[i].copy()
            row.sort()
            kdist2[i] = row[k - 1]

        lrd = np.empty(n, dtype=np.float64)
        counts = np.empty(n, dtype=np.int64)
        for i in range(n):
            s = 0.0
            cnt = 0
            for j in range(n):
                if j != i and d2[i, j] <= kdist2[i]:
                    cnt += 1
                    r2 = d2[i, j]
                    if kdist2[j] > r2:
                        r2 = kdist2[j]
                    s += np.sqrt(r2)
            counts[i] = cnt
            if s == 0.0:
                lrd[i] = np.inf
            else:
                lrd[i] = cnt / s

        scores = np.empty(n, dtype=np.float64)
        for i in range(n):
            if np.isinf(lrd[i]):
                scores[i] = 1.0
            else:
                s = 0.0
                for j in range(n):
                    if j != i and d2[i, j] <= kdist2[i]:
                        s += lrd[j]
                scores[i] = s / (counts[i] * lrd[i])
        return scores


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def rank_batch(sorted_values: np.ndarray, queries: np.ndarray) -> np.ndarray:
    if _BACKEND == "numba":
        return _rank_batch_nb(sorted_values, queries)
    return _rank_batch_np(sorted_values, queries)


def ares_batch(subsamples: np.ndarray, queries: np.ndarray) -> np.ndarray:
    if _BACKEND == "numba":
        return _ares_batch_nb(subsamples, queries)
    return _ares_batch_np(subsamples, queries)


def knn_predict(
    train_x: np.ndarray,
    train_codes: np.ndarray,
    test_x: np.ndarray,
    k: int,
    n_classes: int,
) -> np.ndarray:
    if _BACKEND == "numba":
        return _knn_predict_nb(train_x, train_codes, test_x, k, n_classes)
    return _knn_predict_np(train_x, train_codes, test_x, k, n_classes)


def lof_raw(x: np.ndarray, k: int) -> np.ndarray:
    if _BACKEND == "numba":
        return _lof_nb(x, k)
    return _lof_np(x, k)


def warm_up() -> None:
    """Trigger JIT compilation of every kernel on tiny inputs.

    Call before timing so compilation never lands inside a measurement.
    No-op cost on the numpy backend.
    """
    sorted_vals = np.array([0.0, 1.0])
    queries = np.array([0.5])
    rank_batch(sorted_vals, queries)
    ares_batch(np.array([[0.0, 1.0], [0.5, 2.0]]), queries)
    tiny = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    knn_predict(tiny, np.array([0, 1, 0], dtype=np.int64), tiny, 1, 2)
    lof_raw(tiny, 1)
