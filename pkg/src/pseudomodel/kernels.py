"""Exhaustive 2^n sweeps backing the brute-force oracle.

Two interchangeable backends:

* ``numba``: Gray-code walk, one variable flip per step, incremental update of
  the true-literal count (and per-clause counts for clause-level conditions).
* ``numpy``: vectorised evaluation over chunks of assignment codes.

Set ``PSEUDOMODEL_DISABLE_NUMBA=1`` to force the numpy path. Assignment codes
store variable ``s`` in bit ``s - 1``.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover
    njit = None

DISABLE_ENV = "PSEUDOMODEL_DISABLE_NUMBA"
CHUNK = 1 << 16

MODE_HISTOGRAM = 0
MODE_SAT = 1


def numba_available() -> bool:
    return njit is not None


def default_backend() -> str:
    if njit is None or os.environ.get(DISABLE_ENV, "").strip() not in ("", "0"):
        return "numpy"
    return "numba"


def _resolve(backend):
    backend = backend or default_backend()
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and njit is None:
        raise RuntimeError("numba is not installed")
    return backend


def _jit(fn):
    return njit(cache=True, nogil=True)(fn) if njit is not None else fn


@_jit
def _sigma_histogram_gray(delta, start, size):
    n = delta.shape[0]
    hist = np.zeros(size, dtype=np.int64)
    value = np.zeros(n, dtype=np.int64)
    current = start
    hist[current] += 1
    for i in range(1, 1 << n):
        bit = 0
        while not (i >> bit) & 1:
            bit += 1
        if value[bit]:
            current -= delta[bit]
            value[bit] = 0
        else:
            current += delta[bit]
            value[bit] = 1
        hist[current] += 1
    return hist


def _codes_to_bits(codes, n):
    return ((codes[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(np.int64)


def _sigma_histogram_numpy(delta, start, size):
    n = delta.shape[0]
    hist = np.zeros(size, dtype=np.int64)
    total = 1 << n
    for lo in range(0, total, CHUNK):
        codes = np.arange(lo, min(lo + CHUNK, total), dtype=np.int64)
        values = start + _codes_to_bits(codes, n) @ delta
        hist += np.bincount(values, minlength=size)
    return hist


def sigma_histogram(p_plus, p_minus, backend=None) -> np.ndarray:
    """``hist[k]`` = number of assignments with exactly ``k`` true literals."""
    p_plus = np.ascontiguousarray(p_plus, dtype=np.int64)
    p_minus = np.ascontiguousarray(p_minus, dtype=np.int64)
    delta = p_plus - p_minus
    start = int(p_minus.sum())
    size = int(p_plus.sum() + p_minus.sum()) + 1
    if _resolve(backend) == "numba":
        return _sigma_histogram_gray(delta, start, size)
    return _sigma_histogram_numpy(delta, start, size)


@_jit
def _scan_gray(n, occ_ptr, occ_clause, occ_positive, counts, target, mode):
    width = target.shape[0]
    hist = np.zeros(width, dtype=np.int64)
    for j in range(counts.shape[0]):
        hist[counts[j]] += 1
    mismatch = 0
    for a in range(width):
        if hist[a] != target[a]:
            mismatch += 1
    out = np.empty(1 << n, dtype=np.int64)
    found = 0
    code = 0
    accepted = hist[0] == 0 if mode == 1 else mismatch == 0
    if accepted:
        out[found] = code
        found += 1
    for i in range(1, 1 << n):
        bit = 0
        while not (i >> bit) & 1:
            bit += 1
        code ^= 1 << bit
        rising = (code >> bit) & 1
        for k in range(occ_ptr[bit], occ_ptr[bit + 1]):
            j = occ_clause[k]
            old = counts[j]
            new = old + 1 if occ_positive[k] == rising else old - 1
            counts[j] = new
            if hist[old] == target[old]:
                mismatch += 1
            hist[old] -= 1
            if hist[old] == target[old]:
                mismatch -= 1
            if hist[new] == target[new]:
                mismatch += 1
            hist[new] += 1
            if hist[new] == target[new]:
                mismatch -= 1
        accepted = hist[0] == 0 if mode == 1 else mismatch == 0
        if accepted:
            out[found] = code
            found += 1
    return out[:found]


def _incidence(clauses, n):
    m = len(clauses)
    pos = np.zeros((n, m), dtype=np.int64)
    neg = np.zeros((n, m), dtype=np.int64)
    for j, clause in enumerate(clauses):
        for lit in clause:
            if lit > 0:
                pos[lit - 1, j] = 1
            else:
                neg[-lit - 1, j] = 1
    return pos, neg


def _scan_numpy(n, clauses, target, mode):
    pos, neg = _incidence(clauses, n)
    base = neg.sum(axis=0)
    diff = pos - neg
    total = 1 << n
    found = []
    for lo in range(0, total, CHUNK):
        codes = np.arange(lo, min(lo + CHUNK, total), dtype=np.int64)
        counts = base + _codes_to_bits(codes, n) @ diff
        if mode == MODE_SAT:
            ok = (counts > 0).all(axis=1)
        else:
            ok = np.ones(len(codes), dtype=bool)
            for a, want in enumerate(target):
                ok &= (counts == a).sum(axis=1) == want
        found.append(codes[ok])
    return np.concatenate(found) if found else np.zeros(0, dtype=np.int64)


def scan_assignments(n, clauses, target=(), mode=MODE_HISTOGRAM, backend=None) -> np.ndarray:
    """Sorted codes of all assignments accepted by the clause-level condition.

    ``MODE_HISTOGRAM`` accepts when the clause true-count histogram equals
    ``target`` (zero-padded); ``MODE_SAT`` accepts when no clause is false.
    """
    width = max(len(target), max((len(c) for c in clauses), default=0) + 1)
    padded = np.zeros(width, dtype=np.int64)
    padded[: len(target)] = target
    if _resolve(backend) == "numpy":
        return _scan_numpy(n, clauses, padded, mode)

    occ: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for j, clause in enumerate(clauses):
        for lit in clause:
            occ[abs(lit) - 1].append((j, 1 if lit > 0 else 0))
    occ_ptr = np.zeros(n + 1, dtype=np.int64)
    occ_ptr[1:] = np.cumsum([len(o) for o in occ])
    flat = [pair for o in occ for pair in o]
    occ_clause = np.array([j for j, _ in flat], dtype=np.int64)
    occ_positive = np.array([p for _, p in flat], dtype=np.int64)
    counts = np.array([sum(1 for lit in c if lit < 0) for c in clauses], dtype=np.int64)
    codes = _scan_gray(n, occ_ptr, occ_clause, occ_positive, counts, padded, mode)
    codes.sort()
    return codes
