"""Pseudomodel counts and the bounds derived from them.

All counts are exact Python integers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .blocks import BlockDecomposition, decompose
from .formula import Formula, occurrence_profile

FlipVector = dict[int, int]

DEFAULT_HARDNESS_SLACK = 4.0


def enumerate_flip_vectors(d: BlockDecomposition, rho: int) -> Iterator[FlipVector]:
    """Yield every ``{b: w_b}`` with ``0 <= w_b <= n_b`` and ``sum(b * w_b) == rho``.

    Blocks are visited by decreasing ``b``; tuples come out in lexicographic
    order of ``(w_bmax, ..., w_bmin)``.
    """
    bs = list(d.blocks)
    sizes = [len(d.blocks[b]) for b in bs]
    # capacity[i]: largest sum reachable using blocks i..end
    capacity = [0] * (len(bs) + 1)
    for i in range(len(bs) - 1, -1, -1):
        capacity[i] = capacity[i + 1] + bs[i] * sizes[i]
    if rho < 0 or rho > capacity[0]:
        return

    w = [0] * len(bs)

    def dfs(i: int, residual: int) -> Iterator[FlipVector]:
        if i == len(bs):
            if residual == 0:
                yield dict(zip(bs, w))
            return
        b = bs[i]
        for k in range(min(sizes[i], residual // b) + 1):
            rest = residual - k * b
            if rest > capacity[i + 1]:
                continue
            w[i] = k
            yield from dfs(i + 1, rest)
        w[i] = 0

    yield from dfs(0, rho)


def flip_vector_weight(d: BlockDecomposition, w: FlipVector) -> int:
    """Number of block-variable choices realising ``w`` (excluding free variables)."""
    out = 1
    for b, k in w.items():
        out *= math.comb(len(d.blocks[b]), k)
    return out


def count_pseudomodels(d: BlockDecomposition, sigma0: int) -> int:
    """Number of assignments with exactly ``sigma0`` true literals."""
    if sigma0 < d.sigma_min or sigma0 > d.sigma_max:
        return 0
    total = sum(flip_vector_weight(d, w) for w in enumerate_flip_vectors(d, sigma0 - d.sigma_min))
    return total << d.n0


def sat_bound(d: BlockDecomposition, m: int) -> int:
    """Number of assignments with at least ``m`` true literals."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return sum(count_pseudomodels(d, level) for level in range(max(m, d.sigma_min), d.sigma_max + 1))


@dataclass(frozen=True)
class XUnsatCertificate:
    """Proof that no assignment reaches ``m`` true literals in a single-block formula."""

    m: int
    sigma_min: int
    block: int
    block_size: int
    reason: str


def single_block_bound(d: BlockDecomposition, m: int) -> int | XUnsatCertificate:
    if len(d.blocks) != 1:
        raise ValueError(f"single_block_bound needs exactly one nonzero block, got {sorted(d.blocks)}")
    (b, members), = d.blocks.items()
    rho = m - d.sigma_min

    def cert(reason):
        return XUnsatCertificate(m, d.sigma_min, b, len(members), reason)

    if rho < 0:
        return cert(f"m - sigma_min = {rho} < 0")
    if rho % b:
        return cert(f"m - sigma_min = {rho} is not a multiple of {b}")
    if rho // b > len(members):
        return cert(f"(m - sigma_min) / {b} = {rho // b} exceeds block size {len(members)}")
    return math.comb(len(members), rho // b) << d.n0


def partition_count_exact(rho: int) -> int:
    """Number of integer partitions of ``rho``.

    DP over the largest admissible part, O(rho^2) additions.
    """
    if rho < 0:
        raise ValueError("rho must be nonnegative")
    ways = [1] + [0] * rho
    for part in range(1, rho + 1):
        for total in range(part, rho + 1):
            ways[total] += ways[total - part]
    return ways[rho]


def partition_asymptotic(rho: int) -> float:
    """Leading Hardy-Ramanujan term for the partition count; asymptotic only."""
    if rho < 1:
        raise ValueError("rho must be positive")
    return math.exp(math.pi * math.sqrt(2.0 * rho / 3.0)) / (4.0 * math.sqrt(3.0) * rho)


def hardness_threshold(n: int, slack: float = DEFAULT_HARDNESS_SLACK) -> float:
    return math.sqrt(n) * math.log2(n) + slack if n > 1 else slack


def hardness_report(f: Formula, sigma0: int, slack: float = DEFAULT_HARDNESS_SLACK) -> dict:
    """Pseudomodel bound at ``sigma0`` with growth diagnostics.

    The label compares ``log2(bound)`` against ``sqrt(n) * log2(n) + slack``;
    it is a heuristic, not a proof of anything.
    """
    d = decompose(occurrence_profile(f))
    bound = count_pseudomodels(d, sigma0)
    n = f.n
    log2_bound = math.log2(bound) if bound else None
    threshold = hardness_threshold(n, slack)
    if bound == 0:
        label = "infeasible"
    elif log2_bound <= threshold:
        label = "sub-exponential-indicated"
    else:
        label = "exponential-indicated"
    return {
        "sigma0": sigma0,
        "bound": bound,
        "log2_bound": log2_bound,
        "n": n,
        "log2_bound_per_n": log2_bound / n if n and log2_bound is not None else None,
        "log2_bound_per_sqrt_n": log2_bound / math.sqrt(n) if n and log2_bound is not None else None,
        "threshold": threshold,
        "label": label,
    }
