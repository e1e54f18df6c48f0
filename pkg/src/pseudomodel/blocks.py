"""Imbalance blocks, sigma extrema and ground states."""
from __future__ import annotations

from dataclasses import dataclass

from .formula import Assignment, OccurrenceProfile


@dataclass(frozen=True)
class BlockDecomposition:
    """Variables grouped by ``b = |p_plus - p_minus|``.

    ``blocks`` maps each positive ``b`` to its sorted 1-based variables and is
    ordered by decreasing ``b``. Balanced variables (``b = 0``) live in ``free``.
    """

    n: int
    num_literals: int
    blocks: dict[int, tuple[int, ...]]
    free: tuple[int, ...]
    literal_counts: dict[int, int]
    sigma_min: int
    sigma_max: int
    signs: tuple[int, ...]

    @property
    def n0(self) -> int:
        return len(self.free)

    @property
    def sizes(self) -> dict[int, int]:
        return {b: len(v) for b, v in self.blocks.items()}

    @property
    def b_values(self) -> tuple[int, ...]:
        return tuple(self.blocks)

    @property
    def reach(self) -> int:
        """Largest attainable ``sigma - sigma_min``, i.e. sum of ``b * n_b``."""
        return sum(b * len(v) for b, v in self.blocks.items())


@dataclass(frozen=True)
class GroundState:
    base: Assignment
    free_indices: tuple[int, ...]


def decompose(profile: OccurrenceProfile) -> BlockDecomposition:
    imbalance = [int(x) for x in profile.imbalance]
    p = [int(x) for x in profile.p]
    groups: dict[int, list[int]] = {}
    for s, b in enumerate(imbalance, start=1):
        groups.setdefault(b, []).append(s)
    free = tuple(groups.pop(0, ()))
    blocks = {b: tuple(groups[b]) for b in sorted(groups, reverse=True)}
    literal_counts = {b: sum(p[s - 1] for s in v) for b, v in blocks.items()}
    if free:
        literal_counts[0] = sum(p[s - 1] for s in free)

    total = profile.num_literals
    spread = sum(b * len(v) for b, v in blocks.items())
    # total - spread is always even
    sigma_min = (total - spread) // 2
    assert sigma_min == int(min_occurrences(profile))
    return BlockDecomposition(
        n=profile.n,
        num_literals=total,
        blocks=blocks,
        free=free,
        literal_counts=literal_counts,
        sigma_min=sigma_min,
        sigma_max=(total + spread) // 2,
        signs=tuple(int(x) for x in profile.sign),
    )


def min_occurrences(profile: OccurrenceProfile) -> int:
    """``sigma_min`` by direct counting: sum of ``min(p_plus, p_minus)``."""
    return int(sum(min(int(a), int(b)) for a, b in zip(profile.p_plus, profile.p_minus)))


def ground_assignment(profile: OccurrenceProfile) -> GroundState:
    """Minimal-sigma assignment: each variable set against its majority polarity.

    Balanced variables default to 0 and are reported as free.
    """
    signs = profile.sign
    base = tuple(1 if sg < 0 else 0 for sg in signs)
    free = tuple(s for s, sg in enumerate(signs, start=1) if sg == 0)
    return GroundState(base, free)


def top_assignment(profile: OccurrenceProfile) -> Assignment:
    return tuple(1 if sg > 0 else 0 for sg in profile.sign)
