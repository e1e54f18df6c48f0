"""Seeded instance generators for the formula classes analysed by the engine."""
from __future__ import annotations

import random

from .formula import Formula, to_dimacs


class GenerationError(ValueError):
    pass


def _place(occurrences: list[tuple[int, int]], m: int, rng: random.Random) -> list[list[int]]:
    """Put ``count`` copies of each variable into ``count`` distinct clauses.

    ``occurrences`` holds ``(variable, count)``. Each variable goes to the
    currently least-loaded clauses (random tie-break), which keeps clause
    widths within one of each other when all counts are equal.
    """
    members: list[list[int]] = [[] for _ in range(m)]
    for var, count in occurrences:
        order = sorted(range(m), key=lambda j: (len(members[j]), rng.random()))
        for j in order[:count]:
            members[j].append(var)
    return members


def gen_monotone_l_regular(n: int, l: int, m: int, seed: int = 0) -> Formula:
    """Monotone formula where every variable occurs exactly ``l`` times."""
    if n < 1 or l < 1 or m < 1:
        raise GenerationError("n, l and m must be positive")
    if m > n * l:
        raise GenerationError(f"m={m} clauses cannot all be nonempty with only {n * l} literals")
    if l > m:
        raise GenerationError(f"a variable occurring l={l} times needs at least {l} clauses, m={m}")
    if -(-n * l // m) > n:
        raise GenerationError("clause width would exceed n")
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    members = _place([(v, l) for v in order], m, rng)
    return Formula(n, tuple(tuple(sorted(c)) for c in members))


def gen_staircase(n: int, p_prime: int, lam: int, seed: int = 0) -> Formula:
    """Variable ``s`` gets ``p_prime`` minority and ``s + p_prime`` majority occurrences.

    ``m = lam * n`` clauses; the majority polarity of each variable is drawn
    from ``seed``.
    """
    if n < 1:
        raise GenerationError("n must be positive")
    if not lam > p_prime >= 0:
        raise GenerationError(f"need lambda > p' >= 0, got lambda={lam}, p'={p_prime}")
    m = lam * n
    total = n * (n + 1) // 2 + 2 * n * p_prime
    if n + 2 * p_prime > m:
        raise GenerationError(
            f"variable {n} occurs {n + 2 * p_prime} times but there are only m={m} clauses; "
            "increase lambda"
        )
    if total < m:
        raise GenerationError(f"only {total} literal occurrences for m={m} clauses; some would be empty")
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    members = _place([(s, s + 2 * p_prime) for s in order], m, rng)
    polarity = {}
    for s in order:
        major = 1 if rng.random() < 0.5 else -1
        slots = [major] * (s + p_prime) + [-major] * p_prime
        rng.shuffle(slots)
        polarity[s] = slots
    clauses = []
    for c in members:
        clauses.append(tuple(sorted((v * polarity[v].pop() for v in c), key=abs)))
    return Formula(n, tuple(clauses))


def gen_random(n: int, m: int, width_min: int, width_max: int, seed: int = 0) -> Formula:
    if not 1 <= width_min <= width_max <= n:
        raise GenerationError(f"need 1 <= width_min <= width_max <= n, got {width_min}, {width_max}, n={n}")
    if m < 0:
        raise GenerationError("m must be nonnegative")
    rng = random.Random(seed)
    clauses = []
    for _ in range(m):
        chosen = rng.sample(range(1, n + 1), rng.randint(width_min, width_max))
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in sorted(chosen)))
    return Formula(n, tuple(clauses))


GENERATORS = {
    "l-regular": gen_monotone_l_regular,
    "staircase": gen_staircase,
    "random": gen_random,
}


def generate_dimacs(kind: str, seed: int = 0, **params) -> str:
    """Generate an instance and serialise it with provenance comments."""
    if kind not in GENERATORS:
        raise GenerationError(f"unknown class {kind!r}; choose from {sorted(GENERATORS)}")
    f = GENERATORS[kind](seed=seed, **params)
    desc = " ".join(f"{k}={v}" for k, v in params.items())
    comments = [f"generator {kind} {desc} seed={seed}"]
    if kind == "staircase":
        comments.append("clause structure is one realisation of the occurrence profile (round-robin dealing)")
    return to_dimacs(f, comments)
