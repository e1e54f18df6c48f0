"""Constructive PART-SAT / XSAT / SAT decisions by pseudomodel enumeration.

Candidates are built from the ground state by flipping, for every flip
vector, each combination of ``w_b`` variables in block ``b``; balanced
variables are then expanded over both values. Each candidate is tested
against the clause-level condition.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .blocks import BlockDecomposition, GroundState, decompose, ground_assignment
from .bounds import FlipVector, count_pseudomodels, enumerate_flip_vectors, sat_bound
from .formula import Assignment, Formula, FormulaError, occurrence_profile

SATISFIABLE = "satisfiable"
UNSATISFIABLE = "unsatisfiable"

# condition understood by the scanner: a mu tuple, or SAT_CONDITION
SAT_CONDITION = "sat"


class SpecError(FormulaError):
    """PartitionSpec does not fit the formula."""


class CandidateBudgetExceeded(RuntimeError):
    def __init__(self, examined: int, budget: int):
        super().__init__(f"candidate budget {budget} exhausted")
        self.examined = examined
        self.budget = budget


@dataclass(frozen=True)
class PartitionSpec:
    """``mu[a]`` = number of clauses required to have exactly ``a`` true literals."""

    mu: tuple[int, ...]

    def __post_init__(self):
        mu = tuple(int(x) for x in self.mu)
        if any(x < 0 for x in mu):
            raise SpecError(f"negative entry in partition spec {mu}")
        object.__setattr__(self, "mu", mu)

    @classmethod
    def parse(cls, text: str) -> "PartitionSpec":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(tok) for tok in text.split(",")))
        except ValueError:
            raise SpecError(f"cannot parse partition spec {text!r}") from None

    @classmethod
    def xsat(cls, m: int) -> "PartitionSpec":
        return cls((0, m)) if m else cls(())

    @property
    def k(self) -> int:
        return len(self.mu) - 1

    def validate(self, f: Formula) -> None:
        if sum(self.mu) != f.m:
            raise SpecError(f"sum of mu is {sum(self.mu)}, formula has m={f.m} clauses")
        if self.k > f.max_width:
            raise SpecError(f"k={self.k} exceeds max clause width {f.max_width}")


def target_sigma(spec: PartitionSpec) -> int:
    return sum(a * mu for a, mu in enumerate(spec.mu))


@dataclass
class Verdict:
    status: str
    witness: Optional[Assignment]
    examined: int
    bound: int
    models: Optional[int] = None

    @property
    def satisfiable(self) -> bool:
        return self.status == SATISFIABLE


def _ground(f: Formula) -> tuple[BlockDecomposition, GroundState]:
    profile = occurrence_profile(f)
    return decompose(profile), ground_assignment(profile)


def _expand(d: BlockDecomposition, g: GroundState, w: FlipVector) -> Iterator[Assignment]:
    per_block = [itertools.combinations(d.blocks[b], k) for b, k in w.items()]
    for choice in itertools.product(*per_block):
        y = list(g.base)
        for group in choice:
            for s in group:
                y[s - 1] ^= 1
        for values in itertools.product((0, 1), repeat=len(g.free_indices)):
            for s, v in zip(g.free_indices, values):
                y[s - 1] = v
            yield tuple(y)


def enumerate_pseudomodels(f: Formula, sigma0: int) -> Iterator[Assignment]:
    """Lazily yield every assignment with exactly ``sigma0`` true literals."""
    d, g = _ground(f)
    if sigma0 < d.sigma_min or sigma0 > d.sigma_max:
        return
    for w in enumerate_flip_vectors(d, sigma0 - d.sigma_min):
        yield from _expand(d, g, w)


def _compile(f: Formula) -> list[tuple[tuple[int, int], ...]]:
    return [tuple((abs(lit) - 1, 1 if lit > 0 else 0) for lit in c) for c in f.clauses]


def _histogram(compiled, y: Sequence[int], length: int) -> list[int]:
    hist = [0] * length
    for clause in compiled:
        hist[sum(y[i] == want for i, want in clause)] += 1
    return hist


def _acceptor(f: Formula, condition):
    compiled = _compile(f)
    if condition == SAT_CONDITION:
        return lambda y: all(any(y[i] == want for i, want in c) for c in compiled)
    mu = list(condition)
    length = max(len(mu), f.max_width + 1)
    mu += [0] * (length - len(mu))
    return lambda y: _histogram(compiled, y, length) == mu


def _scan(candidates: Iterable[Assignment], accept, stop_first: bool, budget: Optional[int]):
    matches = 0
    witness = None
    examined = 0
    for y in candidates:
        if budget is not None and examined >= budget:
            raise CandidateBudgetExceeded(examined, budget)
        examined += 1
        if accept(y):
            matches += 1
            if witness is None:
                witness = y
            if stop_first:
                break
    return matches, witness, examined


def _levels(f: Formula, condition, d: BlockDecomposition) -> range:
    if condition == SAT_CONDITION:
        return range(max(f.m, d.sigma_min), d.sigma_max + 1)
    level = target_sigma(PartitionSpec(condition))
    return range(level, level + 1)


def _candidates(f: Formula, condition) -> Iterator[Assignment]:
    d, _ = _ground(f)
    for level in _levels(f, condition, d):
        yield from enumerate_pseudomodels(f, level)


def _bound(f: Formula, condition, d: BlockDecomposition) -> int:
    if condition == SAT_CONDITION:
        return sat_bound(d, f.m)
    return count_pseudomodels(d, target_sigma(PartitionSpec(condition)))


def _run(f: Formula, condition, count: bool, max_candidates: Optional[int], jobs: int = 1) -> Verdict:
    d, _ = _ground(f)
    bound = _bound(f, condition, d)
    if condition == SAT_CONDITION and f.has_empty_clause():
        return Verdict(UNSATISFIABLE, None, 0, bound, 0 if count else None)
    if count and jobs > 1:
        matches, witness, examined = _parallel_count(f, condition, d, jobs, max_candidates)
    else:
        matches, witness, examined = _scan(
            _candidates(f, condition), _acceptor(f, condition), not count, max_candidates
        )
    status = SATISFIABLE if witness is not None else UNSATISFIABLE
    return Verdict(status, witness, examined, bound, matches if count else None)


def _count_chunk(f: Formula, condition, tasks: list[tuple[int, FlipVector]]):
    d, g = _ground(f)
    candidates = itertools.chain.from_iterable(_expand(d, g, w) for _, w in tasks)
    return _scan(candidates, _acceptor(f, condition), False, None)


def _parallel_count(f, condition, d, jobs, budget):
    # counting is an order-free sum, so flip vectors may be split arbitrarily
    tasks = [
        (level, w)
        for level in _levels(f, condition, d)
        for w in enumerate_flip_vectors(d, level - d.sigma_min)
    ]
    if budget is not None and _bound(f, condition, d) > budget:
        raise CandidateBudgetExceeded(0, budget)
    chunks = [tasks[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_count_chunk, [f] * jobs, [condition] * jobs, chunks))
    matches = sum(r[0] for r in results)
    examined = sum(r[2] for r in results)
    # any witness will do here; take the first chunk's for reproducibility
    witness = next((r[1] for r in results if r[1] is not None), None)
    return matches, witness, examined


def decide_part_sat(
    f: Formula,
    spec: PartitionSpec,
    *,
    count: bool = False,
    max_candidates: Optional[int] = None,
    jobs: int = 1,
) -> Verdict:
    """Decide whether some assignment realises the clause histogram ``spec.mu``.

    With ``count=True`` the scan is exhaustive and ``Verdict.models`` holds
    the exact number of models.
    """
    spec.validate(f)
    return _run(f, spec.mu, count, max_candidates, jobs)


def decide_xsat(f: Formula, *, count: bool = False, max_candidates: Optional[int] = None, jobs: int = 1) -> Verdict:
    # bypasses PartitionSpec.validate: a formula made only of empty clauses
    # has width 0 but XSAT on it is still a well-posed (false) question
    return _run(f, PartitionSpec.xsat(f.m).mu, count, max_candidates, jobs)


def count_xsat_models(f: Formula, *, jobs: int = 1) -> int:
    return decide_xsat(f, count=True, jobs=jobs).models


def decide_sat(f: Formula, *, count: bool = False, max_candidates: Optional[int] = None, jobs: int = 1) -> Verdict:
    """Scan pseudomodels for every level from ``m`` to ``sigma_max``."""
    return _run(f, SAT_CONDITION, count, max_candidates, jobs)


def count_sat_models(f: Formula, *, jobs: int = 1) -> int:
    return decide_sat(f, count=True, jobs=jobs).models


def count_part_sat_models(f: Formula, spec: PartitionSpec, *, jobs: int = 1) -> int:
    return decide_part_sat(f, spec, count=True, jobs=jobs).models


def verify_witness(f: Formula, y: Sequence[int], condition) -> bool:
    """Re-check a witness against a mu tuple or ``SAT_CONDITION``."""
    if len(y) != f.n:
        return False
    return _acceptor(f, condition)(tuple(y))
