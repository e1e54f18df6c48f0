"""CNF formulas, DIMACS I/O and true-literal counting.

Literals are signed DIMACS integers: ``3`` is ``a_3``, ``-3`` is its negation.
Assignments are sequences of 0/1 values where ``y[s - 1]`` is the value of
variable ``s``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

Clause = tuple[int, ...]
Assignment = tuple[int, ...]


class FormulaError(ValueError):
    """Raised when a formula violates its structural invariants."""


class DimacsError(FormulaError):
    """Raised for malformed DIMACS input."""


def _check_clause(clause: Sequence[int], n: int, index: int) -> None:
    seen = set()
    for lit in clause:
        if lit == 0:
            raise FormulaError(f"clause {index}: literal 0 is not allowed")
        v = abs(lit)
        if v > n:
            raise FormulaError(f"clause {index}: literal {lit} out of range (n={n})")
        if v in seen:
            kind = "tautological pair" if -lit in clause else "duplicate literal"
            raise FormulaError(f"clause {index}: {kind} on variable {v}")
        seen.add(v)


@dataclass(frozen=True)
class Formula:
    num_variables: int
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        if self.num_variables < 0:
            raise FormulaError("num_variables must be nonnegative")
        clauses = tuple(tuple(int(lit) for lit in c) for c in self.clauses)
        for j, c in enumerate(clauses, start=1):
            _check_clause(c, self.num_variables, j)
        object.__setattr__(self, "clauses", clauses)

    @property
    def n(self) -> int:
        return self.num_variables

    @property
    def m(self) -> int:
        return len(self.clauses)

    @property
    def num_literals(self) -> int:
        return sum(len(c) for c in self.clauses)

    @property
    def max_width(self) -> int:
        return max((len(c) for c in self.clauses), default=0)

    def has_empty_clause(self) -> bool:
        return any(len(c) == 0 for c in self.clauses)


@dataclass(frozen=True)
class OccurrenceProfile:
    """Positive and negative occurrence counts per variable (index ``s - 1``)."""

    p_plus: np.ndarray
    p_minus: np.ndarray

    @property
    def n(self) -> int:
        return len(self.p_plus)

    @property
    def p(self) -> np.ndarray:
        return self.p_plus + self.p_minus

    @property
    def imbalance(self) -> np.ndarray:
        return np.abs(self.p_plus - self.p_minus)

    @property
    def sign(self) -> np.ndarray:
        return np.sign(self.p_plus - self.p_minus)

    @property
    def num_literals(self) -> int:
        return int(self.p.sum())


def occurrence_profile(f: Formula) -> OccurrenceProfile:
    p_plus = np.zeros(f.n, dtype=np.int64)
    p_minus = np.zeros(f.n, dtype=np.int64)
    for clause in f.clauses:
        for lit in clause:
            if lit > 0:
                p_plus[lit - 1] += 1
            else:
                p_minus[-lit - 1] += 1
    p_plus.flags.writeable = False
    p_minus.flags.writeable = False
    return OccurrenceProfile(p_plus, p_minus)


def _check_length(y: Sequence[int], n: int) -> None:
    if len(y) != n:
        raise ValueError(f"assignment has length {len(y)}, expected {n}")


def sigma(profile: OccurrenceProfile, y: Sequence[int]) -> int:
    """Number of true literal occurrences under ``y``."""
    _check_length(y, profile.n)
    yv = np.asarray(y, dtype=np.int64)
    return int(profile.p_minus.sum() + ((profile.p_plus - profile.p_minus) * yv).sum())


def literal_true(lit: int, y: Sequence[int]) -> bool:
    return bool(y[lit - 1]) if lit > 0 else not y[-lit - 1]


def clause_true_counts(f: Formula, y: Sequence[int]) -> tuple[int, ...]:
    """Histogram ``h`` with ``h[a]`` = number of clauses having exactly ``a`` true literals.

    The histogram has length ``max_width + 1``, or is empty when ``f`` has no
    clauses.
    """
    _check_length(y, f.n)
    if not f.clauses:
        return ()
    hist = [0] * (f.max_width + 1)
    for clause in f.clauses:
        hist[sum(literal_true(lit, y) for lit in clause)] += 1
    return tuple(hist)


def flip(y: Sequence[int], s: int) -> Assignment:
    """Return ``y`` with variable ``s`` (1-based) negated."""
    out = list(y)
    out[s - 1] = 1 - out[s - 1]
    return tuple(out)


def _tokens(text: str) -> Iterable[tuple[int, str]]:
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        yield lineno, stripped


def parse_dimacs(text: str) -> Formula:
    """Parse DIMACS CNF text.

    Clauses may span lines; each is terminated by ``0``. A bare ``0`` is an
    empty clause.
    """
    header = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for lineno, line in _tokens(text):
        if line.startswith("p"):
            if header is not None:
                raise DimacsError(f"line {lineno}: duplicate header")
            fields = line.split()
            if len(fields) != 4 or fields[0] != "p" or fields[1] != "cnf":
                raise DimacsError(f"line {lineno}: malformed header {line!r}")
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed header {line!r}") from None
            if n < 0 or m < 0:
                raise DimacsError(f"line {lineno}: negative counts in header")
            header = (n, m)
            continue
        if header is None:
            raise DimacsError(f"line {lineno}: clause data before 'p cnf' header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer token {tok!r}") from None
            if lit == 0:
                clauses.append(current)
                current = []
                continue
            index = len(clauses) + 1
            if abs(lit) > header[0]:
                raise DimacsError(f"clause {index}: literal {lit} out of range (n={header[0]})")
            if lit in current:
                raise DimacsError(f"clause {index}: duplicate literal on variable {abs(lit)}")
            if -lit in current:
                raise DimacsError(f"clause {index}: tautological pair on variable {abs(lit)}")
            current.append(lit)
    if header is None:
        raise DimacsError("missing 'p cnf' header")
    if current:
        raise DimacsError(f"clause {len(clauses) + 1}: missing terminating 0")
    n, m = header
    if len(clauses) != m:
        raise DimacsError(f"header declares {m} clauses, found {len(clauses)}")
    return Formula(n, tuple(tuple(c) for c in clauses))


def to_dimacs(f: Formula, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" if c else "c" for c in comments]
    lines.append(f"p cnf {f.n} {f.m}")
    lines.extend(" ".join([*map(str, c), "0"]) for c in f.clauses)
    return "\n".join(lines) + "\n"


def read_dimacs(path) -> Formula:
    with open(path, encoding="utf-8") as fh:
        return parse_dimacs(fh.read())
