import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from naive import histogram as naive_histogram
from naive import sigma as naive_sigma
from pseudomodel.formula import (
    DimacsError,
    Formula,
    FormulaError,
    clause_true_counts,
    flip,
    occurrence_profile,
    parse_dimacs,
    sigma,
    to_dimacs,
)
from pseudomodel.generators import gen_random


@st.composite
def formulas(draw, max_n=10, max_m=12):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, max_m))
    clauses = []
    for _ in range(m):
        vs = draw(st.lists(st.integers(1, n), unique=True, max_size=min(n, 4)))
        clauses.append(tuple(v if draw(st.booleans()) else -v for v in vs))
    return Formula(n, tuple(clauses))


@st.composite
def formula_and_assignment(draw):
    f = draw(formulas())
    y = tuple(draw(st.lists(st.integers(0, 1), min_size=f.n, max_size=f.n)))
    return f, y


def test_parse_minimal():
    f = parse_dimacs("p cnf 1 1\n1 0\n")
    assert f.n == 1 and f.clauses == ((1,),)


def test_parse_example(example):
    assert (example.n, example.m, example.num_literals) == (5, 4, 13)
    assert example.clauses[2] == (-1, 2, -3, 4)


def test_parse_multiline_clause_and_empty_clause():
    f = parse_dimacs("c hi\np cnf 3 2\n1 -2\n 3 0\n0\n")
    assert f.clauses == ((1, -2, 3), ())


@pytest.mark.parametrize(
    "text, message",
    [
        ("p cnf 2 1\n1 -1 0\n", "clause 1: tautological pair"),
        ("p cnf 2 2\n1 2 0\n2 2 0\n", "clause 2: duplicate literal"),
        ("p cnf 2 1\n1 3 0\n", "out of range"),
        ("p cnf 2 2\n1 0\n", "declares 2 clauses, found 1"),
        ("p cnf 2 1\n1 2\n", "missing terminating 0"),
        ("p cnf x 1\n1 0\n", "malformed header"),
        ("p dnf 2 1\n1 0\n", "malformed header"),
        ("1 0\np cnf 1 1\n", "before 'p cnf' header"),
        ("c nothing\n", "missing 'p cnf' header"),
        ("p cnf 2 1\n1 a 0\n", "non-integer"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(DimacsError, match=message):
        parse_dimacs(text)


def test_formula_rejects_bad_clauses():
    with pytest.raises(FormulaError):
        Formula(2, ((1, -1),))
    with pytest.raises(FormulaError):
        Formula(1, ((2,),))


def test_occurrence_profile_example(example):
    prof = occurrence_profile(example)
    pairs = list(zip(prof.p_plus.tolist(), prof.p_minus.tolist()))
    assert pairs == [(2, 1), (3, 0), (1, 2), (1, 1), (0, 2)]
    assert prof.num_literals == 13


def test_occurrence_profile_trivial():
    prof = occurrence_profile(Formula(3, ()))
    assert prof.p_plus.tolist() == [0, 0, 0] and prof.p_minus.tolist() == [0, 0, 0]
    mono = occurrence_profile(Formula(3, ((1, 2), (2, 3))))
    assert mono.p_minus.tolist() == [0, 0, 0]


def test_sigma_examples(example):
    prof = occurrence_profile(example)
    assert sigma(prof, (0, 0, 1, 0, 1)) == 3
    mono = Formula(3, ((1, 2), (2, 3)))
    assert sigma(occurrence_profile(mono), (1, 1, 1)) == 4
    assert sigma(occurrence_profile(Formula(1, ((1,),))), (0,)) == 0
    with pytest.raises(ValueError):
        sigma(prof, (0, 1))


def test_clause_true_counts_examples(example):
    assert clause_true_counts(example, (0, 0, 1, 0, 1)) == (1, 3, 0, 0, 0)
    assert clause_true_counts(Formula(2, ()), (0, 1)) == ()
    assert clause_true_counts(Formula(2, ((1, 2),)), (1, 1)) == (0, 0, 1)
    with pytest.raises(ValueError):
        clause_true_counts(example, (0,))


@settings(max_examples=200, deadline=None)
@given(formula_and_assignment())
def test_sigma_matches_clause_histogram(fy):
    f, y = fy
    prof = occurrence_profile(f)
    hist = clause_true_counts(f, y)
    assert sum(hist) == f.m
    assert sum(a * c for a, c in enumerate(hist)) == sigma(prof, y) == naive_sigma(f.clauses, y)
    if f.clauses:
        assert list(hist) == naive_histogram(f.clauses, y, f.max_width + 1)


@settings(max_examples=200, deadline=None)
@given(formula_and_assignment())
def test_flip_changes_sigma_by_signed_imbalance(fy):
    f, y = fy
    prof = occurrence_profile(f)
    for s in range(1, f.n + 1):
        diff = int(prof.p_plus[s - 1] - prof.p_minus[s - 1])
        step = sigma(prof, flip(y, s)) - sigma(prof, y)
        assert step == (diff if y[s - 1] == 0 else -diff)


@settings(max_examples=100, deadline=None)
@given(formulas())
def test_extreme_assignments(f):
    prof = occurrence_profile(f)
    assert sigma(prof, (1,) * f.n) == int(prof.p_plus.sum())
    assert sigma(prof, (0,) * f.n) == int(prof.p_minus.sum())


@settings(max_examples=100, deadline=None)
@given(formulas())
def test_dimacs_round_trip(f):
    assert parse_dimacs(to_dimacs(f, ["note"])) == f


def test_round_trip_random_instances():
    rng = random.Random(5)
    for i in range(50):
        f = gen_random(rng.randint(1, 9), rng.randint(0, 10), 1, 1, seed=i)
        assert parse_dimacs(to_dimacs(f)) == f
