import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import naive
from pseudomodel.blocks import decompose
from pseudomodel.bounds import (
    XUnsatCertificate,
    count_pseudomodels,
    enumerate_flip_vectors,
    hardness_report,
    partition_asymptotic,
    partition_count_exact,
    sat_bound,
    single_block_bound,
)
from pseudomodel.formula import Formula, occurrence_profile
from pseudomodel.generators import gen_monotone_l_regular, gen_staircase
from test_formula import formulas

# full sigma histogram of the worked example, from a 32-assignment sweep
EXAMPLE_HISTOGRAM = {3: 2, 4: 4, 5: 4, 6: 6, 7: 6, 8: 4, 9: 4, 10: 2}


def blocks_of(f):
    return decompose(occurrence_profile(f))


def balanced_cycle(n):
    """Every variable once positive, once negative: all variables balanced."""
    return Formula(n, tuple((s, -(s % n + 1)) for s in range(1, n + 1)))


def test_example_flip_vectors(example):
    d = blocks_of(example)
    assert list(enumerate_flip_vectors(d, 1)) == [{3: 0, 2: 0, 1: 1}]
    assert list(enumerate_flip_vectors(d, 0)) == [{3: 0, 2: 0, 1: 0}]
    assert list(enumerate_flip_vectors(d, 7)) == [{3: 1, 2: 1, 1: 2}]
    assert list(enumerate_flip_vectors(d, -1)) == []
    assert list(enumerate_flip_vectors(d, 8)) == []


def test_example_flip_vector_order(example):
    d = blocks_of(example)
    got = [tuple(w.values()) for w in enumerate_flip_vectors(d, 3)]
    assert got == sorted(got)
    assert sorted(got) == sorted(tuple(w.values()) for w in naive.bounded_tuples(d, 3))


def test_example_counts(example):
    d = blocks_of(example)
    assert count_pseudomodels(d, 4) == 4
    assert count_pseudomodels(d, 3) == 2
    assert {s: count_pseudomodels(d, s) for s in range(0, 14) if count_pseudomodels(d, s)} == EXAMPLE_HISTOGRAM
    assert count_pseudomodels(d, 2) == count_pseudomodels(d, 11) == 0


def test_example_sat_bound(example):
    d = blocks_of(example)
    assert sat_bound(d, 4) == 30
    assert sat_bound(d, 0) == 32
    assert sat_bound(d, d.sigma_max + 1) == 0
    with pytest.raises(ValueError):
        sat_bound(d, -1)


@settings(max_examples=200, deadline=None)
@given(formulas(max_n=10), st.integers(-3, 40))
def test_flip_vectors_match_exhaustive_grid(f, rho):
    d = blocks_of(f)
    got = list(enumerate_flip_vectors(d, rho))
    expected = naive.bounded_tuples(d, rho)
    assert sorted(tuple(w.values()) for w in got) == sorted(tuple(w.values()) for w in expected)
    assert len({tuple(w.values()) for w in got}) == len(got)
    for w in got:
        assert sum(b * k for b, k in w.items()) == rho
        assert all(0 <= k <= len(d.blocks[b]) for b, k in w.items())


@settings(max_examples=150, deadline=None)
@given(formulas(max_n=10))
def test_counts_match_brute_force(f):
    d = blocks_of(f)
    hist = naive.sigma_histogram(f)
    for s in range(d.sigma_min - 1, d.sigma_max + 2):
        assert count_pseudomodels(d, s) == hist.get(s, 0)
    assert sum(count_pseudomodels(d, s) for s in range(d.sigma_min, d.sigma_max + 1)) == 2**f.n


@settings(max_examples=100, deadline=None)
@given(formulas(max_n=9))
def test_sat_bound_dominates_model_count(f):
    d = blocks_of(f)
    assert sat_bound(d, f.m) >= len(naive.sat_models(f))
    assert sat_bound(d, 0) == 2**f.n


def test_single_block_examples():
    f = gen_monotone_l_regular(4, 2, 4, seed=7)
    d = blocks_of(f)
    assert single_block_bound(d, 4) == math.comb(4, 2) == 6
    assert naive.sigma_histogram(f)[4] == 6
    cert = single_block_bound(d, 3)
    assert isinstance(cert, XUnsatCertificate) and "not a multiple" in cert.reason
    assert isinstance(single_block_bound(d, -1), XUnsatCertificate)
    assert isinstance(single_block_bound(d, 10), XUnsatCertificate)


def test_single_block_with_free_variables():
    # variable 3 is balanced, variables 1 and 2 form block 2
    f = Formula(3, ((1, 2, 3), (1, 2, -3)))
    d = blocks_of(f)
    assert d.blocks == {2: (1, 2)} and d.n0 == 1
    assert single_block_bound(d, 3) == 2 * math.comb(2, 1)
    assert single_block_bound(d, 3) == count_pseudomodels(d, 3)


def test_single_block_rejects_multi_block(example):
    with pytest.raises(ValueError):
        single_block_bound(blocks_of(example), 4)


@pytest.mark.parametrize("n, l", [(4, 2), (5, 2), (6, 3), (7, 3)])
def test_single_block_consistency(n, l):
    for m in range(l, n * l + 1):
        f = gen_monotone_l_regular(n, l, m, seed=m)
        d = blocks_of(f)
        got = single_block_bound(d, m)
        expected = count_pseudomodels(d, m)
        if isinstance(got, XUnsatCertificate):
            assert expected == 0
        else:
            assert got == expected


def test_partition_small_values():
    assert [partition_count_exact(r) for r in (0, 1, 5, 10)] == [1, 1, 7, 42]
    with pytest.raises(ValueError):
        partition_count_exact(-1)


def test_partition_dp_matches_recursion():
    for rho in range(0, 41):
        assert partition_count_exact(rho) == naive.partitions(rho)


def test_partition_asymptotic():
    assert partition_asymptotic(1) == pytest.approx(math.exp(math.pi * math.sqrt(2 / 3)) / (4 * math.sqrt(3)))
    exact = math.log(partition_count_exact(1000))
    assert abs(math.log(partition_asymptotic(1000)) - exact) / exact < 0.01
    values = [partition_asymptotic(r) for r in range(1, 200)]
    assert all(a < b for a, b in zip(values, values[1:]))
    with pytest.raises(ValueError):
        partition_asymptotic(0)


@pytest.mark.parametrize("n, p_prime", [(4, 0), (6, 0), (5, 1), (8, 1)])
def test_staircase_partition_bound(n, p_prime):
    f = gen_staircase(n, p_prime, p_prime + 1, seed=n)
    d = blocks_of(f)
    assert all(len(v) == 1 for v in d.blocks.values())
    assert count_pseudomodels(d, f.m) <= partition_count_exact(f.m - d.sigma_min)


def test_hardness_report_example(example):
    rep = hardness_report(example, 4)
    assert rep["bound"] == 4 and rep["log2_bound"] == 2.0
    assert rep["n"] == 5


def test_hardness_report_balanced_control():
    f = balanced_cycle(64)
    rep = hardness_report(f, f.m)
    assert rep["bound"] == 2**64
    assert rep["log2_bound_per_n"] == 1.0
    assert rep["label"] == "exponential-indicated"


def test_hardness_report_infeasible(example):
    rep = hardness_report(example, 99)
    assert rep["bound"] == 0 and rep["log2_bound"] is None and rep["label"] == "infeasible"


def test_hardness_report_staircase():
    f = gen_staircase(12, 0, 1, seed=3)
    rep = hardness_report(f, f.m)
    d = blocks_of(f)
    assert rep["bound"] <= partition_count_exact(f.m - d.sigma_min)
    assert rep["label"] == "sub-exponential-indicated"
