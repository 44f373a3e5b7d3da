from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from exactfluct import Statistics
from exactfluct.errors import DomainError, UnsupportedStatisticsError
from exactfluct.microcanonical import (
    MultiplicityDistribution,
    bose_columns,
    bose_multiplicity,
    distribution,
    fermi_columns,
    fermi_multiplicity,
    fluctuation_series,
    ground_state_stats,
    hole_min_quanta,
    multiplicity_columns,
    particle_min_quanta,
)
from exactfluct.oracle import oracle_multiplicities
from exactfluct.partitions import partition_table

BOSE, FERMI = Statistics.bose(), Statistics.fermi()


@pytest.mark.parametrize(
    "n, k, N, expected",
    [(2, 1, 2, 1), (2, 2, 2, 1), (3, 5, 10, 0), (0, 1, 1, 0), (7, 3, 3, 4)],
)
def test_bose_multiplicity(n, k, N, expected):
    assert bose_multiplicity(n, k, N) == expected


def test_bose_independent_of_size():
    for n in range(30):
        for k in range(1, 6):
            assert len({bose_multiplicity(n, k, N) for N in range(k, 12)}) == 1


@pytest.mark.parametrize(
    "n, k, N, expected",
    [(2, 1, 2, 2), (2, 2, 2, 0), (3, 1, 5, 3), (4, 2, 2, 1)],
)
def test_fermi_multiplicity_fixtures(n, k, N, expected):
    assert fermi_multiplicity(n, k, N) == expected


def test_fermi_multiplicity_12_2_6_from_durfee_oracle():
    want = oracle_multiplicities(12, 6, FERMI).omega[1]
    assert want == 42
    assert fermi_multiplicity(12, 2, 6) == want


def test_min_quanta():
    assert particle_min_quanta(1) == 1
    assert [hole_min_quanta(k) for k in (1, 2, 3, 4)] == [0, 1, 3, 6]
    # the two shifts together cost exactly N_ex^2
    assert all(particle_min_quanta(k) + hole_min_quanta(k) == k * k for k in range(1, 50))


@pytest.mark.parametrize("func", [bose_multiplicity, fermi_multiplicity])
def test_domain_errors(func):
    with pytest.raises(DomainError):
        func(3, 4, 3)
    with pytest.raises(DomainError):
        func(3, 0, 3)
    with pytest.raises(DomainError):
        func(-1, 1, 3)


def test_fermi_zero_below_square_threshold():
    for N in range(1, 9):
        for n in range(41):
            for k in range(1, N + 1):
                assert (fermi_multiplicity(n, k, N) == 0) == (n < k * k)


def test_single_hole_space_reduces_to_particle_sector():
    # N_ex = N: no hole freedom, omega_F(n, N, N) = Omega(n - N^2, N)
    for N in range(1, 7):
        for n in range(60):
            want = partition_table(60, N)[n - N * N, N] if n >= N * N else 0
            assert fermi_multiplicity(n, N, N) == want


@pytest.mark.parametrize("N", range(1, 9))
def test_pipeline_equals_oracle(N):
    for n in range(41):
        for stats in (BOSE, FERMI):
            assert distribution(n, N, stats).omega == oracle_multiplicities(n, N, stats).omega


def test_distribution_fixtures():
    assert distribution(3, 5, FERMI).omega == (3, 0, 0, 0, 0)
    assert distribution(0, 4, BOSE).omega == (0, 0, 0, 0)
    assert distribution(0, 4, FERMI).omega == (0, 0, 0, 0)
    d = distribution(16, 5, BOSE)
    assert d.total == partition_table(16, 5)[16, 5] == 101
    assert d[1] == 1 and d.statistics == BOSE


def test_distribution_rejects_unsupported_g():
    with pytest.raises(UnsupportedStatisticsError, match="fes:3/4"):
        distribution(3, 5, Statistics.fes("1/2"))


def test_probabilities_are_normalized():
    d = distribution(20, 6, FERMI)
    assert sum(d.probabilities()) == 1
    assert all(p == Fraction(w, d.total) for p, w in zip(d.probabilities(), d.omega))


def test_multiplicity_distribution_shape_check():
    with pytest.raises(ValueError):
        MultiplicityDistribution(1, 3, FERMI, (1, 0))


@given(st.integers(1, 200), st.integers(1, 30))
def test_sum_rule_pointwise(n, N):
    omega = partition_table(n, N)[n, N]
    assert distribution(n, N, BOSE).total == omega
    assert distribution(n, N, FERMI).total == omega


def test_ground_state_stats_two_particles():
    st_f = ground_state_stats(distribution(2, 2, FERMI))
    assert (st_f.mean_excited, st_f.fluctuation) == (1.0, 0.0)
    st_b = ground_state_stats(distribution(2, 2, BOSE))
    assert st_b.mean_excited == 1.5
    assert st_b.second_moment == 2.5
    assert st_b.fluctuation == 0.5


def test_ground_state_stats_at_zero_quanta():
    s = ground_state_stats(distribution(0, 5, FERMI))
    assert (s.mean_excited, s.second_moment, s.fluctuation) == (0.0, 0.0, 0.0)


def test_stats_exact_at_large_n():
    d = distribution(3000, 30, FERMI)
    s0 = d.total
    s1 = sum(k * w for k, w in enumerate(d.omega, 1))
    s2 = sum(k * k * w for k, w in enumerate(d.omega, 1))
    exact = Fraction(s2, s0) - Fraction(s1, s0) ** 2
    got = ground_state_stats(d)
    assert got.variance == pytest.approx(float(exact), rel=1e-12)
    assert 0 <= got.mean_excited <= 30


@pytest.mark.parametrize("N", [1, 2, 5, 13])
def test_sweeps_match_pointwise(N):
    fc = fermi_columns(90, N)
    bc = bose_columns(90, N)
    for n in range(91):
        assert tuple(c[n] for c in fc) == distribution(n, N, FERMI).omega
        assert tuple(c[n] for c in bc) == distribution(n, N, BOSE).omega


def test_sweep_sum_rule_large():
    cols = multiplicity_columns(2000, 30, FERMI)
    col = partition_table(2000, 30).column(30)
    assert all(sum(c[n] for c in cols) == col[n] for n in range(1, 2001))


def test_fluctuation_series():
    s = fluctuation_series(50, 5, FERMI)
    assert s.n[0] == 0 and s.fluctuation[0] == 0 and s.mean_excited[0] == 0
    for n in (1, 7, 33, 50):
        g = ground_state_stats(distribution(n, 5, FERMI))
        assert s.fluctuation[n] == g.fluctuation
        assert s.mean_excited[n] == g.mean_excited
    rows = list(s.rows())
    assert len(rows) == 51 and rows[2] == (2, 1.0, 0.0)


def test_fermi_bose_curves_cross_once():
    for N in (5, 10):
        f = fluctuation_series(200, N, FERMI).fluctuation
        b = fluctuation_series(200, N, BOSE).fluctuation
        diff = f - b
        signs = np.sign(diff[np.abs(diff) > 1e-12])
        assert signs[0] < 0 and signs[-1] > 0
        assert np.count_nonzero(np.diff(signs)) == 1
