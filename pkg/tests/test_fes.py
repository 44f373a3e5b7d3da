from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exactfluct import Statistics
from exactfluct.errors import BudgetExceededError, DomainError, UnsupportedStatisticsError
from exactfluct.fes import (
    QuasiparticleState,
    classification_breakpoints,
    closed_form,
    discrete_g_grid,
    enumerate_fes,
    fes_ground_state_energy,
    fes_multiplicity_near_bose,
    fes_multiplicity_near_fermi,
    near_bose_columns,
    near_fermi_columns,
    plateau_representative,
)
from exactfluct.microcanonical import distribution
from exactfluct.oracle import enumerate_partitions


def test_statistics_parse_and_str():
    s = Statistics.parse("fes:3/4")
    assert s.kind == "fes" and s.g == Fraction(3, 4) and str(s) == "fes:3/4"
    assert Statistics.parse(" Fermi ") == Statistics.fermi()
    assert Statistics.parse("fes:0").exclusion == 0
    assert Statistics.bose().exclusion == 0 and Statistics.fermi().exclusion == 1


@pytest.mark.parametrize("text", ["fes:5/4", "fes:-1/2", "fes:abc", "fes:1/0", "anyon"])
def test_statistics_parse_rejects(text):
    with pytest.raises(DomainError):
        Statistics.parse(text)


def test_float_g_is_rejected():
    with pytest.raises(DomainError, match="exact rational"):
        Statistics.fes(0.5)
    with pytest.raises(DomainError):
        Statistics("bose", Fraction(1, 2))


def test_grid():
    assert discrete_g_grid(5) == [1, Fraction(3, 4), Fraction(1, 2), Fraction(1, 4), 0]
    assert discrete_g_grid(2) == [1, 0]
    for N in range(2, 20):
        for g in discrete_g_grid(N):
            assert (N - (1 - g) * (N - 1)).denominator == 1
    with pytest.raises(DomainError):
        discrete_g_grid(1)


@given(st.integers(2, 12), st.fractions(0, 1))
def test_plateau_representative_is_lower_grid_point(N, g):
    rep = plateau_representative(g, N)
    assert rep in discrete_g_grid(N)
    assert rep <= g < rep + Fraction(1, N - 1) or g == 1 == rep


def test_closed_form_dispatch():
    assert closed_form(Statistics.fes(0), 7) == "bose"
    assert closed_form(Statistics.fes(1), 7) == "fermi"
    assert closed_form(Statistics.fes("5/6"), 7) == "near_fermi"
    assert closed_form(Statistics.fes("1/6"), 7) == "near_bose"
    with pytest.raises(UnsupportedStatisticsError, match="fes:5/6"):
        closed_form(Statistics.fes("1/2"), 7)


def test_ground_state_energy_endpoints():
    for N in range(1, 10):
        assert fes_ground_state_energy(N, 1) == Fraction(N * N, 2)
        assert fes_ground_state_energy(N, 0) == Fraction(N, 2)


def test_quasiparticle_state():
    ground = QuasiparticleState.from_shifts((), 5)
    assert ground.levels == (1, 2, 3, 4, 5) and ground.excitation == 0
    assert ground.n_excited(Fraction(1, 2)) == 0
    # semions: top particle up by 3 quanta is the one excited state
    s = QuasiparticleState.from_shifts((3,), 5)
    assert s.excitation == 3 and s.n_excited(Fraction(1, 2)) == 1
    with pytest.raises(ValueError):
        QuasiparticleState((2, 2))


def test_semion_fixture():
    assert enumerate_fes(3, 5, Fraction(1, 2)).omega == (1, 2, 0, 0, 0)


@pytest.mark.parametrize("g", ["3/4", "1/2", "1/4", "2/3", "1/7"])
def test_integer_comparison_matches_rational_states(g):
    g = Fraction(g)
    for N in (3, 5):
        for n in range(13):
            counts = [0] * N
            for parts in enumerate_partitions(n, N):
                k = QuasiparticleState.from_shifts(parts, N).n_excited(g)
                if k:
                    counts[k - 1] += 1
            assert enumerate_fes(n, N, g).omega == tuple(counts)


@pytest.mark.parametrize("N", [3, 4, 5])
def test_closed_forms_match_enumerator(N):
    for n in range(17):
        nf = Fraction(N - 2, N - 1)
        nb = Fraction(1, N - 1)
        assert tuple(fes_multiplicity_near_fermi(n, k, N) for k in range(1, N + 1)) == enumerate_fes(n, N, nf).omega
        assert tuple(fes_multiplicity_near_bose(n, k, N) for k in range(1, N + 1)) == enumerate_fes(n, N, nb).omega


def test_n3_both_closed_forms_coincide():
    # at N = 3 both special values are g = 1/2
    for n in range(30):
        for k in range(1, 4):
            assert fes_multiplicity_near_fermi(n, k, 3) == fes_multiplicity_near_bose(n, k, 3)


@pytest.mark.parametrize("N", [3, 6, 11])
def test_sweeps_match_pointwise(N):
    nf, nb = near_fermi_columns(60, N), near_bose_columns(60, N)
    for n in range(61):
        for k in range(1, N + 1):
            assert nf[k - 1][n] == fes_multiplicity_near_fermi(n, k, N)
            assert nb[k - 1][n] == fes_multiplicity_near_bose(n, k, N)


def test_near_fermi_zero_at_ground_state():
    assert all(fes_multiplicity_near_fermi(0, k, 5) == 0 for k in range(1, 6))


def test_closed_form_domain_errors():
    with pytest.raises(DomainError):
        fes_multiplicity_near_fermi(3, 1, 2)
    with pytest.raises(DomainError):
        fes_multiplicity_near_bose(3, 1, 1)
    with pytest.raises(DomainError):
        fes_multiplicity_near_bose(3, 0, 4)


@pytest.mark.parametrize("N", [4, 5])
def test_endpoint_values_reproduce_bose_and_fermi(N):
    for n in range(25):
        assert enumerate_fes(n, N, 1).omega == distribution(n, N, Statistics.fermi()).omega
        assert enumerate_fes(n, N, 0).omega == distribution(n, N, Statistics.bose()).omega


def _gap_start(g, N):
    return max(t for t in classification_breakpoints(N) if t <= g)


@given(st.integers(2, 6), st.data())
def test_constant_between_breakpoints(N, data):
    n = data.draw(st.integers(0, 14))
    g = data.draw(st.fractions(0, 1, max_denominator=60))
    assert enumerate_fes(n, N, g).omega == enumerate_fes(n, N, _gap_start(g, N)).omega


@given(st.integers(2, 7), st.data())
def test_outer_grid_intervals_are_plateaus(N, data):
    # [0, 1/(N-1)) reproduces bosons; [(N-2)/(N-1), 1) reproduces the near-fermi value
    n = data.draw(st.integers(0, 12))
    step = Fraction(1, N - 1)
    low = data.draw(st.fractions(0, step, max_denominator=60).filter(lambda g: g < step))
    assert enumerate_fes(n, N, low).omega == distribution(n, N, Statistics.bose()).omega
    high = data.draw(st.fractions(1 - step, 1, max_denominator=60).filter(lambda g: g < 1))
    assert enumerate_fes(n, N, high).omega == enumerate_fes(n, N, 1 - step).omega


def test_interior_grid_interval_is_not_a_plateau():
    # at N = 4 the particle two below the top crosses the top level at g = 1/2
    assert enumerate_fes(3, 4, Fraction(1, 3)).omega == (1, 1, 1, 0)
    assert enumerate_fes(3, 4, Fraction(1, 2)).omega == (1, 2, 0, 0)
    assert Fraction(1, 2) in classification_breakpoints(4)


def test_breakpoints():
    assert classification_breakpoints(2) == [0, 1]
    assert classification_breakpoints(4) == [0, Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), 1]
    for N in range(2, 9):
        assert set(discrete_g_grid(N)) <= set(classification_breakpoints(N))


def test_enumerator_sum_rule():
    for g in ("2/5", "5/7"):
        for n in range(1, 20):
            assert enumerate_fes(n, 6, g).total == distribution(n, 6, Statistics.fermi()).total


def test_enumerator_budget():
    with pytest.raises(BudgetExceededError):
        enumerate_fes(60, 30, "1/2", budget=1000)
    with pytest.raises(DomainError):
        enumerate_fes(-1, 3, "1/2")
