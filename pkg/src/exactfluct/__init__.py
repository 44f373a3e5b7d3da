"""Exact microcanonical ground-state number fluctuations of trapped Bose, Fermi
and fractional-exclusion gases, computed through integer-partition tables."""

__version__ = "0.1.0"

from .errors import (
    BudgetExceededError,
    ConsistencyError,
    DomainError,
    TableRangeError,
    UnsupportedStatisticsError,
)
from .partitions import (
    BoundedPartitionTable,
    PartitionTable,
    bounded_multiplicity_direct,
    canonical_multiplicity,
    hole_partition_function,
    partition_table,
)
from .microcanonical import (
    FluctuationSeries,
    GroundStateStats,
    MultiplicityDistribution,
    bose_multiplicity,
    distribution,
    fermi_multiplicity,
    fluctuation_series,
    ground_state_stats,
    hole_min_quanta,
    multiplicity_columns,
    particle_min_quanta,
)
from .fes import (
    QuasiparticleState,
    Statistics,
    classification_breakpoints,
    discrete_g_grid,
    enumerate_fes,
    fes_ground_state_energy,
    fes_multiplicity_near_bose,
    fes_multiplicity_near_fermi,
    plateau_representative,
)
from .ensembles import ThermalPoint, ce_fluctuation_fes, ce_stats_at, invert_mean_excitation
from .oracle import PartitionShape, durfee_side, enumerate_partitions, oracle_multiplicities


def clear_caches():
    """Forget every memoized table (mainly for cold-start timing)."""
    from . import ensembles, microcanonical, partitions

    partitions.clear_tables()
    microcanonical._fermi_columns.cache_clear()
    with ensembles._shell_lock:
        ensembles._shells.clear()
