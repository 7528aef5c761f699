"""beamshare: spectrum sharing between multiuser MIMO energy transfer and a MIMO link.

Library plus CLI.  The core pieces are a small dense interior-point SDP
solver for fair energy beamforming, the water-filling rate optimizer for
the interfered information link, the single-beam time-sharing schedule
that trades spatial multiplexing of energy beams for time sharing, and a
deterministic Monte Carlo harness with CSV/SVG reporting.
"""

__version__ = "0.1.0"

from .channel import (
    ChannelRealization,
    ScenarioConfig,
    db_to_linear,
    dbm_to_watts,
    per_trial_seed,
    sample_channels,
    uniform_profile,
    watts_to_dbm,
)
from .numerics import (
    DEFAULT_RANK_TOL,
    EigDecomposition,
    NotPositiveDefinite,
    NumericalFailure,
    hermitian_eig,
    hermitian_part,
    logdet_hpd,
    numerical_rank,
    psd_inverse_sqrt,
    trace_product,
)
from .wet import (
    DegenerateProblem,
    EnergySolution,
    SubBlock,
    TimeShareSchedule,
    build_schedule,
    harvested_energy,
    harvested_energy_schedule,
    sdp_certificate,
    solve_p1,
)
from .wit import (
    RateCurvePoint,
    WitSolution,
    dof_estimate,
    rate,
    solve_p2,
    solve_p3,
    waterfill,
)
from .sim import (
    AggregateResult,
    ExperimentRecord,
    run_fig3,
    run_table1,
    run_trial,
)

__all__ = [
    "AggregateResult",
    "ChannelRealization",
    "DEFAULT_RANK_TOL",
    "DegenerateProblem",
    "EigDecomposition",
    "EnergySolution",
    "ExperimentRecord",
    "NotPositiveDefinite",
    "NumericalFailure",
    "RateCurvePoint",
    "ScenarioConfig",
    "SubBlock",
    "TimeShareSchedule",
    "WitSolution",
    "build_schedule",
    "db_to_linear",
    "dbm_to_watts",
    "dof_estimate",
    "harvested_energy",
    "harvested_energy_schedule",
    "hermitian_eig",
    "hermitian_part",
    "logdet_hpd",
    "numerical_rank",
    "per_trial_seed",
    "psd_inverse_sqrt",
    "rate",
    "run_fig3",
    "run_table1",
    "run_trial",
    "sample_channels",
    "sdp_certificate",
    "solve_p1",
    "solve_p2",
    "solve_p3",
    "trace_product",
    "uniform_profile",
    "waterfill",
    "watts_to_dbm",
]
