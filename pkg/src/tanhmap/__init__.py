"""Logistic map with a linear or hyperbolic-tangent growth rate."""

from .bifurcation import (
    Classified,
    CSweepSpec,
    DiagramDataset,
    OnsetReport,
    classify_grid,
    classify_sweep,
    envelope_check,
    find_onsets,
    sweep_c,
)
from .core import (
    DIVERGENCE_LIMIT,
    DivergenceError,
    GrowthRange,
    GrowthShape,
    Linear,
    MapParams,
    Tanh,
    growth_rate,
    iterate,
    shape_value,
    step,
    step_derivative,
)
from .emit import write_diagram_csv, write_orbit_csv, write_spread_csv, write_spread_pgm
from .orbits import (
    APERIODIC,
    DIVERGENT,
    FIXED_POINT,
    AttractorClass,
    Kind,
    OrbitSample,
    OrbitSpec,
    PeriodDetectorConfig,
    detect_period,
    lyapunov,
    orbit_extremes,
    sample_orbit,
)
from .spread import (
    SPREAD_SPEC,
    SpreadGrid,
    SpreadMapResult,
    bin_index,
    spread_of_sample,
    spread_sweep,
)

__version__ = "0.1.0"
