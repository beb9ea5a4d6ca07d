"""Planar point sets with many collinear k-tuples and no k+1 on a line."""

from .construct import (
    ConstructedSet,
    ConstructionError,
    ConstructionParams,
    ConstructionWitness,
    construct,
    construct_even,
    construct_odd,
)
from .geometry import Census, LineKey, census, census_bruteforce, collinear, line_key, verify_gap
from .lattice import BudgetExceeded, count_ball, count_shell, enumerate_shell, volume_ball
from .project import ProjectionMap, apply_map, project_generic
from .verify import bound_report, check_lemma1, check_lemma2, verify_ap, verify_construction

__version__ = "0.1.0"
