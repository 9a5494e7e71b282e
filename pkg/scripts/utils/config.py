"""
Configuration

Toolkit-wide constants and the per-invocation Settings built by the CLI.
Nothing here is read from the environment.
"""

from dataclasses import dataclass

# Census enumerates every labeled complex; 6 vertices is already ~7.8 million.
MAX_CENSUS_M = 5

# Default number of series coefficients printed by `expand` / `series --expand`
DEFAULT_EXPAND_DEGREE = 10

# Bisection steps for the smallest-pole-modulus bracket (width 2^-steps)
GROWTH_BRACKET_STEPS = 12

# Singular Schur-Cohn steps resolved by multiplying in a root outside the disk,
# at most this many times per chain
SCHUR_COHN_MAX_DEFLATIONS = 64

# Space selectors accepted by `series --space`
SPACES = (
    "zk",
    "omega-zk",
    "loop-zk",
    "dj",
    "omega-dj",
    "loop-dj-bound",
    "loop-cp-power",
    "pi-zk",
)

OUTPUT_FORMATS = ("text", "json")

LOGGER_NAME = "zkscout"


@dataclass(frozen=True)
class Settings:
    allow_ghost_vertices: bool = False
    max_census_m: int = MAX_CENSUS_M
    output_format: str = "text"

    def __post_init__(self):
        if not 1 <= self.max_census_m <= MAX_CENSUS_M:
            raise ValueError(f"max_census_m must be in 1..{MAX_CENSUS_M}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"output_format must be one of {OUTPUT_FORMATS}")
