"""
Configuration settings for the CACD toolkit
"""

import os

# Desk-scale bounds for the exhaustive backends
DESK_BOUND = 10
CANONICAL_FORM_MAX_N = 8
TOURNAMENT_MAX_N = 7
ORIENTED_PROPER_MAX_N = 9
GRID_ORACLE_MAX_N = 4
ROUND_ORACLE_MAX_N = 8
LABELED_SWEEP_MAX_N = 4
ORIENTED_SWEEP_MAX_N = 6
COMPLEMENT_CYCLE_SWEEP_SIZES = (6, 7, 8)

# Seeded random sweeps (additive to the exhaustive ones)
RANDOM_SEED = 20240229
RANDOM_ROUNDTRIP_COUNT = 10000
RANDOM_ROUNDTRIP_MAX_N = 10
RANDOM_PROPER_COUNT = 1000
RANDOM_PROPER_MAX_N = 7
# draws allowed per requested sample when skipped draws are redrawn
RANDOM_DRAW_FACTOR = 20

# Numeric output
DECIMAL_PLACES = 4
GOLDEN_TOLERANCE = 0.01

# Output locations
RESULTS_DIR = os.environ.get("CACD_RESULTS_DIR", "results")
CATALOG_DIR = os.path.join(RESULTS_DIR, "catalog")

# JSON schema tags
VERDICT_SCHEMA = "cacd-verdict/1"
REPORT_SCHEMA = "cacd-sweep-report/1"
CATALOG_SCHEMA = "cacd-catalog/1"

# Parallel sweeps
WORKERS_ENV_VAR = "CACD_WORKERS"
SWEEP_CHUNK_SIZE = 4096

# Logging
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LOG_DATE_FORMAT = "%H:%M:%S"

# Arc diagram geometry (SVG user units)
SVG_SIZE = 480
SVG_CIRCLE_RADIUS = 140
SVG_ARC_GAP = 12
SVG_POINT_RADIUS = 4
SVG_FONT_SIZE = 11

# Arc colors, cycled by arc rank
ARC_COLORS = [
    'royalblue',
    'firebrick',
    'forestgreen',
    'orange',
    'orchid',
    'burlywood',
    'teal',
    'slategray'
]
