# ABOUTME: Mathematical and presentation constants shared across domains.

import math

APP_NAME = "graph-entropy"

# ---------------------------------------------------------------------------
# Mathematical constants
# ---------------------------------------------------------------------------
EULER_GAMMA = 0.57721566490153286061
SQRT_PI = math.sqrt(math.pi)
LN_2 = math.log(2.0)
LN_PI = math.log(math.pi)

# l -> infinity limits
SMOOTH_LIMIT_AREA = SQRT_PI / (2.0 * math.pi * LN_2)
SMOOTH_LIMIT_TILDE = SQRT_PI / (2.0 * LN_2)
SMOOTH_LIMIT_ZETA0 = -0.5
SMOOTH_LIMIT_SPECTRAL_DIMENSION = 1.0

# ---------------------------------------------------------------------------
# Graph parameters
# ---------------------------------------------------------------------------
MIN_DECIMATION = 3
MAX_SCAN_DECIMATION = 10**8
WALK_DIMENSION = 2.0
TOTAL_LENGTH = 1.0

# ---------------------------------------------------------------------------
# Numerical guards
# ---------------------------------------------------------------------------
POLE_GUARD = 1e-12
ZETA_POLE_GUARD = 1e-10
NEAR_ONE_SWITCH = 0.1
NEAR_ONE_RADIUS = 0.25
REPLICA_STEP = 1e-4

# ---------------------------------------------------------------------------
# Presets file (figure ranges)
# ---------------------------------------------------------------------------
PRESETS_FILE = "presets.yaml"
