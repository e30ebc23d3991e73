"""
Application Settings
Bounds, defaults and logging setup for the pattern-avoidance toolkit
"""

import logging
import os
import sys

# ============================================
# ORACLE BOUNDS
# ============================================
# Exhaustive enumeration is O(n!); 9! = 362,880 permutations per family
DEFAULT_CEILING = 9

# Reachable only with an explicit override
HARD_CEILING = 11

# Largest n for which `avoiders` prints without --force
AVOIDERS_GUARD = 7

# Compiled matchers are checked against the backtracking matcher up to here
MATCHER_VALIDATION_N = 7

# Worker processes for oracle sweeps (1 = in-process)
DEFAULT_JOBS = 1

# ============================================
# VERIFY DEFAULTS
# ============================================
VERIFY_KMAX = 5
VERIFY_NMAX = 8
VERIFY_ORDER = 12

# Catalan reproduction runs the recurrence this far
CATALAN_RECURRENCE_NMAX = 20

# Randomized series round-trips
SERIES_PROPERTY_ORDER = 16

# ============================================
# LOGGING
# ============================================
LOG_ENV_VAR = "GPAV_LOG"
DEFAULT_LOG_LEVEL = "warn"

LOG_LEVELS = {
    "error": logging.ERROR,
    "warn": logging.WARNING,
    "info": logging.INFO,
    "debug": logging.DEBUG,
}

LOG_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"


def resolve_log_level(value=None):
    """Map a GPAV_LOG value to a logging level; unknown values fall back to the default"""
    raw = (value if value is not None else os.environ.get(LOG_ENV_VAR, DEFAULT_LOG_LEVEL))
    name = raw.strip().lower()
    if name not in LOG_LEVELS:
        return LOG_LEVELS[DEFAULT_LOG_LEVEL], False
    return LOG_LEVELS[name], True


def configure_logging(value=None):
    """
    Configure root logging once from GPAV_LOG.

    Logs go to stderr so stdout stays machine-readable.
    """
    level, known = resolve_log_level(value)
    root = logging.getLogger()
    if not root.handlers:
        logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    root.setLevel(level)
    if not known:
        logging.getLogger(__name__).warning(
            "Unknown %s value %r, using %r", LOG_ENV_VAR,
            value if value is not None else os.environ.get(LOG_ENV_VAR), DEFAULT_LOG_LEVEL,
        )
    return level
