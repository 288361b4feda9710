"""Size guards for the exponential code paths.

Exhaustive enumeration visits 2^n bases and the orientation digraph stores
n * 2^(n-1) arcs, so both refuse to run past a small dimension unless the
caller raises the guard explicitly or through the HESSLCP_LIMIT environment
variable (useful for one-off experiments without touching call sites).
"""

from __future__ import annotations

import os

from .errors import TooLargeError

DEFAULT_ENUMERATION_LIMIT = 20
DEFAULT_DIGRAPH_LIMIT = 16

_ENV_VAR = "HESSLCP_LIMIT"


def _env_limit() -> int | None:
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise TooLargeError(f"{_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise TooLargeError(f"{_ENV_VAR} must be positive, got {value}")
    return value


def effective_limit(default: int, override: int | None = None) -> int:
    """Resolve a guard: explicit argument wins, then the environment, then default."""
    if override is not None:
        if override < 1:
            raise TooLargeError(f"limit must be positive, got {override}")
        return override
    env = _env_limit()
    return env if env is not None else default


def check_dimension(n: int, default: int, override: int | None, what: str):
    limit = effective_limit(default, override)
    if n > limit:
        raise TooLargeError(
            f"{what} refuses n={n} (limit {limit}; raise it via the limit "
            f"argument or {_ENV_VAR} if you really mean it)"
        )
