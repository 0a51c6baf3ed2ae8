import os
from dotenv import load_dotenv

from dfs.errors import ConfigError

# Load variables from .env
load_dotenv()


def _env_int(name: str, default: str) -> int:
    raw = os.getenv(name, default)
    try:
        return int(raw, 0)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None


def _env_float(name: str, default: str) -> float:
    raw = os.getenv(name, default)
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"{name} must be a number, got {raw!r}") from None


DENSE_LIMIT = _env_int("DFS_DENSE_LIMIT", "12")
CLOSURE_CAP = _env_int("DFS_CLOSURE_CAP", str(2 ** 20))

NULL_TOL = _env_float("DFS_NULL_TOL", "1e-8")
RESIDUAL_TOL = _env_float("DFS_RESIDUAL_TOL", "1e-9")

DEFAULT_TRIALS = _env_int("DFS_DEFAULT_TRIALS", "32")
DEFAULT_SEED = _env_int("DFS_DEFAULT_SEED", "0")

# phased-permutation tables kept between dense builds; one entry is 24 * 2**K bytes
ACTION_CACHE_SIZE = _env_int("DFS_ACTION_CACHE_SIZE", "512")

LOG_LEVEL = os.getenv("DFS_LOG_LEVEL", "INFO").upper()

SCHEMA_VERSION = 1
