"""
Configuration for kp3-turan.

Limits are module-level constants; per-run options travel in a Settings object
built by the CLI. Nothing is read from the environment.
"""

from typing import Optional

from pydantic import BaseModel, Field

APP_NAME = "kp3-turan"
APP_VERSION = "1.0"

# Flat bit-row storage is sized for this many vertices
MAX_ORDER = 512

# Exhaustive limits (desk scale)
MAX_ENUM_ORDER = 10          # enumerate_free_graphs / verify_turan
MAX_COUNT_ORDER = 9          # count_graphs (no pruning at all)
MAX_LEMMA_ORDER = 8          # verify_lemmas
LEMMA_SWEEP_K = (2, 3)
MAX_DECOMPOSITION_ORDER = 12  # best_leftover_decomposition
MAX_CERTIFY_ORDER = 24       # certify_extremal_family

# Search tree is split into independent chunks at this augmentation depth
DEFAULT_PARTITION_DEPTH = 2

REPORT_CACHE_DURATION_DAYS = 30


class Settings(BaseModel):
    """Per-run options, filled from CLI flags"""

    jobs: int = Field(default=1, ge=1)
    cache_dir: Optional[str] = None
    refresh: bool = False
    verbose: bool = False
    partition_depth: int = Field(default=DEFAULT_PARTITION_DEPTH, ge=0)
