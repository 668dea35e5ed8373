"""
Tolerances, enumeration caps and environment overrides.
"""
import os
from typing import Optional

_HERE: str = os.path.dirname(os.path.abspath(__file__))

# Worker pool.
_THREADS_ENV: Optional[str] = os.environ.get("DALPHA_THREADS", None)
_THREADS: int = int(_THREADS_ENV) if _THREADS_ENV else (os.cpu_count() or 1)
_BATCH_SIZE: int = int(os.environ.get("DALPHA_BATCH", 64))

# Eigensolver.
_TOL: float = 1e-10  # max-norm residual
_MAX_ITER: int = 200_000

# Comparisons.
_TIE_TOL: float = 1e-9
_CLOSED_FORM_TOL: float = 1e-8
_ROOT_XTOL: float = 1e-9

# Caps.
_MAX_ORDER: int = 32  # one machine word per adjacency row
_CANONICAL_MAX: int = 12
_TREE_MAX: int = 16
_UNICYCLIC_MAX: int = 12
_CONNECTED_MAX: int = 7
_CONNECTED_LARGE_MAX: int = 8
_CHROMATIC_MAX: int = 16
_EDGE_MONO_MAX: int = 12
_OPEN_PROBLEM_MAX: int = 7

# Report schema version.
_SCHEMA: int = 1
