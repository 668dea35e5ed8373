"""Generalized distance matrices and their spectral radii.

``D_alpha(G) = alpha * Tr(G) + (1 - alpha) * D(G)`` for ``0 <= alpha <= 1``.
The spectral radius is computed by power iteration started from the
normalized row-sum vector; every reported value carries its max-norm
residual ``|D_alpha x - rho x|`` as a certificate.
"""
import io
import logging
from dataclasses import dataclass
from typing import Optional
from typing import Sequence
from typing import Tuple
from typing import Union

import numpy as np

from .consts import _MAX_ITER
from .consts import _TOL
from .errors import AlphaOutOfRange
from .errors import BadParams
from .errors import DimensionMismatch
from .errors import NegativeEntry
from .errors import NotConverged
from .graph import DistanceProfile

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SymMatrix:
    """Dense real symmetric matrix; the array is frozen on construction."""

    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=np.float64)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise DimensionMismatch(f"not square: {entries.shape}")
        if not np.array_equal(entries, entries.T):
            raise BadParams("matrix is not exactly symmetric")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __repr__(self):
        return f"SymMatrix<n={self.n}>"

    def __eq__(self, other):
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def row_sums(self) -> np.ndarray:
        return self.entries.sum(axis=1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        np.savetxt(buf, self.entries, delimiter=",", fmt="%.17g")
        return buf.getvalue()


@dataclass(frozen=True, eq=False)
class SpectralResult:
    rho: float
    perron: np.ndarray
    residual: float
    iterations: int
    converged: bool
    # D_1 is diagonal: rho is the max transmission and perron an indicator.
    degenerate: bool = False

    def to_dict(self) -> dict:
        return {
            "rho": self.rho,
            "perron": [float(x) for x in self.perron],
            "residual": self.residual,
            "iterations": self.iterations,
            "converged": self.converged,
            "degenerate": self.degenerate,
        }


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise AlphaOutOfRange(f"alpha={alpha} outside [0, 1]")
    return alpha


def build_distance(p: DistanceProfile) -> SymMatrix:
    return SymMatrix(np.array(p.dist, dtype=np.float64))


def build_transmission(p: DistanceProfile) -> SymMatrix:
    return SymMatrix(np.diag(np.array(p.trans, dtype=np.float64)))


def build_d_alpha(p: DistanceProfile, alpha: float) -> SymMatrix:
    alpha = _check_alpha(alpha)
    entries = (1.0 - alpha) * np.array(p.dist, dtype=np.float64)
    np.fill_diagonal(entries, alpha * np.array(p.trans, dtype=np.float64))
    return SymMatrix(entries)


def build_distance_signless_laplacian(p: DistanceProfile) -> SymMatrix:
    """``D^Q = Tr + D``."""
    return SymMatrix(build_transmission(p).entries + build_distance(p).entries)


def build_distance_laplacian(p: DistanceProfile) -> SymMatrix:
    """``D^L = Tr - D``; only used through ``D_a - D_b = (a - b) D^L``."""
    return SymMatrix(build_transmission(p).entries - build_distance(p).entries)


def quadratic_form(p: DistanceProfile, alpha: float, x: Sequence[float]) -> float:
    """``x^T D_alpha x`` summed over vertices and unordered pairs."""
    alpha = _check_alpha(alpha)
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (p.n,):
        raise DimensionMismatch(f"vector of length {x.shape} for n={p.n}")
    dist = np.array(p.dist, dtype=np.float64)
    upper = np.triu(dist, k=1)
    return float(
        alpha * np.dot(np.array(p.trans, dtype=np.float64), x * x)
        + 2.0 * (1.0 - alpha) * (x @ upper @ x)
    )


def _as_array(m: Union[SymMatrix, np.ndarray]) -> np.ndarray:
    if isinstance(m, SymMatrix):
        return m.entries
    return np.asarray(m, dtype=np.float64)


def eigen_residual(
    m: Union[SymMatrix, np.ndarray], rho: float, x: Sequence[float]
) -> float:
    a = _as_array(m)
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (a.shape[0],):
        raise DimensionMismatch(
            f"vector of length {x.shape[0]} for a {a.shape[0]}x{a.shape[0]} matrix"
        )
    return float(np.max(np.abs(a @ x - rho * x))) if x.size else 0.0


def row_sum_bounds(m: Union[SymMatrix, np.ndarray]) -> Tuple[float, float]:
    sums = _as_array(m).sum(axis=1)
    return float(sums.min()), float(sums.max())


def wiener_lower_bound(p: DistanceProfile) -> float:
    return 2.0 * p.wiener / p.n


def _degenerate(a: np.ndarray) -> SpectralResult:
    diag = np.diag(a)
    top = int(np.argmax(diag))  # first maximum, i.e. lowest index
    perron = np.zeros(a.shape[0])
    perron[top] = 1.0
    rho = float(diag[top])
    return SpectralResult(
        rho=rho,
        perron=perron,
        residual=eigen_residual(a, rho, perron),
        iterations=0,
        converged=True,
        degenerate=True,
    )


def spectral_radius(
    m: SymMatrix,
    tol: float = _TOL,
    max_iter: int = _MAX_ITER,
    start: Optional[Sequence[float]] = None,
    strict: bool = False,
) -> SpectralResult:
    """Largest eigenvalue and unit Perron vector of a nonnegative matrix.

    Diagonal input (``D_1`` or a 1x1 matrix) is answered directly and flagged
    ``degenerate``. When ``max_iter`` is exhausted the best estimate is
    returned with ``converged=False``; ``strict=True`` raises instead.
    """
    a = _as_array(m)
    if np.any(a < 0):
        raise NegativeEntry("power iteration needs a nonnegative matrix")
    if not np.any(a - np.diag(np.diag(a))):
        return _degenerate(a)

    x = a.sum(axis=1) if start is None else np.array(start, dtype=np.float64)
    norm = np.linalg.norm(x)
    if norm == 0.0:
        raise BadParams("start vector is zero")
    x = x / norm

    rho = 0.0
    residual = np.inf
    iterations = 0
    converged = False
    while iterations < max_iter:
        iterations += 1
        y = a @ x
        # Rayleigh quotient of the unit iterate.
        rho = float(x @ y)
        residual = float(np.max(np.abs(y - rho * x)))
        if residual <= tol:
            converged = True
            break
        x = y / np.linalg.norm(y)

    if x.sum() < 0:
        x = -x
    result = SpectralResult(
        rho=rho,
        perron=x,
        residual=residual,
        iterations=iterations,
        converged=converged,
    )
    if not converged:
        logger.warning(
            f"power iteration stopped after {iterations} steps, "
            f"residual {residual:.3e} > {tol:.1e}"
        )
        if strict:
            raise NotConverged(
                f"no convergence in {max_iter} iterations", result=result
            )
    else:
        logger.debug(f"rho={rho:.12f} after {iterations} iterations")
    return result


def dense_spectral_radius(m: SymMatrix) -> float:
    """Spectral radius from LAPACK's symmetric solver; used for rechecks."""
    return float(np.linalg.eigvalsh(_as_array(m))[-1])
