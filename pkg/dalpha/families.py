"""Named graph families and closed forms for their D_alpha spectral radii.

Labeling conventions: the star center is vertex 0, ``star_plus`` joins
leaves 1 and 2, and multipartite parts take contiguous labels in the order
given (Turán parts in decreasing size).
"""
import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import optimize

from .consts import _ROOT_XTOL
from .errors import AlphaOutOfRange
from .errors import BadParams
from .errors import ClosedFormMismatch
from .errors import EmptyPart
from .errors import NoRootInInterval
from .errors import TooSmall
from .graph import Graph

logger = logging.getLogger(__name__)

# Slack for alpha == 1 - 1/r computed in floating point.
_HYPOTHESIS_SLACK = 1e-12


def path(n: int) -> Graph:
    if n < 1:
        raise TooSmall(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise TooSmall(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise TooSmall(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n)]
    )


def star(n: int) -> Graph:
    """``S_n``: vertex 0 joined to every other vertex."""
    if n < 2:
        raise TooSmall(f"star needs n >= 2, got {n}")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def star_plus(n: int) -> Graph:
    """``S_n^+``: the star with leaves 1 and 2 joined."""
    if n < 3:
        raise TooSmall(f"star_plus needs n >= 3, got {n}")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)] + [(1, 2)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(size < 1 for size in parts):
        raise EmptyPart(f"every part needs a vertex: {list(parts)}")
    labels = []
    for index, size in enumerate(parts):
        labels.extend([index] * size)
    n = len(labels)
    return Graph.from_edges(
        n,
        [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if labels[u] != labels[v]
        ],
    )


@dataclass(frozen=True)
class TuranParams:
    """``n = r*d + s`` with ``0 <= s < r``."""

    n: int
    r: int
    d: int
    s: int

    @classmethod
    def of(cls, n: int, r: int) -> "TuranParams":
        if not 2 <= r <= n:
            raise BadParams(f"Turán graph needs 2 <= r <= n, got n={n}, r={r}")
        d, s = divmod(n, r)
        return cls(n=n, r=r, d=d, s=s)

    @property
    def parts(self):
        return [self.d + 1] * self.s + [self.d] * (self.r - self.s)


def turan(n: int, r: int) -> Graph:
    return complete_multipartite(TuranParams.of(n, r).parts)


def turan_hypothesis_holds(r: int, alpha: float) -> bool:
    """The minimality of ``T_{n,r}`` is proven for ``alpha <= 1 - 1/r``."""
    return alpha <= 1.0 - 1.0 / r + _HYPOTHESIS_SLACK


def _check_alpha(alpha: float, upper_open: bool = False) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0 or (upper_open and alpha == 1.0):
        bracket = ")" if upper_open else "]"
        raise AlphaOutOfRange(f"alpha={alpha} outside [0, 1{bracket}")
    return alpha


def _turan_checked(n: int, r: int, alpha: float) -> TuranParams:
    if not 3 <= r <= n - 1:
        raise BadParams(f"closed form needs 3 <= r <= n-1, got n={n}, r={r}")
    if not turan_hypothesis_holds(r, alpha):
        logger.warning(
            f"alpha={alpha} exceeds 1 - 1/r = {1 - 1 / r:.6f}; "
            "value computed outside the proven range"
        )
    return TuranParams.of(n, r)


def _turan_radical(t: TuranParams, alpha: float) -> float:
    return math.sqrt(
        (t.n * (1 - alpha) - 1) ** 2 + 4 * t.s * (1 - alpha) * (t.d + 1)
    )


def rho_turan_closed(n: int, r: int, alpha: float) -> float:
    alpha = _check_alpha(alpha)
    t = _turan_checked(n, r, alpha)
    return (n + 2 * t.d + alpha * n - 3 + _turan_radical(t, alpha)) / 2


def rho_turan_lower_root(n: int, r: int, alpha: float) -> float:
    alpha = _check_alpha(alpha)
    t = _turan_checked(n, r, alpha)
    return (n + 2 * t.d + alpha * n - 3 - _turan_radical(t, alpha)) / 2


def turan_secular_residual(n: int, r: int, alpha: float, lam: float) -> float:
    """Left minus right side of the part-sum equation.

    Its largest root is ``rho_turan_closed``.
    """
    alpha = _check_alpha(alpha, upper_open=True)
    t = TuranParams.of(n, r)
    shifted = lam - alpha * n - t.d
    return (
        t.s * (t.d + 1) / (shifted + 1)
        + (t.r - t.s) * t.d / (shifted + 2)
        - 1 / (1 - alpha)
    )


def rho_distance_turan(n: int, r: int) -> float:
    """Distance spectral radius of ``T_{n,r}``."""
    t = TuranParams.of(n, r)
    return (n + 2 * t.d - 3 + math.sqrt((n - 1) ** 2 + 4 * t.s * (t.d + 1))) / 2


def rho_dq_turan(n: int, r: int) -> float:
    """Distance signless Laplacian spectral radius of ``T_{n,r}``."""
    t = TuranParams.of(n, r)
    return (
        3 * n + 4 * t.d - 6 + math.sqrt((n - 2) ** 2 + 8 * t.s * (t.d + 1))
    ) / 2


def quotient_matrix_multipartite(parts: Sequence[int], alpha: float) -> np.ndarray:
    """Quotient of ``D_alpha(K_{n_1..n_r})`` over the part partition."""
    alpha = _check_alpha(alpha)
    if not parts or any(size < 1 for size in parts):
        raise EmptyPart(f"every part needs a vertex: {list(parts)}")
    sizes = np.array(parts, dtype=np.float64)
    n = sizes.sum()
    quotient = np.tile((1 - alpha) * sizes, (len(parts), 1))
    # Inside a part every other vertex sits at distance 2.
    own = alpha * (n + sizes - 2) + (1 - alpha) * 2 * (sizes - 1)
    np.fill_diagonal(quotient, own)
    return quotient


def rho_star_closed(n: int, alpha: float) -> float:
    if n < 4:
        raise BadParams(f"star closed form needs n >= 4, got {n}")
    alpha = _check_alpha(alpha, upper_open=True)
    return (
        alpha * n
        + 2 * (n - 2)
        + math.sqrt(n ** 2 * (2 - alpha) ** 2 + 4 * (n - 1) * (2 * alpha - 3))
    ) / 2


def star_quadratic(n: int, alpha: float, rho: float) -> float:
    return rho ** 2 - (alpha * n + 2 * n - 4) * rho + (n - 1) * (
        2 * alpha * n - 2 * alpha - 1
    )


def rho_distance_star(n: int) -> float:
    """Distance spectral radius of ``S_n``."""
    return n - 2 + math.sqrt((n - 2) ** 2 + (n - 1))


def dq_tree_bound(n: int) -> float:
    """Every tree other than ``S_n`` has a larger ``D^Q`` spectral radius."""
    return (5 * n - 8 + math.sqrt(9 * (n - 2) ** 2 + 4 * (n - 1))) / 2


def quotient_matrix_star_plus(n: int, alpha: float) -> np.ndarray:
    """Quotient of ``D_alpha(S_n^+)`` over {center}, {cycle leaves}, {pendants}.

    Not symmetric; nonnegative with the same spectral radius as the full
    matrix since the partition is equitable.
    """
    if n < 4:
        raise BadParams(f"star_plus quotient needs n >= 4, got {n}")
    a = _check_alpha(alpha)
    b = 1 - a
    return np.array(
        [
            [a * (n - 1), 2 * b, (n - 3) * b],
            [b, a * (2 * n - 4) + b, 2 * (n - 3) * b],
            [b, 4 * b, a * (2 * n - 3) + 2 * (n - 4) * b],
        ]
    )


def star_plus_cubic(n: int, alpha: float, rho: float) -> float:
    """The characteristic cubic of the ``S_n^+`` quotient as printed."""
    a = alpha
    return (
        rho ** 3
        - (3 * a * n + 2 * n - a - 7) * rho ** 2
        + (
            2 * a ** 2 * n ** 2
            + 6 * a * n ** 2
            - a ** 2 * n
            - 17 * a * n
            + 2 * a
            - 7 * n
            + 17
        )
        * rho
        - (
            4 * a ** 2 * n ** 3
            - 10 * a ** 2 * n ** 2
            - 8 * a * n ** 2
            + 4 * a ** 2 * n
            + 19 * a * n
            - 7 * a
            + 3 * n
            - 5
        )
    )


def rho_star_plus(n: int, alpha: float) -> float:
    """Spectral radius of ``D_alpha(S_n^+)`` from its 3x3 quotient."""
    quotient = quotient_matrix_star_plus(n, alpha)
    rho = float(np.max(np.linalg.eigvals(quotient).real))
    residual = star_plus_cubic(n, alpha, rho)
    if abs(residual) > 1e-6 * n ** 3:
        raise ClosedFormMismatch(
            f"cubic residual {residual:.3e} at n={n}, alpha={alpha}"
        )
    return rho


def table_threshold(n: int) -> float:
    """``2n - 2 - 8/n``: the Wiener lower bound for unicyclic graphs != S_n^+."""
    return 2 * n - 2 - 8 / n


def alpha_zero_root(n: int) -> float:
    """The ``alpha`` in (1/2, 1) where ``rho(S_n^+)`` reaches ``2n - 2 - 8/n``.

    ``rho_{D_alpha}(S_n^+)`` is increasing in alpha, so bisection applies.
    """
    target = table_threshold(n)

    def gap(alpha: float) -> float:
        return rho_star_plus(n, alpha) - target

    low, high = gap(0.5), gap(1.0)
    if not (low < 0.0 < high):
        raise NoRootInInterval(
            f"n={n}: rho - target is {low:.6g} at 1/2 and {high:.6g} at 1"
        )
    root = optimize.bisect(gap, 0.5, 1.0, xtol=_ROOT_XTOL)
    logger.debug(f"alpha root for n={n}: {root:.10f}")
    return float(root)


def family_from_name(text: str) -> Graph:
    """Build a graph from ``name:n`` (``turan:n:r``, ``multipartite:a,b,c``)."""
    name, _, rest = text.strip().partition(":")
    args = rest.split(":") if rest else []
    try:
        if name == "multipartite" and len(args) == 1:
            return complete_multipartite([int(x) for x in args[0].split(",")])
        numbers = [int(x) for x in args]
    except ValueError:
        raise BadParams(f"bad family arguments in {text!r}")
    builders = {
        "star": star,
        "star_plus": star_plus,
        "cycle": cycle,
        "path": path,
        "complete": complete,
    }
    if name in builders and len(numbers) == 1:
        return builders[name](numbers[0])
    if name == "turan" and len(numbers) == 2:
        return turan(*numbers)
    raise BadParams(f"unknown family {text!r}")
