"""Bracketing search over sorted lists.

The searcher maintains a bracket a < b with values[a] <= z <= values[b] and
shrinks it by probing one interior index per iteration until b - a == 1 (or
an exact hit collapses the bracket).  Three probe rules are provided:

* binary      -- probe the midpoint (floor rounding), worst case ceil(log2 n);
* interpolation -- probe the linear interpolation between the bracket ends,
  fast on near-uniform keys but worst case n;
* itp         -- interpolate, truncate the estimate toward the midpoint, then
  project it into a minmax-safe interval around the midpoint.  Keeps the
  binary worst-case bound while probing (almost) like interpolation.

Endpoint values are cached in the bracket, so a search is charged one query
per interior probe only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

__all__ = [
    "Strategy",
    "Strict",
    "Relaxed",
    "Local",
    "SortedList",
    "Bracket",
    "SearchConfig",
    "SearchOutcome",
    "minmax_bound",
    "midpoint",
    "interpolation_point",
    "truncate",
    "minmax_radius",
    "project",
    "round_toward_midpoint",
    "bracket_update",
    "probe_index",
    "make_probe_fn",
    "search",
]

DEFAULT_KAPPA1 = 0.01
DEFAULT_KAPPA2 = 0.83
DEFAULT_NMAX_EXTRA = 0.99
DEFAULT_CAP = 1000


class Strategy(Enum):
    BINARY = "binary"
    INTERPOLATION = "interpolation"
    ITP = "itp"


@dataclass(frozen=True)
class Strict:
    """Minmax radius anchored to ceil(log2 n) of the searched list."""


@dataclass(frozen=True)
class Relaxed:
    """Minmax radius anchored to an iteration budget n_max >= ceil(log2 n).

    If ``n_max`` is None it is resolved per list as ceil(log2 n) + ``extra``.
    A non-integer budget is allowed; the worst case is then ceil(n_max).
    """

    n_max: float | None = None
    extra: float = DEFAULT_NMAX_EXTRA

    def __post_init__(self) -> None:
        if self.n_max is None and self.extra < 0:
            raise ValueError(f"extra must be >= 0, got {self.extra}")

    def resolve(self, n: int) -> float:
        bound = minmax_bound(n)
        n_max = bound + self.extra if self.n_max is None else self.n_max
        if n_max < bound:
            raise ValueError(f"n_max={n_max} below minmax bound {bound} for n={n}")
        return n_max


@dataclass(frozen=True)
class Local:
    """Minmax radius anchored to ceil(log2 delta) of the current bracket."""


Variant = Strict | Relaxed | Local


class SortedList:
    """A non-decreasing key vector of length n + 1, indexed 0..n."""

    __slots__ = ("values", "n")

    def __init__(self, values, validate: bool = True):
        arr = np.asarray(values, dtype=np.float64)
        if arr.ndim != 1:
            raise ValueError("values must be one-dimensional")
        if arr.size < 2:
            raise ValueError(f"need at least 2 values, got {arr.size}")
        if validate and np.any(arr[1:] < arr[:-1]):
            raise ValueError("values must be non-decreasing")
        self.values = arr
        self.n = arr.size - 1

    def __len__(self) -> int:
        return self.values.size

    def __getitem__(self, k: int) -> float:
        return float(self.values[k])

    def __repr__(self) -> str:
        return f"SortedList(n={self.n}, range=[{self.values[0]}, {self.values[-1]}])"


@dataclass
class Bracket:
    """Live state of one search: indices a < b with cached end values.

    ``j`` counts completed iterations.  After an exact hit the bracket is
    (k, k+1) and ``vb`` keeps the previous cached value; the state is
    terminal so it is never read again.
    """

    a: int
    b: int
    va: float
    vb: float
    j: int = 0

    @property
    def delta(self) -> int:
        return self.b - self.a


@dataclass(frozen=True)
class SearchConfig:
    """Probe-rule selection plus the itp tuning constants."""

    strategy: Strategy = Strategy.ITP
    kappa1: float = DEFAULT_KAPPA1
    kappa2: float = DEFAULT_KAPPA2
    variant: Variant = field(default_factory=Relaxed)
    cap: int = DEFAULT_CAP

    def __post_init__(self) -> None:
        if self.kappa1 <= 0:
            raise ValueError(f"kappa1 must be positive, got {self.kappa1}")
        if not 0.5 < self.kappa2 < 1.0:
            raise ValueError(f"kappa2 must be in (1/2, 1), got {self.kappa2}")
        if self.cap < 1:
            raise ValueError(f"cap must be a positive integer, got {self.cap}")

    @classmethod
    def binary(cls, cap: int = DEFAULT_CAP) -> "SearchConfig":
        return cls(strategy=Strategy.BINARY, cap=cap)

    @classmethod
    def interpolation(cls, cap: int = DEFAULT_CAP) -> "SearchConfig":
        return cls(strategy=Strategy.INTERPOLATION, cap=cap)

    @classmethod
    def itp(
        cls,
        variant: Variant | None = None,
        kappa1: float = DEFAULT_KAPPA1,
        kappa2: float = DEFAULT_KAPPA2,
        cap: int = DEFAULT_CAP,
    ) -> "SearchConfig":
        return cls(
            strategy=Strategy.ITP,
            kappa1=kappa1,
            kappa2=kappa2,
            variant=Relaxed() if variant is None else variant,
            cap=cap,
        )


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one search: located cell, probe count and trace."""

    k_star: int
    queries: int
    trace: tuple[int, ...]
    capped: bool = False


def minmax_bound(n: int) -> int:
    """Worst-case query count of any minmax-optimal rule: ceil(log2 n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return (n - 1).bit_length()


def midpoint(bracket: Bracket) -> float:
    """Exact bracket midpoint (a + b) / 2, before any rounding."""
    return (bracket.a + bracket.b) / 2


def interpolation_point(bracket: Bracket, z: float) -> float:
    """Linear interpolation of z between (a, va) and (b, vb).

    Falls back to the midpoint when va == vb (flat bracket, e.g. duplicate
    keys), where the interpolation line is undefined.  The result is clamped
    into [a, b] to shed float round-off.
    """
    a, b, va, vb = bracket.a, bracket.b, bracket.va, bracket.vb
    if va == vb:
        return midpoint(bracket)
    x = (b * (va - z) - a * (vb - z)) / (va - vb)
    return min(max(x, a), b)


def truncate(
    x_f: float, x_half: float, delta: int, kappa1: float, kappa2: float
) -> tuple[float, int]:
    """Nudge the interpolation point toward the midpoint by kappa1*delta**kappa2.

    Returns ``(x_t, sigma)`` where sigma is the direction sign from x_f toward
    x_half (0 when they coincide).  If the nudge would overshoot the midpoint,
    x_t is the midpoint itself, so |x_t - x_half| <= |x_f - x_half| always.
    """
    gap = x_half - x_f
    sigma = (gap > 0) - (gap < 0)
    step = kappa1 * delta**kappa2
    if step <= abs(gap):
        return x_f + sigma * step, sigma
    return x_half, sigma


def minmax_radius(j: int, delta: int, variant: Variant, n_ref: float | None = None) -> float:
    """Half-width of the probe interval around the midpoint at iteration j.

    Strict and Relaxed budget 2**(n_ref - j - 1) cells per side and subtract
    the half-bracket; negative values (exhausted budget, float drift) clamp
    to 0, which forces a plain midpoint step.  Local re-anchors to the
    current bracket width and is non-negative by construction.
    """
    if isinstance(variant, Local):
        exp = (delta - 1).bit_length() - 1
        return 2.0**exp - delta / 2
    if n_ref is None:
        raise ValueError("strict/relaxed radius requires n_ref")
    r = 2.0 ** (n_ref - j - 1) - delta / 2
    return r if r > 0 else 0.0


def project(x_t: float, x_half: float, r: float, sigma: int) -> float:
    """Clamp x_t into [x_half - r, x_half + r], pulling back toward x_half."""
    if abs(x_t - x_half) <= r:
        return x_t
    return x_half - sigma * r


def round_toward_midpoint(x: float, x_half: float, a: int, b: int) -> int:
    """Nearest integer to x on its midpoint side, clamped into (a, b).

    Non-integer x rounds up when left of the midpoint and down when right of
    it; a non-integer x sitting exactly on the midpoint rounds down (fixed
    tie rule).  Callers guarantee b - a >= 2, so the interior is non-empty.
    """
    f = math.floor(x)
    if f == x:
        k = f
    elif x < x_half:
        k = f + 1
    else:
        k = f
    if k <= a:
        return a + 1
    if k >= b:
        return b - 1
    return k


def bracket_update(bracket: Bracket, k: int, v_k: float, z: float) -> Bracket:
    """Shrink the bracket with the probed pair (k, v_k); exact hits collapse
    it to (k, k+1)."""
    if v_k > z:
        return Bracket(bracket.a, k, bracket.va, v_k, bracket.j + 1)
    if v_k < z:
        return Bracket(k, bracket.b, v_k, bracket.vb, bracket.j + 1)
    return Bracket(k, k + 1, v_k, bracket.vb, bracket.j + 1)


def _resolve_n_ref(config: SearchConfig, n: int) -> float | None:
    if config.strategy is not Strategy.ITP:
        return None
    variant = config.variant
    if isinstance(variant, Strict):
        return float(minmax_bound(n))
    if isinstance(variant, Relaxed):
        return variant.resolve(n)
    return None  # Local


def probe_index(bracket: Bracket, z: float, config: SearchConfig, n_ref: float | None) -> int:
    """Next index to evaluate, per the configured probe rule.

    ``n_ref`` is the resolved radius anchor for the itp strategy (see
    ``_resolve_n_ref``); binary and interpolation ignore it.
    """
    x_half = midpoint(bracket)
    if config.strategy is Strategy.BINARY:
        return round_toward_midpoint(x_half, x_half, bracket.a, bracket.b)
    x_f = interpolation_point(bracket, z)
    if config.strategy is Strategy.INTERPOLATION:
        return round_toward_midpoint(x_f, x_half, bracket.a, bracket.b)
    x_t, sigma = truncate(x_f, x_half, bracket.delta, config.kappa1, config.kappa2)
    r = minmax_radius(bracket.j, bracket.delta, config.variant, n_ref)
    x_itp = project(x_t, x_half, r, sigma)
    return round_toward_midpoint(x_itp, x_half, bracket.a, bracket.b)


def make_probe_fn(config: SearchConfig, n: int):
    """Bind a probe rule to a problem size: (a, b, j, va, vb, z) -> index.

    Used by the exhaustive oracles, which drive probe choices over synthetic
    brackets instead of a real list.
    """
    n_ref = _resolve_n_ref(config, n)

    def probe(a: int, b: int, j: int, va: float, vb: float, z: float) -> int:
        return probe_index(Bracket(a, b, va, vb, j), z, config, n_ref)

    return probe


def search(lst: SortedList, z: float, config: SearchConfig) -> SearchOutcome:
    """Locate k with values[k] <= z <= values[k+1] and count the probes.

    Requires values[0] <= z <= values[n].  On distinct keys the result k*
    satisfies values[k*] <= z < values[k*+1], except z == values[n] which
    settles on n - 1 (the largest cell).  z == values[0] is answered from
    the cached endpoint with zero queries.  If the probe budget ``config.cap``
    runs out first, the outcome carries the current lower index and
    ``capped=True``.
    """
    v = lst.values
    n = lst.n
    v0 = float(v[0])
    vn = float(v[n])
    if not v0 <= z <= vn:
        raise ValueError(f"target {z} outside key range [{v0}, {vn}]")
    if z == v0:
        return SearchOutcome(k_star=0, queries=0, trace=())
    n_ref = _resolve_n_ref(config, n)
    bracket = Bracket(0, n, v0, vn)
    trace: list[int] = []
    capped = False
    while bracket.delta > 1:
        if len(trace) >= config.cap:
            capped = True
            break
        k = probe_index(bracket, z, config, n_ref)
        v_k = float(v[k])
        trace.append(k)
        bracket = bracket_update(bracket, k, v_k, z)
    return SearchOutcome(
        k_star=bracket.a, queries=len(trace), trace=tuple(trace), capped=capped
    )
