"""Coefficient sequences and scalar series diagnostics.

A :class:`WeightSequence` is a lazily evaluated real sequence: ``value(k)``
for ``k >= start_index`` and 0 below.  The built-in kinds cover every
coefficient family used by the operator constructions:

* ``pisier_flat``      — 1 at the lacunary indices 2^j - 1, else 0;
* ``pisier_geometric`` — 2^-j at index 2^j - 1 (equivalently 1/(k+1) on
  the lacunary set), else 0;
* ``power(s)``         — (k+1)^-s;
* ``geometric(r)``     — r^k for 0 < r < 1;
* ``log_family(eps)``  — 1/(log k)^(1+eps), defined for k >= 2;
* ``loglog_family(eps)`` — 1/((log k)(log log k)^(1+eps)), defined for
  k >= 3 so that the iterated logarithm is positive;
* ``custom(values)``   — an explicit finite list, 0 beyond its end.

``shifted(d)`` re-indexes a family (value at k becomes the formula at
k + d).  That is how the series view (a_n)_{n>=1} of a multiplier matrix
is aligned with its entries: e.g. ``power(1).shifted(-1)`` is the harmonic
sequence a_n = 1/n, and ``log_family(eps).shifted(1)`` is the series whose
quotient matrix [(j-i) a_{i+j} / (i+j+1)] has the log-damped entries
(j-i) / ((i+j+1) log^(1+eps)(i+j+1)).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import InvalidLengthError, ValidationError
from .summation import exact_sum

_BASE_START = {
    "pisier_flat": 0,
    "pisier_geometric": 0,
    "power": 0,
    "geometric": 0,
    "log_family": 2,
    "loglog_family": 3,
    "custom": 0,
}


@dataclass(frozen=True)
class WeightSequence:
    kind: str
    param: float | None = None
    data: tuple[float, ...] | None = None
    shift: int = 0
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in _BASE_START:
            raise ValidationError(f"unknown sequence kind {self.kind!r}")
        if self.kind == "geometric" and not (0.0 < float(self.param) < 1.0):
            raise ValidationError("geometric ratio must lie in (0, 1)")
        if self.kind in ("log_family", "loglog_family") and not float(self.param) > 0.0:
            raise ValidationError("damping exponent must be > 0")
        if self.kind == "custom" and (self.data is None or len(self.data) == 0):
            raise ValidationError("custom sequence needs a non-empty value list")

    # ---- constructors -------------------------------------------------

    @classmethod
    def pisier_flat(cls) -> "WeightSequence":
        return cls("pisier_flat")

    @classmethod
    def pisier_geometric(cls) -> "WeightSequence":
        return cls("pisier_geometric")

    @classmethod
    def power(cls, s: float) -> "WeightSequence":
        return cls("power", param=float(s))

    @classmethod
    def geometric(cls, r: float) -> "WeightSequence":
        return cls("geometric", param=float(r))

    @classmethod
    def log_family(cls, eps: float) -> "WeightSequence":
        return cls("log_family", param=float(eps))

    @classmethod
    def loglog_family(cls, eps: float) -> "WeightSequence":
        return cls("loglog_family", param=float(eps))

    @classmethod
    def custom(cls, values) -> "WeightSequence":
        return cls("custom", data=tuple(float(v) for v in values))

    @classmethod
    def harmonic(cls) -> "WeightSequence":
        """a_n = 1/n for n >= 1."""
        return replace(cls.power(1.0).shifted(-1), name="harmonic")

    @classmethod
    def constant(cls) -> "WeightSequence":
        """a_k = 1 for every k (the divergence test sequence)."""
        return replace(cls.power(0.0), name="constant")

    # ---- evaluation ---------------------------------------------------

    @property
    def start_index(self) -> int:
        return max(0, _BASE_START[self.kind] - self.shift)

    def shifted(self, delta: int) -> "WeightSequence":
        """Sequence whose value at k is this formula evaluated at k + delta."""
        return replace(self, shift=self.shift + int(delta), name=None)

    def values_at(self, indices) -> np.ndarray:
        """Vectorized evaluation; indices below start_index give 0."""
        ks = np.asarray(indices, dtype=np.int64)
        scalar = ks.ndim == 0
        ks = np.atleast_1d(ks)
        out = np.zeros(ks.shape, dtype=float)
        mask = ks >= self.start_index
        if mask.any():
            k2 = ks[mask] + self.shift  # argument fed to the base formula
            out[mask] = self._formula(k2)
        return out[0] if scalar else out

    def value(self, k: int) -> float:
        return float(self.values_at(k))

    def _formula(self, k2: np.ndarray) -> np.ndarray:
        kind = self.kind
        if kind == "pisier_flat":
            p = k2 + 1
            return np.where((p & (p - 1)) == 0, 1.0, 0.0)
        if kind == "pisier_geometric":
            p = k2 + 1
            return np.where((p & (p - 1)) == 0, 1.0 / p, 0.0)
        if kind == "power":
            return (k2 + 1.0) ** (-self.param)
        if kind == "geometric":
            return self.param ** k2.astype(float)
        if kind == "log_family":
            return 1.0 / np.log(k2) ** (1.0 + self.param)
        if kind == "loglog_family":
            lg = np.log(k2)
            return 1.0 / (lg * np.log(lg) ** (1.0 + self.param))
        # custom
        arr = np.asarray(self.data, dtype=float)
        out = np.zeros(k2.shape, dtype=float)
        ok = (k2 >= 0) & (k2 < len(arr))
        out[ok] = arr[k2[ok]]
        return out

    def describe(self) -> str:
        if self.name:
            return self.name
        base = self.kind.replace("_family", "").replace("_", "-")
        if self.kind == "custom":
            label = f"custom[{len(self.data)}]"
        elif self.param is not None and self.kind not in ("pisier_flat", "pisier_geometric"):
            label = f"{base}:{self.param:g}"
        else:
            label = base
        if self.shift:
            label += f"{self.shift:+d}"
        return label


def gen_weights(seq: WeightSequence, count: int) -> np.ndarray:
    """Values at indices start_index .. count-1 (empty if count is below start)."""
    if count < 1:
        raise ValidationError("count must be >= 1")
    lo = seq.start_index
    if count <= lo:
        return np.zeros(0, dtype=float)
    return seq.values_at(np.arange(lo, count))


def tail_weight_sup(seq: WeightSequence, count: int) -> float:
    """sup over 0 <= k < count of (k+1)^2 * sum_{k <= i < count} |a_i|^2.

    The quantity that controls polynomial boundedness of the associated
    block operator; finite iff the tails decay like 1/(k+1).  Call at a
    ladder of counts to monitor growth or plateau.
    """
    if count < 1:
        raise ValidationError("count must be >= 1")
    vals = seq.values_at(np.arange(count))
    sq = np.abs(vals) ** 2
    # accumulate the suffix sums from the small (far) end for accuracy
    suffix = np.cumsum(sq[::-1])[::-1]
    k = np.arange(count, dtype=float)
    return float(np.max((k + 1.0) ** 2 * suffix))


def weighted_sum(
    seq: WeightSequence,
    count: int,
    power: float = 2.0,
    log_power: float = 0.0,
    loglog_power: float = 0.0,
) -> float:
    """Compensated partial sum of w(k) |a_k|^2 with
    w(k) = (k+1)^power * log(k+1)^log_power * loglog(k+1)^loglog_power.

    ``power=2`` is the plain square-summability functional whose value
    coincides with the squared norm of the derivative-weighted block
    Hankel operator; the log/loglog exponents give the damped variants.
    When ``loglog_power`` is used the sum starts at k = 2, the first index
    where the iterated logarithm is positive.
    """
    if count < 1:
        raise ValidationError("count must be >= 1")
    lo = seq.start_index
    if loglog_power != 0.0:
        lo = max(lo, 2)
    if count <= lo:
        return 0.0
    ks = np.arange(lo, count, dtype=float)
    w = (ks + 1.0) ** power
    if log_power != 0.0:
        w = w * np.log(ks + 1.0) ** log_power
    if loglog_power != 0.0:
        w = w * np.log(np.log(ks + 1.0)) ** loglog_power
    vals = seq.values_at(np.arange(lo, count))
    return exact_sum(w * np.abs(vals) ** 2)


def diff1(a) -> np.ndarray:
    """First forward difference b_n = a_n - a_{n+1} (length len(a) - 1)."""
    arr = np.asarray(a, dtype=float)
    if arr.ndim != 1 or len(arr) < 2:
        raise InvalidLengthError("diff1 needs a 1-D sequence of length >= 2")
    return arr[:-1] - arr[1:]


def diff2(a) -> np.ndarray:
    """Second difference c_n = a_n - 2 a_{n+1} + a_{n+2} (length len(a) - 2)."""
    arr = np.asarray(a, dtype=float)
    if arr.ndim != 1 or len(arr) < 3:
        raise InvalidLengthError("diff2 needs a 1-D sequence of length >= 3")
    return arr[:-2] - 2.0 * arr[1:-1] + arr[2:]


# ---- summability diagnostics ------------------------------------------


@dataclass(frozen=True)
class BennettReport:
    """Partial sums and per-decade increments of the three series

        sum |a_n| / n,   sum |a_n - a_{n+1}|,   sum n |a_n - 2a_{n+1} + a_{n+2}|

    for n from ``n_start`` to ``terms``.  ``decades`` lists the windows
    (10^(d-1), 10^d] that were (at least partly) covered; a series verdict
    is True iff its increments over the last three fully covered decades
    are strictly decreasing — the empirical signature of convergence.
    """

    terms: int
    n_start: int
    sum_a_over_n: float
    sum_abs_diff1: float
    sum_weighted_diff2: float
    decades: tuple[tuple[int, int], ...]
    decade_increments: tuple[tuple[float, ...], ...]  # one tuple per series
    verdicts: tuple[bool, bool, bool]


def _decade_windows(n_start: int, terms: int):
    """Windows (10^(d-1), 10^d] clipped to [n_start, terms].

    Returns (windows, full_flags): a window is "full" when it is entirely
    inside the summation range, so its increment is comparable across runs.
    """
    windows = []
    full = []
    d = 1
    while 10 ** (d - 1) < terms:
        lo, hi = 10 ** (d - 1), 10 ** d
        a, b = max(n_start, lo + 1), min(terms, hi)
        if a <= b:
            windows.append((a, b))
            full.append(lo + 1 >= n_start and hi <= terms)
        d += 1
    return windows, full


def _strictly_decreasing_tail(increments, full_flags, need: int = 3) -> bool:
    vals = [v for v, f in zip(increments, full_flags) if f]
    if len(vals) < need:
        return False
    tail = vals[-need:]
    return all(tail[i] > tail[i + 1] for i in range(need - 1))


def bennett_sums(seq: WeightSequence, terms: int) -> BennettReport:
    """Summability diagnostics for the series view (a_n) of ``seq``.

    The series starts at n_start = max(1, start_index); the two difference
    series look ahead to a_{terms+2}, which lazy evaluation provides.
    Totals use exactly rounded summation.
    """
    if terms < 10:
        raise ValidationError("terms must be >= 10")
    n0 = max(1, seq.start_index)
    if terms <= n0:
        raise ValidationError(f"terms must exceed the series start {n0}")
    ns = np.arange(n0, terms + 1, dtype=np.int64)
    ext = seq.values_at(np.arange(n0, terms + 3))
    a = ext[: len(ns)]
    b = ext[: len(ns)] - ext[1 : len(ns) + 1]
    c = ext[: len(ns)] - 2.0 * ext[1 : len(ns) + 1] + ext[2 : len(ns) + 2]
    series = (
        np.abs(a) / ns,
        np.abs(b),
        ns * np.abs(c),
    )
    windows, full = _decade_windows(n0, terms)
    increments = []
    for s in series:
        inc = tuple(exact_sum(s[(ns >= a0) & (ns <= b0)]) for a0, b0 in windows)
        increments.append(inc)
    verdicts = tuple(
        _strictly_decreasing_tail(inc, full) for inc in increments
    )
    return BennettReport(
        terms=terms,
        n_start=n0,
        sum_a_over_n=exact_sum(series[0]),
        sum_abs_diff1=exact_sum(series[1]),
        sum_weighted_diff2=exact_sum(series[2]),
        decades=tuple(windows),
        decade_increments=tuple(increments),
        verdicts=verdicts,  # type: ignore[arg-type]
    )


def proof_chain_terms(seq: WeightSequence, terms: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-n terms of the summability bound

        n |c_n| + |b_n| + |b_{n+1}| + 2 |a_{n+2}| / (n+2)

    for n in [n_start, terms].  The cumulative sums of these terms dominate,
    antidiagonal by antidiagonal, the absolute second-difference mass of the
    quotient matrix [(j-i) a_{i+j} / (i+j+1)], which is how summability of
    the three series certifies the matrix as a bounded Schur multiplier.
    """
    if terms < 10:
        raise ValidationError("terms must be >= 10")
    n0 = max(1, seq.start_index)
    ns = np.arange(n0, terms + 1, dtype=np.int64)
    ext = seq.values_at(np.arange(n0, terms + 4))
    L = len(ns)
    a = ext
    b = ext[:-1] - ext[1:]
    c = ext[:-2] - 2.0 * ext[1:-1] + ext[2:]
    chain = (
        ns * np.abs(c[:L])
        + np.abs(b[:L])
        + np.abs(b[1 : L + 1])
        + 2.0 * np.abs(a[2 : L + 2]) / (ns + 2.0)
    )
    return ns, chain


def proof_chain_bound(seq: WeightSequence, terms: int) -> float:
    """Total of :func:`proof_chain_terms` up to ``terms``."""
    _, chain = proof_chain_terms(seq, terms)
    return exact_sum(chain)
