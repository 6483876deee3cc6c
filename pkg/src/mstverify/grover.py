"""Exact desk-scale simulation of Grover search and the unknown-count schedule.

The state is a dense real vector (Grover iterations preserve the real
span of the uniform state). For domains above the statevector cap the
schedule runs in analytic mode: measurement outcomes are sampled from the
closed-form two-level distribution, which is exactly the distribution the
dense simulation produces, without materializing the state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

BBHT_GROWTH = 6 / 5
DEFAULT_STATEVECTOR_CAP = 2**22


class KZeroError(ValueError):
    """An operation needs at least one marked element."""


def bbht_cutoff(domain_size: int) -> int:
    """Per-schedule ceiling on cumulative Grover iterations: 9 * ceil(sqrt(N))."""
    r = math.isqrt(domain_size)
    if r * r < domain_size:
        r += 1
    return 9 * r


class SearchSpace:
    """Power-of-two search domain with a marking predicate.

    logical_size L is the real problem size; indices L..N-1 are padding,
    forced unmarked, where N is the least power of two >= max(L, 2).
    """

    def __init__(self, logical_size: int, marker: Callable[[int], bool]):
        if logical_size < 0:
            raise ValueError("logical size must be >= 0")
        self.logical_size = logical_size
        self.domain_size = 2 if logical_size <= 1 else 1 << (logical_size - 1).bit_length()
        self._raw_marker = marker
        self._marked: np.ndarray | None = None
        self._mask: np.ndarray | None = None

    def marker(self, index: int) -> bool:
        """Padding-safe predicate: always False at or beyond logical_size."""
        return index < self.logical_size and bool(self._raw_marker(index))

    def marked_indices(self) -> np.ndarray:
        """Sorted indices of all marked elements (computed once, then cached)."""
        if self._marked is None:
            hits = [i for i in range(self.logical_size) if self._raw_marker(i)]
            self._marked = np.asarray(hits, dtype=np.int64)
        return self._marked

    def unmarked_indices(self) -> np.ndarray:
        """Complement of marked_indices over the padded domain."""
        return np.setdiff1d(np.arange(self.domain_size, dtype=np.int64), self.marked_indices())

    @property
    def marked_count(self) -> int:
        return int(self.marked_indices().size)

    def marked_mask(self) -> np.ndarray:
        if self._mask is None:
            self._mask = np.zeros(self.domain_size, dtype=bool)
            self._mask[self.marked_indices()] = True
        return self._mask


class StateVector:
    """Dense real amplitudes of a Grover register."""

    __slots__ = ("amplitudes",)

    def __init__(self, domain_size: int):
        self.amplitudes = np.full(domain_size, domain_size**-0.5)

    def grover_iteration(self, marked_mask: np.ndarray) -> None:
        """Phase-flip the marked amplitudes, then invert about the mean."""
        a = self.amplitudes
        a[marked_mask] *= -1.0
        np.subtract(2.0 * a.mean(), a, out=a)

    def norm(self) -> float:
        a = self.amplitudes
        return float(math.sqrt(a @ a))

    def marked_probability(self, marked_mask: np.ndarray) -> float:
        a = self.amplitudes[marked_mask]
        return float(a @ a)

    def sample(self, rng: np.random.Generator) -> int:
        """Measure: one index drawn from the squared amplitudes."""
        a = self.amplitudes
        cum = np.cumsum(a * a)
        idx = int(np.searchsorted(cum, rng.random() * cum[-1], side="right"))
        return min(idx, a.size - 1)


@dataclass(frozen=True)
class GroverRunStats:
    """Outcome of one fixed-iteration-count Grover run."""

    iterations: int
    oracle_applications: int
    measured_index: int
    success: bool


@dataclass
class BbhtStats:
    """Accumulated run statistics over one or more schedule rounds."""

    grover_iterations: int = 0
    checks: int = 0
    rounds: int = 0
    analytic: bool = False

    @property
    def oracle_applications(self) -> int:
        return self.grover_iterations + self.checks

    def merge(self, other: "BbhtStats") -> None:
        self.grover_iterations += other.grover_iterations
        self.checks += other.checks
        self.rounds += other.rounds
        self.analytic = self.analytic or other.analytic


def success_probability(domain_size: int, marked: int, iterations: int) -> float:
    """Probability that r Grover iterations end on a marked index.

    Closed form sin^2((2r+1) * arcsin(sqrt(k/N))); 0 when nothing is marked.
    """
    if not (0 <= marked <= domain_size and domain_size >= 1):
        raise ValueError(f"need 0 <= k <= N, got k={marked} N={domain_size}")
    if marked == 0:
        return 0.0
    theta = math.asin(math.sqrt(marked / domain_size))
    return math.sin((2 * iterations + 1) * theta) ** 2


def optimal_iterations(domain_size: int, marked: int) -> int:
    """floor((pi/4) * sqrt(N/k)), the standard known-count iteration choice."""
    if marked == 0:
        raise KZeroError("optimal iteration count undefined for zero marked elements")
    if not (1 <= marked <= domain_size):
        raise ValueError(f"need 1 <= k <= N, got k={marked} N={domain_size}")
    return int(math.pi / 4 * math.sqrt(domain_size / marked))


def _dense_round(space: SearchSpace, iterations: int, rng: np.random.Generator) -> int:
    state = StateVector(space.domain_size)
    mask = space.marked_mask()
    for _ in range(iterations):
        state.grover_iteration(mask)
    return state.sample(rng)


def _closed_form_round(space: SearchSpace, iterations: int, rng: np.random.Generator) -> int:
    """Sample a measurement outcome without the dense state.

    Amplitudes stay uniform within the marked class and within the
    unmarked class, so the outcome is: marked with the closed-form
    probability (uniform over marked indices), else uniform over the rest.
    """
    n, k = space.domain_size, space.marked_count
    p = success_probability(n, k, iterations)
    if k == n or rng.random() < p:
        marked = space.marked_indices()
        return int(marked[rng.integers(marked.size)])
    for _ in range(64):  # rejection is cheap unless nearly everything is marked
        idx = int(rng.integers(n))
        if not space.marker(idx):
            return idx
    unmarked = space.unmarked_indices()
    return int(unmarked[rng.integers(unmarked.size)])


def grover_search(space: SearchSpace, iterations: int, rng_seed) -> GroverRunStats:
    """Run one exact Grover search with a fixed iteration count.

    Starts from the uniform superposition, applies `iterations` rounds of
    phase flip + inversion about the mean, then measures once. One oracle
    application per iteration. Deterministic for a given rng_seed.
    """
    if iterations < 0:
        raise ValueError("iteration count must be >= 0")
    rng = np.random.default_rng(rng_seed)
    measured = _dense_round(space, iterations, rng)
    return GroverRunStats(
        iterations=iterations,
        oracle_applications=iterations,
        measured_index=measured,
        success=space.marker(measured),
    )


def bbht_search(
    space: SearchSpace,
    rng_seed,
    oracle=None,
    *,
    statevector_cap: int = DEFAULT_STATEVECTOR_CAP,
) -> tuple[int | None, BbhtStats]:
    """Search with an unknown number of marked elements (BBHT schedule).

    Rounds draw a random iteration count below a bound that grows by 6/5
    per round (capped at sqrt(N)); each round's measurement is classically
    checked against the marker, so a returned index is always marked.
    The schedule stops at success or once cumulative Grover iterations
    reach 9 * ceil(sqrt(N)). Every Grover iteration and every check is one
    quantum oracle application, recorded on `oracle` when one is given.
    """
    rng = np.random.default_rng(rng_seed)
    n = space.domain_size
    cutoff = bbht_cutoff(n)
    analytic = n > statevector_cap
    stats = BbhtStats(analytic=analytic)
    bound = 1.0
    while stats.grover_iterations < cutoff:
        r = int(rng.integers(0, math.ceil(bound)))
        r = min(r, cutoff - stats.grover_iterations)
        if analytic:
            measured = _closed_form_round(space, r, rng)
        else:
            measured = _dense_round(space, r, rng)
        stats.grover_iterations += r
        stats.rounds += 1
        if oracle is not None:
            oracle.count_quantum_applications(r + 1)  # r iterations + 1 check
        stats.checks += 1
        if space.marker(measured):
            return measured, stats
        bound = min(bound * BBHT_GROWTH, math.sqrt(n))
    return None, stats
