"""Materialize the k-free points of Z[zeta_n] inside centred boxes.

The box [-r, r]^d is sieved by removing, for every prime ideal P with
N(P)^k below the box norm bound, the sublattice of P^k.  Survivors are
exactly the k-free points: a point x killed by no consulted lattice
cannot have v_P(x) >= k for any P, because N(P)^k would then divide
|N(x)|, which the norm bound caps.

Patch extraction, admissibility, and heredity checks operate on the
same occupancy grid.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .arith import integer_kth_root
from .cyclotomic import CycInt, ring_degree, validate_conductor
from .lattices import ideal_lattice
from .prime_ideals import PrimeIdeal, enumerate_prime_ideals
from . import zeta as zeta_mod

DEFAULT_MAX_POINTS = 20_000_000


class ResourceCapError(RuntimeError):
    """The requested box exceeds the configured point cap."""


def point_cap() -> int:
    value = os.environ.get("CYCLOFREE_MAX_POINTS")
    return int(value) if value else DEFAULT_MAX_POINTS


def norm_bound(n: int, r: int, tight: bool = False) -> int:
    """An upper bound M >= max |N(x)| over the box [-r, r]^d.

    The crude bound is (d*r)^d, from |sigma(x)| <= sum |m_i| <= d*r in
    every embedding.  The tight variant multiplies per-embedding maxima
    over the box corners (the modulus is convex, so corners suffice),
    computed in floating point and padded outward before rounding up.
    """
    d = ring_degree(n)
    if not tight or d > 12:
        return (d * r) ** d
    bound = 1.0
    for j in range(1, n):
        if math.gcd(j, n) != 1:
            continue
        zeta_powers = [complex(math.cos(2 * math.pi * j * i / n), math.sin(2 * math.pi * j * i / n)) for i in range(d)]
        best = 0.0
        for corner in range(1 << (d - 1)):
            # the corner with m_0 = +r; modulus is symmetric under negation
            acc = complex(r * zeta_powers[0].real, r * zeta_powers[0].imag)
            for i in range(1, d):
                s = r if (corner >> (i - 1)) & 1 else -r
                acc += s * zeta_powers[i]
            best = max(best, abs(acc))
        bound *= best * (1.0 + 1e-12)
    return min(math.ceil(bound * (1.0 + 1e-9)), (d * r) ** d)


@dataclass
class KFreeBox:
    """The k-free points inside [-r, r]^d, stored as an occupancy grid."""

    n: int
    k: int
    r: int
    grid: np.ndarray
    prime_ideals_used: tuple[PrimeIdeal, ...]

    @property
    def d(self) -> int:
        return self.grid.ndim

    @property
    def side(self) -> int:
        return 2 * self.r + 1

    @property
    def box_volume(self) -> int:
        return self.side**self.d

    @property
    def count(self) -> int:
        return int(np.count_nonzero(self.grid))

    def contains(self, point: Sequence[int]) -> bool:
        if any(abs(v) > self.r for v in point):
            return False
        return bool(self.grid[tuple(v + self.r for v in point)])

    @cached_property
    def points(self) -> set[tuple[int, ...]]:
        flat = np.flatnonzero(self.grid.reshape(-1))
        side = self.side
        out = set()
        for idx in flat.tolist():
            coords = []
            for _ in range(self.d):
                idx, rem = divmod(idx, side)
                coords.append(rem - self.r)
            out.add(tuple(reversed(coords)))
        return out

    def sorted_points(self) -> list[tuple[int, ...]]:
        return sorted(self.points)

    @property
    def empirical_density(self) -> Fraction:
        return Fraction(self.count, self.box_volume)

    def element(self, point: Sequence[int]) -> CycInt:
        return CycInt.unembed(self.n, point)


def _collect_removals(lattice, radius: int, side: int, d: int) -> list[int]:
    out = []
    weights = [side ** (d - 1 - t) for t in range(d)]
    for point in lattice.points_in_box(radius):
        idx = 0
        for t in range(d):
            idx += (point[t] + radius) * weights[t]
        out.append(idx)
    return out


def sieve_box(
    n: int,
    k: int,
    r: int,
    tight_bound: bool = False,
    max_points: int | None = None,
    threads: int = 1,
    ideal_norm_cap: int | None = None,
) -> KFreeBox:
    """Sieve [-r, r]^d down to the k-free points.

    Lattice removals commute, so the result is independent of the worker
    count.  Raises ResourceCapError when the box has more points than the
    cap (CYCLOFREE_MAX_POINTS or the built-in default).

    ideal_norm_cap restricts the sieve to ideals of norm at most that cap,
    which yields the lattice-periodic superset whose density brackets the
    true one from above; leave it None for the exact k-free set.
    """
    validate_conductor(n)
    if k < 2:
        raise ValueError("k must be >= 2")
    if r < 1:
        raise ValueError("r must be >= 1")
    d = ring_degree(n)
    side = 2 * r + 1
    volume = side**d
    cap = max_points if max_points is not None else point_cap()
    if volume > cap:
        raise ResourceCapError(
            f"box has {volume} points, above the cap of {cap}; "
            "raise CYCLOFREE_MAX_POINTS to override"
        )
    bound = norm_bound(n, r, tight=tight_bound)
    cap_norm = integer_kth_root(bound, k)
    if ideal_norm_cap is not None:
        cap_norm = min(cap_norm, ideal_norm_cap)
    ideals = tuple(enumerate_prime_ideals(n, cap_norm))
    lattices = [ideal_lattice(P, k) for P in ideals]
    flat = np.ones(volume, dtype=bool)
    if threads > 1 and lattices:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = pool.map(lambda lat: _collect_removals(lat, r, side, d), lattices)
            for chunk in chunks:
                if chunk:
                    flat[np.asarray(chunk, dtype=np.int64)] = False
    else:
        for lat in lattices:
            chunk = _collect_removals(lat, r, side, d)
            if chunk:
                flat[np.asarray(chunk, dtype=np.int64)] = False
    grid = flat.reshape((side,) * d)
    grid[(r,) * d] = False  # 0 is divisible by every ideal power
    return KFreeBox(n=n, k=k, r=r, grid=grid, prime_ideals_used=ideals)


# ---------------------------------------------------------------------------
# density


@dataclass
class DensityReport:
    n: int
    k: int
    r: int
    point_count: int
    box_volume: int
    empirical_density: Fraction
    reference_lower: Fraction
    reference_upper: Fraction
    prime_bound: int

    @property
    def reference_midpoint(self) -> Fraction:
        return (self.reference_lower + self.reference_upper) / 2

    @property
    def relative_gap(self) -> float:
        mid = self.reference_midpoint
        return float(abs(self.empirical_density - mid) / mid)

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "k": self.k,
                "r": self.r,
                "point_count": self.point_count,
                "box_volume": self.box_volume,
                "empirical_density": str(self.empirical_density),
                "reference_lower": str(self.reference_lower),
                "reference_upper": str(self.reference_upper),
                "relative_gap": self.relative_gap,
                "prime_bound": self.prime_bound,
            },
            sort_keys=True,
        )


def density_estimate(box: KFreeBox, prime_bound: int = 100_000) -> DensityReport:
    """Empirical density of the box against the zeta reference interval."""
    reference = zeta_mod.density_constant(box.n, box.k, prime_bound)
    return DensityReport(
        n=box.n,
        k=box.k,
        r=box.r,
        point_count=box.count,
        box_volume=box.box_volume,
        empirical_density=box.empirical_density,
        reference_lower=reference.lower,
        reference_upper=reference.upper,
        prime_bound=prime_bound,
    )


# ---------------------------------------------------------------------------
# patches


@dataclass(frozen=True)
class PatchConfig:
    """A finite window shape with an occupied/empty fill pattern.

    fill is a bitmask over the shape's offset list: bit b set means the
    b-th offset is occupied.
    """

    shape: tuple[tuple[int, ...], ...]
    fill: int

    @property
    def fill_bits(self) -> str:
        return format(self.fill, f"0{len(self.shape)}b")[::-1]

    @property
    def occupied(self) -> tuple[tuple[int, ...], ...]:
        return tuple(off for b, off in enumerate(self.shape) if (self.fill >> b) & 1)


def patch_to_json(patch: PatchConfig, n: int, k: int) -> str:
    return json.dumps(
        {
            "n": n,
            "k": k,
            "shape": [list(off) for off in patch.shape],
            "fill": patch.fill_bits,
        },
        sort_keys=True,
    )


def patch_from_json(text: str) -> tuple[PatchConfig, int, int]:
    data = json.loads(text)
    shape = tuple(tuple(int(v) for v in off) for off in data["shape"])
    bits = data["fill"]
    if len(bits) != len(shape):
        raise ValueError("fill bitstring length must match the shape")
    fill = sum(1 << b for b, ch in enumerate(bits) if ch == "1")
    return PatchConfig(shape=shape, fill=fill), int(data["n"]), int(data["k"])


def _normalize_shape(shape: Iterable[Sequence[int]], d: int) -> tuple[tuple[int, ...], ...]:
    out = tuple(tuple(int(v) for v in off) for off in shape)
    if not out:
        raise ValueError("shape must contain at least one offset")
    if any(len(off) != d for off in out):
        raise ValueError(f"offsets must have length {d}")
    if len(set(out)) != len(out):
        raise ValueError("offsets must be distinct")
    if len(out) > 24:
        raise ValueError("shapes above 24 cells are not supported")
    return out


def extract_patches(box: KFreeBox, shape: Iterable[Sequence[int]]) -> dict[PatchConfig, int]:
    """Census of the fill patterns the shape takes over all anchors that
    keep it inside the box.  Counts divided by the anchor total are the
    empirical patch frequencies."""
    offsets = _normalize_shape(shape, box.d)
    side = box.side
    lo = [max(0, -min(off[t] for off in offsets)) for t in range(box.d)]
    hi = [side - max(0, max(off[t] for off in offsets)) for t in range(box.d)]
    if any(l >= h for l, h in zip(lo, hi)):
        raise ValueError("shape does not fit inside the box")
    code = None
    for b, off in enumerate(offsets):
        window = box.grid[tuple(slice(lo[t] + off[t], hi[t] + off[t]) for t in range(box.d))]
        piece = window.astype(np.int64) << b
        code = piece if code is None else code + piece
    counts = np.bincount(code.reshape(-1), minlength=1 << len(offsets))
    return {
        PatchConfig(shape=offsets, fill=int(fill)): int(cnt)
        for fill, cnt in enumerate(counts)
        if cnt
    }


def anchor_count(box: KFreeBox, shape: Iterable[Sequence[int]]) -> int:
    offsets = _normalize_shape(shape, box.d)
    side = box.side
    total = 1
    for t in range(box.d):
        lo = max(0, -min(off[t] for off in offsets))
        hi = side - max(0, max(off[t] for off in offsets))
        total *= max(0, hi - lo)
    return total


def patch_entropy_estimate(box: KFreeBox, shape: Iterable[Sequence[int]]) -> float:
    """log(distinct patterns) per shape cell; a slowly converging finite
    size proxy for the per-site patch counting entropy."""
    census = extract_patches(box, shape)
    size = len(next(iter(census)).shape)
    return math.log(len(census)) / size


# ---------------------------------------------------------------------------
# admissibility and heredity


def is_admissible(points: Iterable[Sequence[int]], n: int, k: int) -> bool:
    """A finite set is admissible when it misses at least one coset of
    every lattice of an ideal power P^k.

    Only ideals with N(P)^k <= |set| can be covered, since the coset
    count of the others already exceeds the set size.
    """
    validate_conductor(n)
    pts = {tuple(int(v) for v in p) for p in points}
    if not pts:
        return True
    cap = integer_kth_root(len(pts), k)
    for ideal in enumerate_prime_ideals(n, cap):
        lattice = ideal_lattice(ideal, k)
        seen: set[tuple[int, ...]] = set()
        full = lattice.index
        for p in pts:
            seen.add(lattice.coset_id(p))
            if len(seen) == full:
                return False
    return True


def hereditary_check(box: KFreeBox, trials: int, seed: int = 0) -> bool:
    """Admissibility of uniformly random subsets of the sieved window.

    Heredity of the k-free configurations predicts every subset passes;
    returns the conjunction over the trials.
    """
    import random

    rng = random.Random(seed)
    pts = box.sorted_points()
    for _ in range(trials):
        subset = [p for p in pts if rng.random() < 0.5]
        if not is_admissible(subset, box.n, box.k):
            return False
    return True
