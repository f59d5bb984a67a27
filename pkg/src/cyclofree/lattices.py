"""Full-rank sublattices of Z^d in lower-triangular Hermite normal form.

The HNF convention: basis rows b_0, ..., b_{d-1} with b_i[j] = 0 for j > i,
positive diagonal, and 0 <= b_i[j] < b_j[j] for j < i.  This form is unique
per lattice, so equal lattices compare equal.  The lattice index in Z^d is
the product of the diagonal.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .cyclotomic import CycInt


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by Bareiss fraction-free elimination."""
    n = len(matrix)
    m = [list(map(int, row)) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


class RankError(ValueError):
    pass


@dataclass(frozen=True)
class IdealLattice:
    """A full-rank sublattice of Z^d with its canonical HNF basis.

    n is the conductor of the ambient cyclotomic ring when the lattice
    came from an ideal, and 0 for a plain geometric lattice.
    """

    n: int
    d: int
    basis: tuple[tuple[int, ...], ...]
    index: int

    def member(self, point: Sequence[int]) -> bool:
        """Is the point an integer combination of the basis rows?"""
        if len(point) != self.d:
            raise ValueError(f"point has length {len(point)}, lattice rank {self.d}")
        residue = list(point)
        for j in range(self.d - 1, -1, -1):
            q, r = divmod(residue[j], self.basis[j][j])
            if r:
                return False
            if q:
                row = self.basis[j]
                for t in range(j + 1):
                    residue[t] -= q * row[t]
        return True

    def coset_id(self, point: Sequence[int]) -> tuple[int, ...]:
        """Canonical coset representative with 0 <= r[j] < diagonal[j]."""
        if len(point) != self.d:
            raise ValueError(f"point has length {len(point)}, lattice rank {self.d}")
        residue = list(point)
        for j in range(self.d - 1, -1, -1):
            q = residue[j] // self.basis[j][j]
            if q:
                row = self.basis[j]
                for t in range(j + 1):
                    residue[t] -= q * row[t]
        return tuple(residue)

    def points_in_box(self, radius: int) -> Iterator[tuple[int, ...]]:
        """All lattice points with sup norm <= radius, without scanning the box.

        Walks coefficient choices from the last basis row down; choosing the
        coefficient of row j fixes coordinate j, so every branch of the walk
        yields a point.
        """
        d = self.d
        basis = self.basis
        coords = [0] * d

        def walk(j: int):
            row = basis[j]
            diag = row[j]
            base = coords[j]
            lo = -((radius + base) // diag)
            hi = (radius - base) // diag
            if lo > hi:
                return
            if lo:
                for t in range(j + 1):
                    coords[t] += lo * row[t]
            c = lo
            while True:
                if j == 0:
                    yield tuple(coords)
                else:
                    yield from walk(j - 1)
                if c == hi:
                    break
                c += 1
                for t in range(j + 1):
                    coords[t] += row[t]
            if hi:
                for t in range(j + 1):
                    coords[t] -= hi * row[t]

        if d:
            yield from walk(d - 1)

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "d": self.d,
                "basis": [list(row) for row in self.basis],
                "index": str(self.index),
            }
        )

    @staticmethod
    def from_json(text: str) -> "IdealLattice":
        data = json.loads(text)
        return IdealLattice(
            int(data["n"]),
            int(data["d"]),
            tuple(tuple(int(v) for v in row) for row in data["basis"]),
            int(data["index"]),
        )


def hnf(generators: Sequence[Sequence[int]], n: int = 0, modulus: Optional[int] = None) -> IdealLattice:
    """Canonical lower-triangular HNF lattice spanned by the generators.

    Raises RankError unless the generators span a full-rank subgroup.
    When a modulus M with M*Z^d contained in the lattice is known, passing
    it bounds intermediate entries (the rows M*e_i are added and every
    incoming row is reduced mod M).
    """
    if not generators:
        raise RankError("no generators")
    d = len(generators[0])
    pivot_rows: list[Optional[list[int]]] = [None] * d

    def insert(vec: list[int]):
        for j in range(d - 1, -1, -1):
            if not vec[j]:
                continue
            row = pivot_rows[j]
            if row is None:
                pivot_rows[j] = vec
                return
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                for t in range(j + 1):
                    vec[t] -= q * row[t]
            else:
                g, x, y = _xgcd(a, b)
                au, bu = a // g, b // g
                for t in range(j + 1):
                    rt, vt = row[t], vec[t]
                    row[t] = x * rt + y * vt
                    vec[t] = au * vt - bu * rt
        return

    rows = [list(map(int, g)) for g in generators]
    if modulus is not None:
        for i in range(d):
            unit = [0] * d
            unit[i] = modulus
            rows.append(unit)
        rows = [[v % modulus for v in row] for row in rows[: -d]] + rows[-d:]
    for vec in rows:
        if len(vec) != d:
            raise ValueError("generators must share one length")
        insert(vec)
    if any(row is None for row in pivot_rows):
        raise RankError("generators do not span a full-rank lattice")
    basis = [list(row) for row in pivot_rows]  # type: ignore[arg-type]
    for j in range(d):
        if basis[j][j] < 0:
            basis[j] = [-v for v in basis[j]]
    for i in range(d):
        for j in range(i - 1, -1, -1):
            q = basis[i][j] // basis[j][j]
            if q:
                for t in range(j + 1):
                    basis[i][t] -= q * basis[j][t]
    index = math.prod(basis[j][j] for j in range(d))
    return IdealLattice(n, d, tuple(tuple(row) for row in basis), index)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


@lru_cache(maxsize=None)
def ideal_lattice(prime_ideal, m: int = 1) -> IdealLattice:
    """HNF lattice of the m-th power of a prime ideal under the embedding.

    The power is built iteratively: the Z-basis of p^(j-1) is multiplied by
    the two ideal generators of p and closed under multiplication by zeta,
    then HNF-reduced.  The index is checked against norm^m.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    n = prime_ideal.n
    d = len(CycInt.zero(n).coeffs)
    gens = prime_ideal.generators()
    if m == 1:
        basis_elements = gens
        target = prime_ideal.norm
    else:
        prev = ideal_lattice(prime_ideal, m - 1)
        basis_elements = [
            CycInt.unembed(n, row) * g for row in prev.basis for g in gens
        ]
        target = prime_ideal.norm**m
    vectors = []
    zeta = CycInt.root(n)
    for x in basis_elements:
        for _ in range(d):
            vectors.append(x.embed())
            x = x * zeta
    lat = hnf(vectors, n=n, modulus=target)
    if lat.index != target:
        raise ArithmeticError(
            f"ideal power lattice has index {lat.index}, expected {target}"
        )
    return lat


def box_points(radius: int, d: int) -> Iterator[tuple[int, ...]]:
    """All points of [-radius, radius]^d in lexicographic order."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    return itertools.product(range(-radius, radius + 1), repeat=d)
