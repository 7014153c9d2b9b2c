"""Generic-fiber model of the ring of clean cycles on an abelian variety.

A cycle atom is recorded by the multiset of points of its Gauss fiber over a
very general cotangent direction.  Points are sent to free generators of
``Z^k``, so every genericity statement becomes an exact identity.
Convolution is the Minkowski sum of fibers and ``[m]_*`` scales points.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

import numpy as np

from .weights import stabilizer_count

Point = tuple[int, ...]


class CycleError(ValueError):
    pass


class RankMismatch(CycleError):
    pass


class ZeroScale(CycleError):
    pass


class NotReduced(CycleError):
    pass


class NotSymmetric(CycleError):
    pass


class DivisibilityFailure(CycleError):
    pass


class OutOfRange(CycleError):
    pass


def _add(p: Point, q: Point) -> Point:
    return tuple(a + b for a, b in zip(p, q))


def _neg(p: Point) -> Point:
    return tuple(-a for a in p)


@dataclass(frozen=True, order=True)
class GenericFiber:
    points: tuple[tuple[Point, int], ...]
    ambient_rank: int

    @classmethod
    def from_counter(cls, counts: Mapping[Point, int], ambient_rank: int) -> "GenericFiber":
        pts = []
        for p, m in counts.items():
            if len(p) != ambient_rank:
                raise RankMismatch(f"point {p} is not in Z^{ambient_rank}")
            if m < 0:
                raise CycleError("fiber multiplicities must be positive")
            if m:
                pts.append((tuple(p), m))
        return cls(tuple(sorted(pts)), ambient_rank)

    @classmethod
    def from_points(cls, points: Iterable[Iterable[int]], ambient_rank: int) -> "GenericFiber":
        return cls.from_counter(Counter(tuple(p) for p in points), ambient_rank)

    def counter(self) -> Counter:
        return Counter(dict(self.points))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.points)

    @property
    def reduced(self) -> bool:
        return all(m == 1 for _, m in self.points)

    @property
    def symmetric(self) -> bool:
        return self.negate() == self

    def support(self) -> set[Point]:
        return {p for p, _ in self.points}

    def negate(self) -> "GenericFiber":
        return self.scale(-1)

    def scale(self, m: int) -> "GenericFiber":
        out: Counter = Counter()
        for p, k in self.points:
            out[tuple(m * a for a in p)] += k
        return GenericFiber.from_counter(out, self.ambient_rank)

    def translate(self, t: Point) -> "GenericFiber":
        return GenericFiber.from_counter(
            Counter({_add(p, t): k for p, k in self.points}), self.ambient_rank)

    def minkowski(self, other: "GenericFiber") -> "GenericFiber":
        if self.ambient_rank != other.ambient_rank:
            raise RankMismatch(f"{self.ambient_rank} vs {other.ambient_rank}")
        out: Counter = Counter()
        for p, a in self.points:
            for q, b in other.points:
                out[_add(p, q)] += a * b
        return GenericFiber.from_counter(out, self.ambient_rank)

    def to_json(self) -> list[list[int]]:
        return [list(p) for p, m in self.points for _ in range(m)]


@dataclass(frozen=True)
class CleanCycleAtom:
    fiber: GenericFiber
    base_dim: Optional[int] = None
    finite_gauss: bool = True

    def __post_init__(self):
        if self.base_dim is not None and self.base_dim < 0:
            raise CycleError("base_dim must be nonnegative")

    def _key(self):
        return (self.fiber, -1 if self.base_dim is None else self.base_dim, self.finite_gauss)


@dataclass(frozen=True)
class CleanCycle:
    """Formal sum of atoms with exact rational coefficients."""

    ambient_rank: int
    terms: tuple[tuple[CleanCycleAtom, Fraction], ...]

    @classmethod
    def from_terms(cls, ambient_rank: int,
                   terms: Iterable[tuple[CleanCycleAtom, Fraction]]) -> "CleanCycle":
        acc: dict[CleanCycleAtom, Fraction] = {}
        for atom, c in terms:
            if atom.fiber.ambient_rank != ambient_rank:
                raise RankMismatch(f"atom of rank {atom.fiber.ambient_rank} in rank {ambient_rank}")
            if not atom.fiber.points:
                continue  # negligible: empty fiber
            acc[atom] = acc.get(atom, Fraction(0)) + Fraction(c)
        items = [(a, c) for a, c in acc.items() if c]
        items.sort(key=lambda t: t[0]._key())
        return cls(ambient_rank, tuple(items))

    @classmethod
    def of(cls, fiber: GenericFiber, base_dim: Optional[int] = None,
           finite_gauss: bool = True, coef=1) -> "CleanCycle":
        return cls.from_terms(fiber.ambient_rank,
                              [(CleanCycleAtom(fiber, base_dim, finite_gauss), Fraction(coef))])

    @classmethod
    def unit(cls, ambient_rank: int) -> "CleanCycle":
        """The skyscraper at the origin: fiber {0}, base dimension 0."""
        return cls.of(GenericFiber.from_points([(0,) * ambient_rank], ambient_rank), 0)

    @property
    def effective(self) -> bool:
        return all(c >= 0 for _, c in self.terms)

    @property
    def degree(self) -> Fraction:
        return sum((c * a.fiber.degree for a, c in self.terms), Fraction(0))

    def fiber_cycle(self) -> dict[Point, Fraction]:
        """Total signed 0-cycle obtained by summing all atom fibers."""
        out: dict[Point, Fraction] = {}
        for atom, c in self.terms:
            for p, m in atom.fiber.points:
                out[p] = out.get(p, Fraction(0)) + c * m
        return {p: v for p, v in sorted(out.items()) if v}

    def as_fiber(self) -> GenericFiber:
        """The fiber of an effective integral cycle, as one multiset."""
        counts = {}
        for p, v in self.fiber_cycle().items():
            if v < 0 or v.denominator != 1:
                raise CycleError(f"coefficient {v} at {p} is not a nonnegative integer")
            counts[p] = int(v)
        return GenericFiber.from_counter(counts, self.ambient_rank)

    def support(self) -> set[Point]:
        return set(self.fiber_cycle())

    def _check(self, other: "CleanCycle"):
        if self.ambient_rank != other.ambient_rank:
            raise RankMismatch(f"{self.ambient_rank} vs {other.ambient_rank}")

    def __add__(self, other: "CleanCycle") -> "CleanCycle":
        self._check(other)
        return CleanCycle.from_terms(self.ambient_rank, self.terms + other.terms)

    def __neg__(self) -> "CleanCycle":
        return CleanCycle.from_terms(self.ambient_rank, [(a, -c) for a, c in self.terms])

    def __sub__(self, other: "CleanCycle") -> "CleanCycle":
        return self + (-other)

    def to_json(self) -> dict:
        terms = []
        for atom, c in self.terms:
            terms.append({
                "coef": f"{c.numerator}/{c.denominator}",
                "base_dim": atom.base_dim,
                "finite_gauss": atom.finite_gauss,
                "points": atom.fiber.to_json(),
            })
        return {"ambient_rank": self.ambient_rank, "terms": terms}


def free_fiber(n: int, symmetric: bool = False) -> GenericFiber:
    if n < 1:
        raise OutOfRange("n must be positive")
    basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    pts = basis + [_neg(e) for e in basis] if symmetric else basis
    return GenericFiber.from_points(pts, n)


def convolve(a: CleanCycle, b: CleanCycle, g: Optional[int] = None) -> CleanCycle:
    """Bilinear convolution.

    The base dimension ``min(d_a + d_b, g - 1)`` is only propagated when
    both atoms have finite Gauss maps and ``g`` is known.  The product atom
    is not asserted to have a finite Gauss map.
    """
    a._check(b)
    terms = []
    for x, cx in a.terms:
        for y, cy in b.terms:
            dim = None
            if (g is not None and x.finite_gauss and y.finite_gauss
                    and x.base_dim is not None and y.base_dim is not None):
                dim = min(x.base_dim + y.base_dim, g - 1)
            terms.append((CleanCycleAtom(x.fiber.minkowski(y.fiber), dim, False), cx * cy))
    return CleanCycle.from_terms(a.ambient_rank, terms)


def scale_pushforward(c: CleanCycle, m: int) -> CleanCycle:
    if m == 0:
        raise ZeroScale("[0]_* is not defined on clean cycles")
    return CleanCycle.from_terms(c.ambient_rank, [
        (CleanCycleAtom(a.fiber.scale(m), a.base_dim, a.finite_gauss), k)
        for a, k in c.terms
    ])


def _require_reduced(f: GenericFiber):
    if not f.reduced:
        raise NotReduced("fiber has repeated points")


def _divide(raw: Counter, alpha: tuple[int, ...], rank: int) -> GenericFiber:
    nal = stabilizer_count(alpha)
    out = {}
    for p, m in raw.items():
        if m % nal:
            raise DivisibilityFailure(f"point {p} has count {m}, not divisible by {nal}")
        out[p] = m // nal
    return GenericFiber.from_counter(out, rank)


def _tally(sums: np.ndarray) -> Counter:
    if len(sums) == 0:
        return Counter()
    lo = sums.min(axis=0)
    span = sums.max(axis=0) - lo + 1
    if math.prod(int(x) for x in span) < 2 ** 62:
        # mixed-radix key per row, so the sort is one-dimensional
        radix = np.cumprod(np.concatenate(([1], span[:-1])))
        keys, counts = np.unique((sums - lo) @ radix, return_counts=True)
        rows = np.stack([(keys // r) % s for r, s in zip(radix, span)], axis=1) + lo
    else:
        rows, counts = np.unique(sums, axis=0, return_counts=True)
    return Counter({tuple(int(x) for x in r): int(c) for r, c in zip(rows, counts)})


@functools.lru_cache(maxsize=64)
def _injections(k: int, ell: int) -> np.ndarray:
    idx = np.array(list(itertools.permutations(range(k), ell)), dtype=np.int64)
    idx = idx.reshape(-1, ell)
    idx.flags.writeable = False
    return idx


def wedge_alpha_raw(f: GenericFiber, alpha: Iterable[int]) -> Counter:
    """sum_nu alpha_nu p_{iota(nu)} over all injections iota, undivided."""
    alpha = tuple(alpha)
    _require_reduced(f)
    pts = np.array([p for p, _ in f.points], dtype=np.int64).reshape(-1, f.ambient_rank)
    if len(alpha) > len(pts):
        raise OutOfRange(f"length {len(alpha)} exceeds the {len(pts)} fiber points")
    idx = _injections(len(pts), len(alpha))
    sums = np.zeros((len(idx), f.ambient_rank), dtype=np.int64)
    for j, a in enumerate(alpha):
        sums += a * pts[idx[:, j]]
    return _tally(sums)


def wedge_alpha(f: GenericFiber, alpha: Iterable[int]) -> CleanCycle:
    alpha = tuple(alpha)
    raw = wedge_alpha_raw(f, alpha)
    return CleanCycle.of(_divide(raw, alpha, f.ambient_rank))


def raw_wedge_degree(n: int, r: int) -> int:
    if not 1 <= r <= n:
        raise OutOfRange(f"need 1 <= r <= n, got n={n}, r={r}")
    return math.factorial(r) * math.comb(n, r)


def symmetric_pairs(f: GenericFiber) -> list[Point]:
    """One representative of each pair {p, -p}: the lexicographically larger."""
    _require_reduced(f)
    if not f.symmetric:
        raise NotSymmetric("fiber is not invariant under negation")
    zero = (0,) * f.ambient_rank
    if zero in f.support():
        raise NotSymmetric("the origin cannot be paired with a distinct antipode")
    return [p for p, _ in f.points if p > _neg(p)]


def sym_wedge_alpha_raw(f: GenericFiber, alpha: Iterable[int]) -> Counter:
    """Signed sums over maps into {+-1..+-n} with injective |iota|, undivided."""
    alpha = tuple(alpha)
    reps = np.array(symmetric_pairs(f), dtype=np.int64).reshape(-1, f.ambient_rank)
    ell = len(alpha)
    if ell > len(reps):
        raise OutOfRange(f"length {ell} exceeds the {len(reps)} antipodal pairs")
    idx = _injections(len(reps), ell)
    signs = np.array(list(itertools.product((1, -1), repeat=ell)), dtype=np.int64)
    signs = signs.reshape(-1, ell)
    sums = np.zeros((len(idx), len(signs), f.ambient_rank), dtype=np.int64)
    for j, a in enumerate(alpha):
        sums += a * signs[None, :, j, None] * reps[idx[:, j]][:, None, :]
    return _tally(sums.reshape(-1, f.ambient_rank))


def sym_wedge_alpha(f: GenericFiber, alpha: Iterable[int]) -> CleanCycle:
    alpha = tuple(alpha)
    raw = sym_wedge_alpha_raw(f, alpha)
    return CleanCycle.of(_divide(raw, alpha, f.ambient_rank))


def half_spin_split(f: GenericFiber) -> tuple[CleanCycle, CleanCycle]:
    """Split the signed n-fold sums by the parity of the minus signs.

    The "+" part is the one containing the sum of all representatives.
    """
    reps = symmetric_pairs(f)
    n = len(reps)
    if n < 2:
        raise OutOfRange("half-spin split needs at least two antipodal pairs")
    parts = (Counter(), Counter())
    zero = (0,) * f.ambient_rank
    for signs in itertools.product((1, -1), repeat=n):
        s = zero
        for e, p in zip(signs, reps):
            s = _add(s, tuple(e * x for x in p))
        parts[signs.count(-1) % 2][s] += 1
    plus, minus = (CleanCycle.of(GenericFiber.from_counter(c, f.ambient_rank)) for c in parts)
    return plus, minus


def half_spin_identity_check(n: int) -> bool:
    """V+ o V+ - [2]V+ == V- o V- - [2]V- on the free symmetric fiber."""
    if n < 2:
        raise OutOfRange("n must be at least 2")
    plus, minus = half_spin_split(free_fiber(n, symmetric=True))
    lhs = convolve(plus, plus) - scale_pushforward(plus, 2)
    rhs = convolve(minus, minus) - scale_pushforward(minus, 2)
    return lhs.fiber_cycle() == rhs.fiber_cycle()


def support_inclusion_check(f: GenericFiber, n: int) -> bool:
    """Supp([2]V^(1) + ... + [2]V^(n)) inside Supp(V^(n) o V^(n)).

    Here V^(s) is the signed wedge of the symmetric fiber with alpha = (1^s).
    """
    reps = symmetric_pairs(f)
    if len(reps) != n:
        raise OutOfRange(f"fiber has {len(reps)} antipodal pairs, expected {n}")
    top = sym_wedge_alpha(f, (1,) * n)
    big = convolve(top, top).support()
    small: set[Point] = set()
    for s in range(1, n + 1):
        small |= scale_pushforward(sym_wedge_alpha(f, (1,) * s), 2).support()
    return small <= big


def curve_wedge_dim(genus: int, i: int) -> int:
    """Dimension of Alt^i of a curve's Gauss fiber cycle, 0 <= i <= 2g-2.

    The upper half follows from the duality d(i) = d(2g - 2 - i).
    """
    if genus < 2:
        raise OutOfRange("genus must be at least 2")
    top = 2 * genus - 2
    if not 0 <= i <= top:
        raise OutOfRange(f"need 0 <= i <= {top}, got {i}")
    if i <= genus - 1:
        return i
    return curve_wedge_dim(genus, top - i)


def gauss_degree_lower_bound(g: int, dim_z: int) -> int:
    if not 1 <= dim_z < g:
        raise OutOfRange(f"need 1 <= dim_z < g, got dim_z={dim_z}, g={g}")
    return -(-2 * g // dim_z) - 2
