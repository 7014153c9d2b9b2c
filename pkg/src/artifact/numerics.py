"""Euler characteristics of subvarieties and the numerical bounds on them.

Intersection numbers are computed on products of elliptic curves
``E_1 x ... x E_g``.  A divisor is a row ``m`` meaning ``sum_j m_j F_j``
with ``F_j`` the pullback of a point from ``E_j``.  Since ``F_j^2 = 0`` and
``F_1 ... F_g = 1``, a top monomial in such divisors is a permanent.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence


class NumericsError(ValueError):
    pass


class OutOfRange(NumericsError):
    pass


class DegreeMismatch(NumericsError):
    pass


class RankMismatch(NumericsError):
    pass


KINDS = ("ample_normal_bundle", "complete_intersection", "surface")


@dataclass(frozen=True, order=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(p < 1 for p in self.parts):
            raise OutOfRange(f"bad composition {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)


def compositions(n: int, r: int) -> list[Composition]:
    """All compositions of ``n`` into ``r`` positive parts, lexicographic."""
    if not 1 <= r <= n:
        raise OutOfRange(f"need 1 <= r <= n, got n={n}, r={r}")
    out = []
    for cuts in itertools.combinations(range(1, n), r - 1):
        bounds = (0,) + cuts + (n,)
        out.append(Composition(tuple(b - a for a, b in zip(bounds, bounds[1:]))))
    return sorted(out)


@dataclass(frozen=True)
class EllipticProductModel:
    g: int
    divisors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.divisors)
        object.__setattr__(self, "divisors", rows)
        if self.g < 1:
            raise OutOfRange("g must be positive")
        for row in rows:
            if len(row) != self.g:
                raise NumericsError(f"divisor row {row} does not have length {self.g}")
            if any(x < 0 for x in row):
                raise NumericsError("divisor coefficients must be nonnegative")
            if not any(row):
                raise NumericsError("zero divisor row")

    @property
    def r(self) -> int:
        return len(self.divisors)

    @property
    def ample(self) -> bool:
        return all(all(x > 0 for x in row) for row in self.divisors)


def permanent(matrix: Sequence[Sequence[int]]) -> int:
    """Ryser's formula with exact integers."""
    n = len(matrix)
    if n == 0:
        return 1
    total = 0
    for k in range(1, n + 1):
        sign = (-1) ** (n - k)
        for cols in itertools.combinations(range(n), k):
            prod = 1
            for row in matrix:
                s = 0
                for j in cols:
                    s += row[j]
                prod *= s
                if not prod:
                    break
            total += sign * prod
    return total


def intersection_number(model: EllipticProductModel, exponents: Sequence[int]) -> int:
    """D_1^{a_1} ... D_r^{a_r} on the product of elliptic curves."""
    if len(exponents) != model.r or any(a < 0 for a in exponents):
        raise DegreeMismatch(f"exponents {tuple(exponents)} do not fit {model.r} divisors")
    if sum(exponents) != model.g:
        raise DegreeMismatch(f"exponents sum to {sum(exponents)}, not {model.g}")
    rows = [row for row, a in zip(model.divisors, exponents) for _ in range(a)]
    return permanent(rows)


def euler_complete_intersection(model: EllipticProductModel) -> int:
    g, r = model.g, model.r
    if not 1 <= r < g:
        raise OutOfRange(f"need 1 <= r < g, got r={r}, g={g}")
    total = sum(intersection_number(model, c.parts) for c in compositions(g, r))
    return (-1) ** (g - r) * total


@dataclass
class BoundReport:
    g: int
    d: int
    kind: str
    lower_bound_ample: Optional[int]
    lower_bound_ci: Optional[int]
    lower_bound_surface: Optional[int]
    parity_even_required: bool
    excludes_27: bool
    excludes_56: bool
    violated: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "d": self.d,
            "kind": self.kind,
            "lower_bound_ample": self.lower_bound_ample,
            "lower_bound_ci": self.lower_bound_ci,
            "lower_bound_surface": self.lower_bound_surface,
            "parity_even_required": self.parity_even_required,
            "excludes_27": self.excludes_27,
            "excludes_56": self.excludes_56,
            "violated": list(self.violated),
        }


def ample_lower_bound(g: int, d: int) -> int:
    return max(g, 2 ** min(d, math.isqrt(g - 1)))


def ci_lower_bound(g: int, d: int) -> int:
    return math.factorial(g) * math.comb(g - 1, d)


def euler_bounds(g: int, d: int, kind: str, e: Optional[int] = None) -> BoundReport:
    """Collect every bound that applies to a d-dimensional X in a g-dim A.

    Complete intersections have ample normal bundle, so they inherit that
    bound too.  An ample divisor has |e| = X^g, a multiple of g!.  If ``e`` is given, the report lists the violated bounds.
    """
    if kind not in KINDS:
        raise NumericsError(f"unknown kind {kind!r}")
    if not 1 <= d < g:
        raise OutOfRange(f"need 1 <= d < g, got d={d}, g={g}")
    if kind == "surface" and d != 2:
        raise OutOfRange("surface bound needs d = 2")
    lb_ample = ample_lower_bound(g, d) if kind != "surface" else None
    lb_ci = ci_lower_bound(g, d) if kind == "complete_intersection" else None
    lb_surf = 3 * g - 3 if kind == "surface" else None
    even = kind == "complete_intersection"
    ex27 = ex56 = False
    if kind == "complete_intersection":
        ex27 = True
        ex56 = (d, g) not in {(1, 2), (1, 3)}
    elif lb_ample is not None:
        ex27, ex56 = lb_ample > 27, lb_ample > 56
    report = BoundReport(g, d, kind, lb_ample, lb_ci, lb_surf, even, ex27, ex56)
    if e is not None:
        a = abs(e)
        if lb_ample is not None and a < lb_ample:
            report.violated.append("ample_normal_bundle_lower_bound")
        if lb_ci is not None and a < lb_ci:
            report.violated.append("complete_intersection_lower_bound")
        if even and e % 2:
            report.violated.append("parity")
        if kind == "complete_intersection" and d == g - 1 and e % math.factorial(g):
            report.violated.append("divisor_divisibility")
        if lb_surf is not None and e < lb_surf:
            report.violated.append("surface_lower_bound")
    return report


def sym_power_euler(genus: int, n: int, signed: bool = False) -> int:
    """|chi(Sym^n C)| = binom(2g-2, n); with ``signed`` the sign (-1)^n."""
    if genus < 2 or n < 1:
        raise OutOfRange(f"need genus >= 2 and n >= 1, got {genus}, {n}")
    v = math.comb(2 * genus - 2, n)
    return (-1) ** n * v if signed else v


def sympower_vs_ci_inequality(genus: int, n: int) -> bool:
    if genus < 4 or not 1 <= n or 2 * n > genus + 1:
        raise OutOfRange(f"need genus >= 4 and 1 <= n <= (g+1)/2, got {genus}, {n}")
    return math.comb(2 * genus - 2, n) < math.factorial(genus) * math.comb(genus - 1, n)


def gonality_bound(genus: int) -> int:
    if genus < 2:
        raise OutOfRange("genus must be at least 2")
    return (genus + 3) // 2


@dataclass(frozen=True)
class SymPowerCIReport:
    genus: int
    n: int
    bundle_ranks: tuple[int, ...]
    part1_holds: bool
    part2_applicable: bool
    part2_holds: Optional[bool]
    part2_lhs: int
    part2_rhs: int

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "n": self.n,
            "bundle_ranks": list(self.bundle_ranks),
            "part1_holds": self.part1_holds,
            "part2_applicable": self.part2_applicable,
            "part2_holds": self.part2_holds,
            "part2_lhs": self.part2_lhs,
            "part2_rhs": self.part2_rhs,
        }


def sympower_ci_tests(genus: int, n: int, bundle_ranks: Sequence[int]) -> SymPowerCIReport:
    """Necessary conditions for Sym^n C to be cut out by sections of bundles.

    Part (1): n <= max rank + 1.  Part (2), only for line bundles:
    2g - 3 >= 3(g - 2), which leaves g = 3.
    """
    ranks = tuple(int(k) for k in bundle_ranks)
    if genus < 3 or n < 2:
        raise OutOfRange(f"need genus >= 3 and n >= 2, got {genus}, {n}")
    if not ranks or any(k < 1 for k in ranks) or sum(ranks) != genus - n:
        raise RankMismatch(f"ranks {list(ranks)} must be positive and sum to {genus - n}")
    applicable = all(k == 1 for k in ranks)
    lhs, rhs = 2 * genus - 3, 3 * (genus - 2)
    return SymPowerCIReport(genus, n, ranks, n <= max(ranks) + 1, applicable,
                            lhs >= rhs if applicable else None, lhs, rhs)
