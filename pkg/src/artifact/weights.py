"""Weight-lattice arithmetic for the classical Dynkin types.

Weights are stored in doubled epsilon coordinates: the vector ``c`` stands
for the weight ``sum(c[i] / 2 * eps_i)``.  Spin weights therefore live in
plain integer arithmetic.  Type A_n uses ``n + 1`` coordinates modulo the
all-ones vector, canonicalized so that the smallest coordinate is zero.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

Coords = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "E6", "E7")
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


class WeightError(ValueError):
    pass


class NonDominant(WeightError):
    pass


class UnsupportedType(WeightError):
    pass


class TypeMismatch(WeightError):
    pass


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedType(f"unknown family {self.family!r}")
        if self.family in ("E6", "E7"):
            fixed = int(self.family[1])
            if self.rank != fixed:
                raise WeightError(f"{self.family} has rank {fixed}")
        elif self.rank < _MIN_RANK[self.family]:
            raise WeightError(
                f"family {self.family} needs rank >= {_MIN_RANK[self.family]}"
            )

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        """Parse names such as ``"A3"``, ``"D6"`` or ``"E7"``."""
        text = text.strip().upper()
        if text in ("E6", "E7"):
            return cls(text, int(text[1]))
        m = re.fullmatch(r"([ABCD])(\d+)", text)
        if not m:
            raise WeightError(f"cannot parse Dynkin type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    @property
    def n_coords(self) -> int:
        """Length of a doubled-coordinate vector for this type."""
        if self.family in ("E6", "E7"):
            raise UnsupportedType(f"{self.family} has no epsilon model here")
        return self.rank + 1 if self.family == "A" else self.rank

    def __str__(self) -> str:
        if self.family in ("E6", "E7"):
            return self.family
        return f"{self.family}{self.rank}"


def _canonical(dynkin: DynkinType, coords: Iterable[int]) -> Coords:
    c = tuple(int(x) for x in coords)
    if dynkin.family == "A" and c:
        lo = min(c)
        c = tuple(x - lo for x in c)
    return c


@dataclass(frozen=True, order=True)
class WeightVector:
    """A weight stored as doubled epsilon coordinates.

    Type A input is reduced modulo the all-ones vector on construction.
    """

    doubled_coords: Coords
    type_tag: DynkinType = field(compare=False)

    def __post_init__(self):
        n = self.type_tag.n_coords
        c = _canonical(self.type_tag, self.doubled_coords)
        if len(c) != n:
            raise WeightError(f"{self.type_tag} weights need {n} coordinates")
        if len({x % 2 for x in c}) > 1:
            raise WeightError("doubled coordinates must share one parity")
        if c and c[0] % 2 and self.type_tag.family in ("A", "C"):
            raise WeightError(f"type {self.type_tag.family} has no spin weights")
        object.__setattr__(self, "doubled_coords", c)

    def is_dominant(self) -> bool:
        return is_dominant(self.type_tag, self.doubled_coords)


def is_dominant(dynkin: DynkinType, c: Coords) -> bool:
    if any(c[i] < c[i + 1] for i in range(len(c) - 2)):
        return False
    if len(c) < 2:
        return dynkin.family == "A" or all(x >= 0 for x in c)
    last_ok = c[-2] >= c[-1]
    if dynkin.family == "A":
        return last_ok
    if dynkin.family == "D":
        return c[-2] >= abs(c[-1])
    return last_ok and c[-1] >= 0


@dataclass(frozen=True)
class WeightMultiset:
    """Sorted ``(coords, mult)`` pairs sharing one Dynkin type."""

    dynkin: DynkinType
    entries: tuple[tuple[Coords, int], ...]

    @classmethod
    def from_counter(cls, dynkin: DynkinType, counts: Counter) -> "WeightMultiset":
        merged: Counter = Counter()
        for c, m in counts.items():
            if m < 0:
                raise WeightError("negative multiplicity")
            if m:
                merged[_canonical(dynkin, c)] += m
        return cls(dynkin, tuple(sorted(merged.items())))

    @classmethod
    def from_weights(cls, dynkin: DynkinType, coords: Iterable[Iterable[int]]):
        return cls.from_counter(dynkin, Counter(tuple(c) for c in coords))

    def counter(self) -> Counter:
        return Counter(dict(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[Coords, int]]:
        return iter(self.entries)

    @property
    def dim(self) -> int:
        return sum(m for _, m in self.entries)

    def multiplicity(self, coords: Iterable[int]) -> int:
        return self.counter().get(_canonical(self.dynkin, coords), 0)

    def to_json(self) -> list[dict]:
        return [{"coords": list(c), "mult": m} for c, m in self.entries]


def stabilizer_count(alpha: Iterable[int]) -> int:
    """N(alpha): product of factorials of the value multiplicities."""
    out = 1
    for k in Counter(alpha).values():
        out *= math.factorial(k)
    return out


def _signed_images(n: int, ell: int, parity: Optional[int]):
    """Maps {0..ell-1} -> {+-1..+-n} with injective absolute value.

    ``parity`` restricts the number of minus signs mod 2 (None: no rule).
    """
    for perm in itertools.permutations(range(n), ell):
        for signs in itertools.product((1, -1), repeat=ell):
            if parity is not None and signs.count(-1) % 2 != parity:
                continue
            yield perm, signs


def _distinct_perms(values: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    counts = Counter(values)
    keys = sorted(counts)
    n = len(values)
    out: list[int] = []

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out.append(k)
                yield from rec()
                out.pop()
                counts[k] += 1

    return rec()


def _orbit_setup(dynkin: DynkinType, w: WeightVector):
    if dynkin.family in ("E6", "E7"):
        raise UnsupportedType("no orbit enumeration for exceptional types")
    if w.type_tag != dynkin:
        raise TypeMismatch(f"weight of {w.type_tag} passed for {dynkin}")
    c = w.doubled_coords
    if not is_dominant(dynkin, c):
        raise NonDominant(f"{list(c)} is not dominant for {dynkin}")
    alpha = tuple(x for x in c if x != 0)
    parity = None
    if dynkin.family == "D" and len(alpha) == len(c):
        # even sign changes of (a_1, .., a_{n-1}, |a_n|); odd if a_n < 0
        parity = 1 if alpha[-1] < 0 else 0
        alpha = alpha[:-1] + (abs(alpha[-1]),)
    return len(c), alpha, parity


def orbit_hits(dynkin: DynkinType, w: WeightVector) -> Counter:
    """How often each weight arises from the injection enumeration.

    Type A sums ``alpha_nu eps_iota(nu)`` over injections iota; the other
    types use signed injections, restricted to a fixed sign parity for D
    when no coordinate vanishes.  Every weight of the orbit is hit exactly
    N(alpha) times.
    """
    n, alpha, parity = _orbit_setup(dynkin, w)
    ell = len(alpha)
    hits: Counter = Counter()
    if dynkin.family == "A":
        for perm in itertools.permutations(range(n), ell):
            v = [0] * n
            for a, i in zip(alpha, perm):
                v[i] = a
            hits[tuple(v)] += 1
        return hits
    for perm, signs in _signed_images(n, ell, parity):
        v = [0] * n
        for a, i, s in zip(alpha, perm, signs):
            v[i] = s * a
        hits[tuple(v)] += 1
    return hits


def weyl_orbit(dynkin: DynkinType, w: WeightVector, check: bool = False) -> WeightMultiset:
    """Full Weyl orbit of a dominant weight, every multiplicity 1.

    Orbit points are produced once each, from coset representatives of the
    injections (distinct arrangements of the padded weight).  With
    ``check`` the full injection enumeration is run as well and every
    weight is asserted to be hit exactly N(alpha) times.
    """
    n, alpha, parity = _orbit_setup(dynkin, w)
    padded = alpha + (0,) * (n - len(alpha))
    found = set()
    for arr in _distinct_perms(padded):
        if dynkin.family == "A":
            found.add(arr)
            continue
        support = [i for i, x in enumerate(arr) if x]
        for signs in itertools.product((1, -1), repeat=len(support)):
            if parity is not None and signs.count(-1) % 2 != parity:
                continue
            v = list(arr)
            for i, s in zip(support, signs):
                v[i] *= s
            found.add(tuple(v))
    if check:
        hits = orbit_hits(dynkin, w)
        stab = stabilizer_count(alpha)
        bad = {m for m in hits.values() if m != stab}
        if bad or set(hits) != found:
            raise AssertionError(f"injection overcount {bad or '?'} differs from N = {stab}")
    return WeightMultiset.from_counter(dynkin, Counter({v: 1 for v in found}))


def tensor_weights(a: WeightMultiset, b: WeightMultiset) -> WeightMultiset:
    if a.dynkin != b.dynkin:
        raise TypeMismatch(f"{a.dynkin} vs {b.dynkin}")
    out: Counter = Counter()
    for ca, ma in a.entries:
        for cb, mb in b.entries:
            out[tuple(x + y for x, y in zip(ca, cb))] += ma * mb
    return WeightMultiset.from_counter(a.dynkin, out)


def square_weights(a: WeightMultiset) -> tuple[WeightMultiset, WeightMultiset]:
    """Weights of the symmetric and alternating squares."""
    sym: Counter = Counter()
    alt: Counter = Counter()
    ents = a.entries
    for i, (ci, mi) in enumerate(ents):
        double = tuple(2 * x for x in ci)
        sym[double] += mi * (mi + 1) // 2
        alt[double] += mi * (mi - 1) // 2
        for cj, mj in ents[i + 1:]:
            s = tuple(x + y for x, y in zip(ci, cj))
            sym[s] += mi * mj
            alt[s] += mi * mj
    return (WeightMultiset.from_counter(a.dynkin, sym),
            WeightMultiset.from_counter(a.dynkin, alt))


def multiset_difference(a: WeightMultiset, b: WeightMultiset) -> WeightMultiset:
    """``a - b``; raises if ``b`` is not contained in ``a``."""
    if a.dynkin != b.dynkin:
        raise TypeMismatch(f"{a.dynkin} vs {b.dynkin}")
    out = a.counter()
    for c, m in b.entries:
        if out[c] < m:
            raise WeightError(f"{list(c)} missing from the minuend")
        out[c] -= m
    return WeightMultiset.from_counter(a.dynkin, out)


def is_minuscule(dynkin: DynkinType, ws: WeightMultiset) -> bool:
    if ws.dynkin != dynkin:
        raise TypeMismatch(f"{ws.dynkin} vs {dynkin}")
    if not ws.entries:
        raise WeightError("empty weight multiset")
    if any(m != 1 for _, m in ws.entries):
        return False
    dominant = [c for c, _ in ws.entries if is_dominant(dynkin, c)]
    if len(dominant) != 1:
        return False
    top = WeightVector(dominant[0], dynkin)
    return weyl_orbit(dynkin, top) == ws


# --- the table of minuscule representations ---------------------------------

@dataclass(frozen=True)
class MinusculeEntry:
    dynkin: DynkinType
    kind: str  # wedge, standard, spin, halfspin, E6, E7
    dim: int
    self_dual: bool
    pairing: str  # symmetric, alternating, none
    highest_weight: Optional[WeightVector] = None
    r: int = 1
    paired: bool = False  # dual partner (wedge n-r, other half-spin) folded in

    @property
    def label(self) -> str:
        n = self.dynkin.rank
        if self.kind == "wedge":
            if self.r == 1:
                return f"SL_{n + 1} standard"
            return f"SL_{n + 1} wedge {self.r}"
        if self.kind == "standard":
            return f"Sp_{2 * n} standard" if self.dynkin.family == "C" else f"SO_{2 * n} standard"
        if self.kind == "spin":
            return f"Spin_{2 * n + 1} spin"
        if self.kind == "halfspin":
            return f"Spin_{2 * n} half-spin"
        return f"{self.kind} {self.dim}"

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "type": str(self.dynkin),
            "kind": self.kind,
            "dim": self.dim,
            "self_dual": self.self_dual,
            "pairing": self.pairing,
            "highest_weight": (list(self.highest_weight.doubled_coords)
                               if self.highest_weight else None),
            "paired": self.paired,
        }


def _pairing_mod4(n: int, symmetric: tuple[int, ...]) -> str:
    return "symmetric" if n % 4 in symmetric else "alternating"


def wedge_entry(N: int, r: int) -> MinusculeEntry:
    dyn = DynkinType("A", N - 1)
    hw = WeightVector((2,) * r + (0,) * (N - r), dyn)
    sd = 2 * r == N
    pairing = ("symmetric" if r % 2 == 0 else "alternating") if sd else "none"
    return MinusculeEntry(dyn, "wedge", math.comb(N, r), sd, pairing, hw, r,
                          paired=not sd)


def spin_entry(n: int) -> MinusculeEntry:
    dyn = DynkinType("B", n)
    return MinusculeEntry(dyn, "spin", 2 ** n, True, _pairing_mod4(n, (0, 3)),
                          WeightVector((1,) * n, dyn))


def standard_entry(family: str, n: int) -> MinusculeEntry:
    dyn = DynkinType(family, n)
    pairing = "alternating" if family == "C" else "symmetric"
    return MinusculeEntry(dyn, "standard", 2 * n, True, pairing,
                          WeightVector((2,) + (0,) * (n - 1), dyn))


def halfspin_entry(n: int, sign: int = 1) -> MinusculeEntry:
    dyn = DynkinType("D", n)
    sd = n % 2 == 0
    pairing = _pairing_mod4(n, (0,)) if sd else "none"
    hw = WeightVector((1,) * (n - 1) + (sign,), dyn)
    return MinusculeEntry(dyn, "halfspin", 2 ** (n - 1), sd, pairing, hw,
                          paired=True)


E6_ENTRY = MinusculeEntry(DynkinType("E6", 6), "E6", 27, False, "none", paired=True)
E7_ENTRY = MinusculeEntry(DynkinType("E7", 7), "E7", 56, True, "alternating")


def _exact_log2(x: int) -> Optional[int]:
    if x > 0 and x & (x - 1) == 0:
        return x.bit_length() - 1
    return None


def _wedge_solutions(dim: int) -> list[tuple[int, int]]:
    out = []
    r = 1
    while 2 * r <= dim and math.comb(2 * r, r) <= dim:
        lo, hi = 2 * r, dim
        while lo < hi:  # smallest N with comb(N, r) >= dim
            mid = (lo + hi) // 2
            if math.comb(mid, r) < dim:
                lo = mid + 1
            else:
                hi = mid
        if math.comb(lo, r) == dim:
            out.append((lo, r))
        r += 1
    return out


def minuscule_candidates(dim: int, require_self_dual: bool = False,
                         pairing: Optional[str] = None) -> list[MinusculeEntry]:
    """Table entries of the given dimension, optionally filtered."""
    if dim < 2:
        raise WeightError("dimension must be at least 2")
    if pairing not in (None, "symmetric", "alternating"):
        raise WeightError(f"bad pairing {pairing!r}")
    found = [wedge_entry(N, r) for N, r in _wedge_solutions(dim)]
    if dim % 2 == 0 and dim // 2 >= 2:
        found.append(standard_entry("C", dim // 2))
        if dim // 2 >= 3:
            found.append(standard_entry("D", dim // 2))
    k = _exact_log2(dim)
    if k is not None:
        if k >= 2:
            found.append(spin_entry(k))
        if k + 1 >= 3:
            found.append(halfspin_entry(k + 1))
    if dim == 27:
        found.append(E6_ENTRY)
    if dim == 56:
        found.append(E7_ENTRY)
    if require_self_dual or pairing is not None:
        found = [e for e in found if e.self_dual]
    if pairing is not None:
        found = [e for e in found if e.pairing == pairing]
    return found


def named_weight(dynkin: DynkinType, name: str) -> WeightVector:
    """Symbolic weights: standard, spin, halfspin+, halfspin-, wedge:r."""
    n = dynkin.rank
    name = name.strip().lower()
    if dynkin.family in ("E6", "E7"):
        raise UnsupportedType("no epsilon model for exceptional types")
    if name == "standard":
        if dynkin.family == "A":
            return WeightVector((2,) + (0,) * n, dynkin)
        return WeightVector((2,) + (0,) * (n - 1), dynkin)
    if name == "spin" and dynkin.family in ("B", "D"):
        return WeightVector((1,) * n, dynkin)
    if name in ("halfspin+", "halfspin-") and dynkin.family == "D":
        return WeightVector((1,) * (n - 1) + (1 if name[-1] == "+" else -1,), dynkin)
    m = re.fullmatch(r"wedge:(\d+)", name)
    if m and dynkin.family == "A" and 0 <= int(m.group(1)) <= n + 1:
        r = int(m.group(1))
        return WeightVector((2,) * r + (0,) * (n + 1 - r), dynkin)
    raise WeightError(f"weight {name!r} not defined for {dynkin}")


def minuscule_weights(dynkin: DynkinType) -> list[WeightVector]:
    """Highest weights of all nontrivial minuscule representations."""
    n = dynkin.rank
    f = dynkin.family
    if f == "A":
        return [named_weight(dynkin, f"wedge:{r}") for r in range(1, n + 1)]
    if f == "B":
        return [named_weight(dynkin, "spin")]
    if f == "C":
        return [named_weight(dynkin, "standard")]
    if f == "D":
        return [named_weight(dynkin, w) for w in ("standard", "halfspin+", "halfspin-")]
    raise UnsupportedType("no epsilon model for exceptional types")
