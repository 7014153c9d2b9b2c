"""Decide whether the Tannaka group of a subvariety X of an abelian variety
is big, from numerical data plus explicitly supplied geometric flags.

Geometric flags are tri-state: ``True``, ``False`` or ``None`` (unknown).
The classifier never guesses a flag; an unknown flag that matters yields an
Inconclusive verdict naming it.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Any, Mapping, Optional

from .numerics import euler_bounds
from .weights import MinusculeEntry, minuscule_candidates

TRI_FLAGS = (
    "symmetric_up_to_translation",
    "nondivisible",
    "constant_up_to_translation",
    "is_product",
    "is_sym_power_of_curve",
    "ample_normal_bundle",
    "complete_intersection",
)

PASS, FAIL, NA, UNKNOWN = "pass", "fail", "n/a", "unknown"


class ClassifierError(ValueError):
    pass


class ZeroEuler(ClassifierError):
    pass


class UnsupportedEntry(ClassifierError):
    pass


def parse_tristate(value: Any) -> Optional[bool]:
    if value is None or isinstance(value, bool):
        return value
    if isinstance(value, str):
        v = value.strip().lower()
        if v in ("true", "false"):
            return v == "true"
        if v == "unknown":
            return None
    raise ClassifierError(f"tri-state flag must be true/false/unknown, got {value!r}")


def _tristate_str(v: Optional[bool]) -> str:
    return "unknown" if v is None else str(v).lower()


@dataclass(frozen=True)
class SubvarietyDescriptor:
    g: int
    d: int
    e: int
    symmetric_up_to_translation: Optional[bool] = None
    nondivisible: Optional[bool] = None
    constant_up_to_translation: Optional[bool] = None
    is_product: Optional[bool] = None
    is_sym_power_of_curve: Optional[bool] = None
    ample_normal_bundle: Optional[bool] = None
    complete_intersection: Optional[bool] = None

    def __post_init__(self):
        for name in ("g", "d", "e"):
            if not isinstance(getattr(self, name), int) or isinstance(getattr(self, name), bool):
                raise ClassifierError(f"{name} must be an integer")
        if not 1 <= self.d < self.g:
            raise ClassifierError(f"need 1 <= d < g, got d={self.d}, g={self.g}")
        for name in TRI_FLAGS:
            object.__setattr__(self, name, parse_tristate(getattr(self, name)))
        if self.e == 0 and self.effective("ample_normal_bundle"):
            raise ClassifierError("ample normal bundle forces e != 0")

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "SubvarietyDescriptor":
        known = {f.name for f in fields(cls)}
        extra = set(data) - known
        if extra:
            raise ClassifierError(f"unknown descriptor keys {sorted(extra)}")
        missing = {"g", "d", "e"} - set(data)
        if missing:
            raise ClassifierError(f"missing descriptor keys {sorted(missing)}")
        return cls(**dict(data))

    def to_json(self) -> dict:
        out: dict[str, Any] = {"g": self.g, "d": self.d, "e": self.e}
        for name in TRI_FLAGS:
            out[name] = _tristate_str(getattr(self, name))
        return out

    def effective(self, name: str) -> Optional[bool]:
        """A flag after the few inferences that are theorems, not guesses.

        Curves are neither products nor symmetric powers of curves.  A
        complete intersection of ample divisors has ample normal bundle and
        is not a product; it is a symmetric power of a curve only for the
        theta divisor case d = 2, g = 3.
        """
        v = getattr(self, name)
        if v is not None:
            return v
        ci = self.complete_intersection is True
        if name in ("is_product", "is_sym_power_of_curve") and self.d == 1:
            return False
        if name == "ample_normal_bundle" and ci:
            return True
        if name == "is_product" and ci:
            return False
        if name == "is_sym_power_of_curve" and ci and (self.d, self.g) != (2, 3):
            return False
        return None


@dataclass(frozen=True)
class GateReport:
    clause_27: str
    clause_56: str
    clause_halfspin: str
    halfspin_m: Optional[int] = None

    @property
    def passed(self) -> bool:
        return all(s in (PASS, NA) for s in (self.clause_27, self.clause_56, self.clause_halfspin))

    def failing(self) -> list[str]:
        return [n for n in ("clause_27", "clause_56", "clause_halfspin")
                if getattr(self, n) in (FAIL, UNKNOWN)]

    def to_json(self) -> dict:
        return {
            "clause_27": self.clause_27,
            "clause_56": self.clause_56,
            "clause_halfspin": self.clause_halfspin,
            "halfspin_m": self.halfspin_m,
        }


def _halfspin_witness(desc: SubvarietyDescriptor) -> Optional[int]:
    a = abs(desc.e)
    for m in range(3, desc.d + 1):
        if (desc.d - m) % 2 == 0 and a == 2 ** (2 * m - 1):
            return m
    return None


def _clause(applies: bool, sym_needed: Optional[bool], sym: Optional[bool], hit: bool) -> str:
    if not applies or (sym is not None and sym != sym_needed):
        return NA
    if not hit:
        return PASS
    return FAIL if sym is not None else UNKNOWN


def numerical_gate(desc: SubvarietyDescriptor) -> GateReport:
    """The three numerical exclusions on |e|.

    A clause whose numeric value is hit but whose symmetry condition is
    unknown reports ``unknown``.
    """
    a, d, g = abs(desc.e), desc.d, desc.g
    sym = desc.symmetric_up_to_translation
    c27 = _clause(d >= 2, False, sym, a == 27)
    c56 = _clause(d >= 3 and d % 2 == 1, True, sym, a == 56)
    m = _halfspin_witness(desc)
    chs = _clause(4 * d >= g - 1 and d >= 3, True, sym, m is not None)
    return GateReport(c27, c56, chs, m if chs in (FAIL, UNKNOWN) else None)


@dataclass(frozen=True)
class CandidateGroup:
    entry: MinusculeEntry
    reason_kept: str
    excluded_by: Optional[str] = None

    def to_json(self) -> dict:
        return {"entry": self.entry.to_json(), "reason_kept": self.reason_kept,
                "excluded_by": self.excluded_by}


def _small(desc: SubvarietyDescriptor) -> bool:
    return 2 * desc.d < desc.g - 1


def _exclusion(desc: SubvarietyDescriptor, entry: MinusculeEntry,
               gate: GateReport) -> Optional[str]:
    d, g = desc.d, desc.g
    sym = desc.symmetric_up_to_translation
    if sym is True:
        if not entry.self_dual:
            return "duality"
        if entry.pairing != ("symmetric" if d % 2 == 0 else "alternating"):
            return "pairing_parity"
    n = entry.dynkin.rank
    if entry.kind == "halfspin" and n % 2 == 0 and (d - n // 2) % 2:
        return "halfspin_parity"
    if entry.kind == "E6" and gate.clause_27 == FAIL:
        return "clause_27"
    if entry.kind == "E7" and gate.clause_56 == FAIL:
        return "clause_56"
    if entry.kind == "halfspin" and gate.clause_halfspin == FAIL and n == 2 * (gate.halfspin_m or 0):
        return "clause_halfspin"
    if entry.kind == "E7" and d == 1 and g >= 3:
        return "curve_not_E7"
    if desc.effective("complete_intersection"):
        bounds = euler_bounds(g, d, "complete_intersection")
        if (entry.dim == 27 and bounds.excludes_27) or (entry.dim == 56 and bounds.excludes_56):
            return "complete_intersection_euler"
    small_ok = (_small(desc) and desc.effective("ample_normal_bundle") is True
                and desc.nondivisible is True)
    if small_ok:
        if entry.kind == "wedge" and entry.r >= 2 and desc.effective("is_sym_power_of_curve") is False:
            return "wedge_needs_sym_power"
        if entry.kind == "spin":
            return "no_small_spin_B"
        if entry.kind == "halfspin":
            m = n // 2
            if n % 2 or not (3 <= m <= d) or (d - m) % 2 or 4 * d < g - 1:
                return "no_small_spin_D"
    return None


def enumerate_candidates(desc: SubvarietyDescriptor) -> list[CandidateGroup]:
    """Minuscule (group, representation) pairs of dimension |e|."""
    if desc.e == 0:
        raise ZeroEuler("no candidates for e = 0")
    a = abs(desc.e)
    if a < 2:
        return []
    gate = numerical_gate(desc)
    out = []
    for entry in minuscule_candidates(a):
        why = _exclusion(desc, entry, gate)
        out.append(CandidateGroup(entry, f"dimension {a} in the minuscule table", why))
    return out


@dataclass(frozen=True)
class Verdict:
    status: str  # Big, NotBig, Inconclusive
    reasons: list[str]
    candidates: list[CandidateGroup] = field(default_factory=list)
    gate_report: Optional[GateReport] = None
    group: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "reasons": list(self.reasons),
            "group": self.group,
            "gate_report": self.gate_report.to_json() if self.gate_report else None,
            "candidates": [c.to_json() for c in self.candidates],
        }


# disqualifier name -> (flag, value that disqualifies)
_DISQUALIFIERS = (
    ("divisible", "nondivisible", False),
    ("product", "is_product", True),
    ("sym_power", "is_sym_power_of_curve", True),
    ("constant", "constant_up_to_translation", True),
)


def bigness_verdict(desc: SubvarietyDescriptor) -> Verdict:
    gate = numerical_gate(desc)
    cands = enumerate_candidates(desc) if desc.e else []
    pre = []
    if not _small(desc):
        pre.append("precondition:2d<g-1")
    anb = desc.effective("ample_normal_bundle")
    if anb is not True:
        pre.append(f"precondition:ample_normal_bundle={_tristate_str(anb)}")
    pre += [f"gate:{n}" for n in gate.failing()]
    if pre:
        return Verdict("Inconclusive", pre, cands, gate)
    hits = [name for name, flag, bad in _DISQUALIFIERS if desc.effective(flag) is bad]
    if hits:
        return Verdict("NotBig", hits, cands, gate)
    missing = [f"unknown:{flag}" for _, flag, _ in _DISQUALIFIERS if desc.effective(flag) is None]
    sym = desc.symmetric_up_to_translation
    if sym is None:
        missing.append("unknown:symmetric_up_to_translation")
    if missing:
        return Verdict("Inconclusive", missing, cands, gate)
    n = abs(desc.e)
    if sym is False:
        group = f"SL_{n}"
    elif desc.d % 2 == 0:
        group = f"SO_{n}"
    else:
        group = f"Sp_{n}"
    return Verdict("Big", ["main_theorem"], cands, gate, group)


def larsen_summand_count(entry: MinusculeEntry) -> dict:
    """Summands of V (x) V for the representations in the built-in table.

    ``square_kind`` names the square that carries the count: the full
    tensor square for SL, the alternating square for Sp and E7, the
    symmetric square for SO.
    """
    if entry.kind == "wedge" and entry.r == 1 and entry.dim >= 3:
        return {"nontrivial_summands": 2, "trivial_summands": 0, "square_kind": "full"}
    if entry.kind == "standard" and entry.dynkin.family == "C":
        return {"nontrivial_summands": 1, "trivial_summands": 1, "square_kind": "alt"}
    if entry.kind == "standard" and entry.dynkin.family == "D":
        return {"nontrivial_summands": 1, "trivial_summands": 1, "square_kind": "sym"}
    if entry.kind == "E7":
        return {"nontrivial_summands": 1, "trivial_summands": 1, "square_kind": "alt"}
    raise UnsupportedEntry(f"{entry.label} is outside the summand table")
