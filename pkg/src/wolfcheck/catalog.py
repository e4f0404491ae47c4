"""Names of the compact quaternionic Kaehler symmetric spaces and their expected dimensions.

A space is named either by its symmetric-space symbol (``G2(C^5)``,
``G4(R^9)``, ``G``, ``FI``, ``EII``, ``EVI``, ``EIX``), by its group
(``SU(5)``, ``Spin(9)``, ``Sp(4)``, ``G2``, ``E8``) or by the root system
type (``A4``, ``B4``).  Unicode spellings such as ``G₂(ℂ⁵)`` and ``G°₄(ℝ⁷)``
are accepted as well.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ConfigurationError
from .roots import RootSystemType

DEFAULT_MAX_RANK = 8

_TRANSLATE = str.maketrans(
    {
        "ℂ": "C", "ℝ": "R", "ℍ": "H", "°": "o", "º": "o", "ᵒ": "o",
        **{c: str(i) for i, c in enumerate("₀₁₂₃₄₅₆₇₈₉")},
        **{c: str(i) for i, c in enumerate("⁰¹²³⁴⁵⁶⁷⁸⁹")},
    }
)

_EXCEPTIONAL = {
    "G2": ("G", "G2"),
    "F4": ("FI", "F4"),
    "E6": ("EII", "E6"),
    "E7": ("EVI", "E7"),
    "E8": ("EIX", "E8"),
}

# dim M and the H(p) factor from the exceptional rows of the two tables
_EXCEPTIONAL_DIMS = {
    "G2": (8, 2, "S^2"),
    "F4": (28, 12, "Sp(3)/U(3)"),
    "E6": (40, 18, "G_3(C^6)"),
    "E7": (64, 30, "SO(12)/U(6)"),
    "E8": (112, 54, "E_7/(U(1).E_6)"),
}


@dataclass(frozen=True)
class SpaceSpec:
    """A catalog entry: symbol, group, root system type and the published dimensions."""

    name: str
    group: str
    rtype: RootSystemType
    published_dim_M: int | None
    published_dim_Hp: int | None
    published_Hp: str | None

    @property
    def published_dim_N(self) -> int | None:
        return None if self.published_dim_M is None else self.published_dim_M // 2

    @property
    def published_dim_Kp(self) -> int | None:
        # K(p) is H(p) times a 2-sphere, up to a finite quotient
        return None if self.published_dim_Hp is None else self.published_dim_Hp + 2

    def published_dims(self) -> dict[str, int | None]:
        return {
            "dim_M": self.published_dim_M,
            "dim_N": self.published_dim_N,
            "dim_Hp": self.published_dim_Hp,
            "dim_Kp": self.published_dim_Kp,
        }


def su(n: int) -> SpaceSpec:
    if n < 4:
        raise ConfigurationError(f"G2(C^n) requires n >= 4 (got SU({n}))")
    return SpaceSpec(f"G2(C^{n})", f"SU({n})", RootSystemType("A", n - 1), 4 * (n - 2), 2 * (n - 3), f"CP^{n - 3}")


def spin(n: int) -> SpaceSpec:
    if n < 7:
        raise ConfigurationError(f"Go4(R^n) requires n >= 7 (got Spin({n}))")
    rtype = RootSystemType("B", (n - 1) // 2) if n % 2 else RootSystemType("D", n // 2)
    if n == 7:
        hp, hp_name = 4, "S^2 x S^2"
    else:
        hp, hp_name = 2 + 2 * (n - 6), f"S^2 x Go2(R^{n - 4})"
    return SpaceSpec(f"Go4(R^{n})", f"Spin({n})", rtype, 4 * (n - 4), hp, hp_name)


def sp(n: int) -> SpaceSpec:
    if n < 3:
        raise ConfigurationError(f"G1(H^n) requires n >= 3 (got Sp({n}))")
    return SpaceSpec(f"G1(H^{n})", f"Sp({n})", RootSystemType("C", n), 4 * (n - 1), None, None)


def exceptional(family: str) -> SpaceSpec:
    sym, grp = _EXCEPTIONAL[family]
    dm, dh, hp_name = _EXCEPTIONAL_DIMS[family]
    return SpaceSpec(sym, grp, RootSystemType.parse(family), dm, dh, hp_name)


def _from_type(rtype: RootSystemType) -> SpaceSpec:
    f, r = rtype.family, rtype.rank
    if f == "A":
        return su(r + 1)
    if f == "B":
        return spin(2 * r + 1)
    if f == "D":
        return spin(2 * r)
    if f == "C":
        return sp(r)
    return exceptional(f)


def parse_space(text: str, max_rank: int | None = DEFAULT_MAX_RANK) -> SpaceSpec:
    """Resolve a space name, enforcing the rank bounds and the classical rank cap.

    ``max_rank=None`` lifts the cap on classical families.
    """
    t = text.strip().translate(_TRANSLATE).replace(" ", "").replace("_", "")
    spec = _parse(t, text)
    if max_rank is not None and spec.rtype.family in "ABCD" and spec.rtype.rank > max_rank:
        raise ConfigurationError(
            f"{spec.group} has rank {spec.rtype.rank} > {max_rank}; raise --max-rank to allow it"
        )
    return spec


def _parse(t: str, original: str) -> SpaceSpec:
    for fam, (sym, _) in _EXCEPTIONAL.items():
        if t == sym or t.upper() == fam:
            return exceptional(fam)
    m = re.fullmatch(r"(SU|Spin|SPIN|spin|Sp|SP|sp|su)\((\d+)\)", t)
    if m:
        g, n = m.group(1).lower(), int(m.group(2))
        return {"su": su, "spin": spin, "sp": sp}[g](n)
    m = re.fullmatch(r"G2\(C\^?(\d+)\)", t)
    if m:
        return su(int(m.group(1)))
    m = re.fullmatch(r"Go?4\(R\^?(\d+)\)", t)
    if m:
        return spin(int(m.group(1)))
    m = re.fullmatch(r"G1\(H\^?(\d+)\)", t)
    if m:
        return sp(int(m.group(1)))
    m = re.fullmatch(r"HP\^?(\d+)", t)
    if m:
        return sp(int(m.group(1)) + 1)
    if re.fullmatch(r"[ABCDabcd]\d+", t):
        return _from_type(RootSystemType.parse(t))
    raise ConfigurationError(f"unknown space {original!r}")


DEFAULT_CATALOG = ("A3", "A4", "A5", "A6", "B3", "B4", "B5", "D4", "D5", "G2", "F4", "E6", "E7", "E8")


def default_catalog() -> list[SpaceSpec]:
    return [parse_space(t) for t in DEFAULT_CATALOG]
