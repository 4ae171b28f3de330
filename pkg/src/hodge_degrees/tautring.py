"""Divisor classes on n-pointed spaces of cyclic admissible covers.

A :class:`DivisorClass` is a finite rational combination of three kinds of
symbols: boundary divisors ``Boundary(J)``, psi classes ``Psi(j)`` and
``Kappa1``. Classes are only ever paired with boundary curves, never
multiplied with each other.

The generic boundary symbol ``Delta_J`` of a graph formula maps to these as

* ``2 <= |J| <= n-2``: ``Boundary(J)``,
* ``J = {j}`` or ``J = [n] - {j}``: ``-Psi(j)``,
* ``J`` empty or ``J = [n]``: ``Kappa1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Iterable, Iterator, Mapping

from .boundary import BoundaryCurve, enumerate_boundary_curves
from .degrees import lambda1_degree, lambda1e_degree
from .monodromy import InvalidDatumError, MonodromyDatum, induced_datum
from .numeric import format_rational, parse_rational

__all__ = [
    "DivisorSymbol",
    "DivisorClass",
    "boundary",
    "psi",
    "KAPPA1",
    "delta",
    "graph_formula_lambda1",
    "graph_formula_lambda1e_question",
    "pair",
    "canonicalize",
    "evaluate_degree_4pt",
    "PairingCheck",
    "check_graph_formula",
    "check_candidate_formula",
    "BoundaryCurve",
    "enumerate_boundary_curves",
]

_KIND_ORDER = {"B": 0, "P": 1, "K": 2}


def _mask(points: Iterable[int]) -> int:
    out = 0
    for p in points:
        out |= 1 << (p - 1)
    return out


@dataclass(frozen=True, order=False)
class DivisorSymbol:
    """``kind`` is ``"B"`` (indices = J), ``"P"`` (indices = (j,)) or ``"K"`` (no indices)."""

    kind: str
    indices: tuple[int, ...] = ()
    mask: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown divisor symbol kind {self.kind!r}")
        idx = tuple(sorted(self.indices))
        if len(set(idx)) != len(idx):
            raise ValueError(f"repeated index in {idx}")
        if self.kind == "P" and len(idx) != 1:
            raise ValueError("Psi takes exactly one index")
        if self.kind == "K" and idx:
            raise ValueError("Kappa1 takes no index")
        object.__setattr__(self, "indices", idx)
        object.__setattr__(self, "mask", _mask(idx))

    def sort_key(self) -> tuple:
        return (_KIND_ORDER[self.kind], len(self.indices), self.indices)

    def check(self, n: int) -> None:
        if any(not 1 <= j <= n for j in self.indices):
            raise ValueError(f"{self} has an index outside 1..{n}")
        if self.kind == "B" and not 2 <= len(self.indices) <= n - 2:
            raise ValueError(f"boundary subset {set(self.indices)} needs 2 <= |J| <= {n - 2}")

    def __str__(self) -> str:
        if self.kind == "B":
            return "D{" + ",".join(map(str, self.indices)) + "}"
        if self.kind == "P":
            return f"psi{self.indices[0]}"
        return "kappa1"


def boundary(J: Iterable[int]) -> DivisorSymbol:
    return DivisorSymbol("B", tuple(J))


def psi(j: int) -> DivisorSymbol:
    return DivisorSymbol("P", (j,))


KAPPA1 = DivisorSymbol("K")


def delta(J: Iterable[int], n: int) -> tuple[DivisorSymbol, int]:
    """Translate ``Delta_J`` into ``(symbol, sign)``."""
    J = frozenset(J)
    if not J <= frozenset(range(1, n + 1)):
        raise ValueError(f"{set(J)} is not a subset of 1..{n}")
    if len(J) in (0, n):
        return KAPPA1, 1
    if len(J) == 1:
        return psi(next(iter(J))), -1
    if len(J) == n - 1:
        (j,) = set(range(1, n + 1)) - J
        return psi(j), -1
    return boundary(J), 1


@dataclass(frozen=True)
class DivisorClass:
    n: int
    d: int
    terms: tuple[tuple[DivisorSymbol, Fraction], ...]

    def __post_init__(self):
        merged: dict[DivisorSymbol, Fraction] = {}
        for sym, c in self.terms:
            sym.check(self.n)
            merged[sym] = merged.get(sym, Fraction(0)) + Fraction(c)
        terms = tuple(
            (sym, c) for sym, c in sorted(merged.items(), key=lambda t: t[0].sort_key()) if c
        )
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_mapping(cls, n: int, d: int, terms: Mapping[DivisorSymbol, Fraction]) -> "DivisorClass":
        return cls(n, d, tuple(terms.items()))

    @classmethod
    def zero(cls, n: int, d: int) -> "DivisorClass":
        return cls(n, d, ())

    def as_dict(self) -> dict[DivisorSymbol, Fraction]:
        return dict(self.terms)

    def coefficient(self, sym: DivisorSymbol) -> Fraction:
        return self.as_dict().get(sym, Fraction(0))

    def _same_space(self, other: "DivisorClass") -> None:
        if (self.n, self.d) != (other.n, other.d):
            raise ValueError(f"classes live on different spaces: (n={self.n}, d={self.d}) vs (n={other.n}, d={other.d})")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._same_space(other)
        return DivisorClass(self.n, self.d, self.terms + other.terms)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.n, self.d, tuple((s, -c) for s, c in self.terms))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __rmul__(self, scalar) -> "DivisorClass":
        scalar = Fraction(scalar)
        return DivisorClass(self.n, self.d, tuple((s, scalar * c) for s, c in self.terms))

    __mul__ = __rmul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({format_rational(c)})*{s}" for s, c in self.terms)

    def to_json_obj(self) -> dict:
        out = []
        for sym, c in self.terms:
            entry: dict = {"sym": sym.kind}
            if sym.kind == "B":
                entry["J"] = list(sym.indices)
            elif sym.kind == "P":
                entry["j"] = sym.indices[0]
            entry["c"] = format_rational(c)
            out.append(entry)
        return {"n": self.n, "d": self.d, "terms": out}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_json_obj(), **kwargs)

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "DivisorClass":
        terms = []
        for entry in obj["terms"]:
            kind = entry["sym"]
            if kind == "B":
                sym = boundary(entry["J"])
            elif kind == "P":
                sym = psi(entry["j"])
            elif kind == "K":
                sym = KAPPA1
            else:
                raise ValueError(f"unknown symbol kind {kind!r}")
            terms.append((sym, parse_rational(entry["c"])))
        return cls(int(obj["n"]), int(obj["d"]), tuple(terms))

    @classmethod
    def from_json(cls, text: str) -> "DivisorClass":
        return cls.from_json_obj(json.loads(text))


@lru_cache(maxsize=None)
def _delta_table(n: int) -> tuple[tuple[int, tuple[int, ...], DivisorSymbol, int], ...]:
    """``(mask, J, symbol, sign)`` for every subset J of 1..n."""
    out = []
    for mask in range(1 << n):
        J = tuple(i + 1 for i in range(n) if mask >> i & 1)
        sym, sign = delta(J, n)
        out.append((mask, J, sym, sign))
    return tuple(out)


def graph_formula_lambda1(datum: MonodromyDatum) -> DivisorClass:
    """lambda_1 as ``(1/24d) * sum over all J of gcd^2(sum_J m, d) * Delta_J``.

    J runs over the full power set, so each boundary divisor is reached from
    both J and its complement and ends up with twice the single-J weight.
    """
    n, d = datum.n, datum.d
    if n < 4:
        raise InvalidDatumError(f"graph formulas need n >= 4, got n = {n}")
    terms = []
    for _, J, sym, sign in _delta_table(n):
        weight = gcd(sum(datum.m[j - 1] for j in J), d) ** 2
        terms.append((sym, Fraction(sign * weight, 24 * d)))
    return DivisorClass(n, d, tuple(terms))


def graph_formula_lambda1e_question(datum: MonodromyDatum, e: int) -> DivisorClass:
    """Conjectural 4-pointed graph formula for lambda_1^e.

    Coefficient of ``Delta_I`` is ``min{0, 1 - sum_{i in I} <e m_i/d>} / 2``.
    """
    if datum.n != 4:
        raise InvalidDatumError(f"the lambda_1^e graph formula is only stated for n = 4, got {datum.n}")
    d = datum.d
    if not 0 <= e < d:
        raise InvalidDatumError(f"character e={e} out of range [0, {d})")
    residues = [e * x % d for x in datum.m]
    terms = []
    for _, I, sym, sign in _delta_table(4):
        # 1 - sum of ages, times d
        slack = d - sum(residues[i - 1] for i in I)
        if slack < 0:
            terms.append((sym, Fraction(sign * slack, 2 * d)))
    return DivisorClass(4, d, tuple(terms))


def _pair_sign(block_masks: tuple[int, ...], sym: DivisorSymbol) -> int:
    """``d * (C . sym)``: the sign (-1)^|I| when J is the union of the blocks
    indexed by I, and 0 when J cuts a block."""
    if sym.kind == "K":
        return 1
    if sym.kind == "P":
        return 1 if sym.mask in block_masks else 0
    J = sym.mask
    inside = 0
    for b in block_masks:
        hit = J & b
        if hit == b:
            inside += 1
        elif hit:
            return 0
    return -1 if inside % 2 else 1


def pair(curve: BoundaryCurve, cls: DivisorClass) -> Fraction:
    """Intersection number of a boundary curve with a divisor class."""
    if curve.n != cls.n:
        raise ValueError(f"curve on {curve.n} points cannot meet a class on n = {cls.n}")
    block_masks = tuple(_mask(b) for b in curve.blocks)
    # exact sum, grouped by denominator to keep Fraction arithmetic off the hot path
    by_den: dict[int, int] = {}
    for sym, c in cls.terms:
        sign = _pair_sign(block_masks, sym)
        if sign:
            by_den[c.denominator] = by_den.get(c.denominator, 0) + sign * c.numerator
    total = sum((Fraction(num, den) for den, num in by_den.items()), Fraction(0))
    return total / cls.d


def canonicalize(cls: DivisorClass) -> DivisorClass:
    """Merge ``Boundary(J)`` into ``Boundary(J^c)`` so every boundary subset contains 1."""
    full = set(range(1, cls.n + 1))
    terms = []
    for sym, c in cls.terms:
        if sym.kind == "B" and 1 not in sym.indices:
            sym = boundary(full - set(sym.indices))
        terms.append((sym, c))
    return DivisorClass(cls.n, cls.d, tuple(terms))


def evaluate_degree_4pt(cls: DivisorClass) -> Fraction:
    """Degree on a one-dimensional (n = 4) space; every symbol has degree 1/d."""
    if cls.n != 4:
        raise ValueError(f"degree evaluation needs n = 4, got n = {cls.n}")
    return sum((c for _, c in cls.terms), Fraction(0)) / cls.d


@lru_cache(maxsize=None)
def _all_curves(n: int) -> tuple[BoundaryCurve, ...]:
    return tuple(enumerate_boundary_curves(n))


@dataclass(frozen=True)
class PairingCheck:
    curve: BoundaryCurve
    induced: MonodromyDatum
    paired: Fraction
    expected: Fraction

    @property
    def ok(self) -> bool:
        return self.paired == self.expected

    @property
    def geometric_caveat(self) -> bool:
        # the induced datum is disconnected: closed form applied arithmetically
        return not self.induced.is_connected()


def check_graph_formula(datum: MonodromyDatum) -> list[PairingCheck]:
    """Pair the lambda_1 graph formula with every boundary curve and compare
    with the closed-form degree on the induced 4-pointed datum."""
    cls = graph_formula_lambda1(datum)
    out = []
    for curve in _all_curves(datum.n):
        sub = induced_datum(datum, curve)
        out.append(PairingCheck(curve, sub, pair(curve, cls), lambda1_degree(sub)))
    return out


def check_candidate_formula(
    candidate: Callable[[MonodromyDatum, int], DivisorClass],
    datum: MonodromyDatum,
    e: int,
) -> list[PairingCheck]:
    """Test a candidate n-pointed graph formula for lambda_1^e against boundary curves.

    Experimental. Curves whose induced datum is disconnected are skipped,
    since no closed form for lambda_1^e is available there.
    """
    cls = candidate(datum, e)
    out = []
    for curve in _all_curves(datum.n):
        sub = induced_datum(datum, curve)
        if not sub.is_connected():
            continue
        out.append(PairingCheck(curve, sub, pair(curve, cls), lambda1e_degree(sub, e)))
    return out
