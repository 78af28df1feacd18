"""Operators on R(T) spanned by the divided differences of group elements.

Every operator built from divided differences, reflections, and
multiplications is R(G)-linear, and the family {partial_w : w in W} is a free
R(T)-basis for those operators. to_basis computes the coordinates u_w of an
operator expression in that basis by evaluating both sides on the Steinberg
basis of R(T) and solving the resulting |W| x |W| system exactly over the
fraction field of R(T), then clearing denominators (which must succeed; any
failure indicates a bug upstream, not bad input).

The augmentation ideal is the annihilator of 1; membership is the vanishing
of the coefficient sum because every partial_w sends 1 to 1. Invariance of an
element under the ideal reduces to the simple-root operators delta'_j: every
longer composition ends in some delta'_j, and the length-one compositions are
exactly the delta'_j themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, Mapping

from .charring import CharElt, divide_exact_general, weyl_act_simple
from .demazure import delta, delta_prime, partial, top
from .errors import NotDivisible, SolveFailed
from .repring import steinberg_basis
from .rootdata import RootDatum
from .weyl import WeylElt, weyl_group

__all__ = [
    "HeckeOp",
    "OpExpr",
    "apply",
    "to_basis",
    "in_augmentation_ideal",
    "is_ideal_invariant",
    "is_weyl_invariant",
]


class HeckeOp:
    """A finite R(T)-combination of the partial_w operators."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[WeylElt, CharElt]):
        self._coeffs = {w: u for w, u in coeffs.items() if u}

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HeckeOp):
            return self._coeffs == other._coeffs
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def items(self) -> Iterator[tuple[WeylElt, CharElt]]:
        return iter(sorted(self._coeffs.items(), key=lambda kv: (kv[0].length, kv[0].key)))

    def coefficient(self, w: WeylElt) -> CharElt:
        return self._coeffs.get(w, CharElt.zero())

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for w, u in self.items():
            word = ",".join(str(j) for j in w.word)
            parts.append(f"({u}) * D[{word}]")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"HeckeOp({str(self)})"

    def apply(self, datum: RootDatum, u: CharElt, strict: bool | None = None) -> CharElt:
        out = CharElt.zero()
        for w, coeff in self._coeffs.items():
            out = out + coeff * partial(datum, w, u, strict=strict)
        return out

    def coefficient_sum(self) -> CharElt:
        out = CharElt.zero()
        for u in self._coeffs.values():
            out = out + u
        return out

    def to_json(self) -> dict:
        return {
            "terms": [
                {"word": list(w.word), "coeff": u.to_json()} for w, u in self.items()
            ]
        }


@dataclass(frozen=True)
class OpAtom:
    kind: str  # "d" | "dp" | "w" | "top" | "m"
    index: int = 0
    elt: CharElt | None = field(default=None, compare=True)

    def apply(self, datum: RootDatum, u: CharElt, strict: bool | None = None) -> CharElt:
        if self.kind == "d":
            return delta(datum, self.index, u)
        if self.kind == "dp":
            return delta_prime(datum, self.index, u)
        if self.kind == "w":
            return weyl_act_simple(datum, self.index, u)
        if self.kind == "top":
            return top(datum, u, strict=strict)
        if self.kind == "m":
            assert self.elt is not None
            return self.elt * u
        raise ValueError(f"unknown operator atom {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "top":
            return "top"
        if self.kind == "m":
            return f"m[{self.elt}]"
        return f"{self.kind}[{self.index}]"


@dataclass(frozen=True)
class OpExpr:
    """A composition of operator atoms; the rightmost factor acts first."""

    atoms: tuple[OpAtom, ...]

    @classmethod
    def d(cls, j: int) -> "OpExpr":
        return cls((OpAtom("d", j),))

    @classmethod
    def dp(cls, j: int) -> "OpExpr":
        return cls((OpAtom("dp", j),))

    @classmethod
    def w(cls, j: int) -> "OpExpr":
        return cls((OpAtom("w", j),))

    @classmethod
    def top(cls) -> "OpExpr":
        return cls((OpAtom("top"),))

    @classmethod
    def m(cls, elt: CharElt) -> "OpExpr":
        return cls((OpAtom("m", elt=elt),))

    def __mul__(self, other: "OpExpr") -> "OpExpr":
        if not isinstance(other, OpExpr):
            return NotImplemented
        return OpExpr(self.atoms + other.atoms)

    def apply(self, datum: RootDatum, u: CharElt, strict: bool | None = None) -> CharElt:
        out = u
        for atom in reversed(self.atoms):
            out = atom.apply(datum, out, strict=strict)
        return out

    def __str__(self) -> str:
        return "*".join(str(a) for a in self.atoms) if self.atoms else "id"


def apply(datum: RootDatum, op: "HeckeOp | OpExpr", u: CharElt, strict: bool | None = None) -> CharElt:
    return op.apply(datum, u, strict=strict)


def _content(u: CharElt) -> int:
    g = 0
    for _, c in u.items():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def _div_int(u: CharElt, g: int) -> CharElt:
    if g == 1:
        return u
    return CharElt._raw({k: c // g for k, c in u.items()})


class _Frac:
    """A quotient of CharElts, normalized by integer content and by the sign
    of the denominator's lexicographically largest term. Not reduced to
    lowest terms; content normalization is enough to keep the solve small."""

    __slots__ = ("num", "den")

    def __init__(self, num: CharElt, den: CharElt):
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num = num
            self.den = CharElt.one(len(next(iter(den.support()))))
            return
        g = gcd(_content(num), _content(den))
        if g > 1:
            num = _div_int(num, g)
            den = _div_int(den, g)
        if den.coefficient(max(den.support())) < 0:
            num = -num
            den = -den
        self.num = num
        self.den = den

    @classmethod
    def of(cls, u: CharElt, rank: int) -> "_Frac":
        return cls(u, CharElt.one(rank))

    def weight(self) -> int:
        return len(self.num) + len(self.den)

    def add(self, other: "_Frac") -> "_Frac":
        return _Frac(self.num * other.den + other.num * self.den, self.den * other.den)

    def sub(self, other: "_Frac") -> "_Frac":
        return _Frac(self.num * other.den - other.num * self.den, self.den * other.den)

    def mul(self, other: "_Frac") -> "_Frac":
        if not self.num or not other.num:
            return _Frac(CharElt.zero(), self.den)
        return _Frac(self.num * other.num, self.den * other.den)

    def div(self, other: "_Frac") -> "_Frac":
        if not other.num:
            raise ZeroDivisionError("division by zero fraction")
        return _Frac(self.num * other.den, self.den * other.num)


def to_basis(datum: RootDatum, op: OpExpr, strict: bool | None = None) -> HeckeOp:
    """Coordinates of an operator expression in the divided-difference basis.

    Both sides of op = sum u_w partial_w are R(G)-linear, so equality on the
    Steinberg basis elements determines the u_w. Raises SolveFailed when the
    system is singular or a coordinate fails to clear its denominator; either
    means the free-basis guarantees were violated.
    """
    group = weyl_group(datum)
    basis = steinberg_basis(datum)
    elements = group.elements
    n = len(elements)
    rank = datum.rank
    rows: list[list[_Frac]] = []
    rhs: list[_Frac] = []
    for _, lam in basis.items():
        e_v = CharElt._raw({lam: 1})
        rows.append([_Frac.of(partial(datum, w, e_v, strict=strict), rank) for w in elements])
        rhs.append(_Frac.of(op.apply(datum, e_v, strict=strict), rank))
    used = [False] * n
    pivot_row: dict[int, int] = {}
    for col in range(n):
        cand = [i for i in range(n) if not used[i] and rows[i][col].num]
        if not cand:
            raise SolveFailed("singular evaluation matrix; basis is not free")
        i = min(cand, key=lambda r: rows[r][col].weight())
        used[i] = True
        pivot_row[col] = i
        pv = rows[i][col]
        rows[i] = [e.div(pv) for e in rows[i]]
        rhs[i] = rhs[i].div(pv)
        for r in range(n):
            if r != i and rows[r][col].num:
                f = rows[r][col]
                rows[r] = [a.sub(f.mul(b)) for a, b in zip(rows[r], rows[i])]
                rhs[r] = rhs[r].sub(f.mul(rhs[i]))
    coeffs: dict[WeylElt, CharElt] = {}
    for col, w in enumerate(elements):
        x = rhs[pivot_row[col]]
        if not x.num:
            continue
        try:
            coeffs[w] = divide_exact_general(x.num, x.den)
        except NotDivisible as exc:
            raise SolveFailed(
                f"coordinate of {w!r} does not lie in the character ring: {exc}"
            ) from exc
    return HeckeOp(coeffs)


def in_augmentation_ideal(datum: RootDatum, op: "HeckeOp | OpExpr") -> bool:
    """Whether the operator annihilates 1."""
    if isinstance(op, HeckeOp):
        return not op.coefficient_sum()
    return not op.apply(datum, CharElt.one(datum.rank), strict=False)


def is_ideal_invariant(
    datum: RootDatum, u: CharElt
) -> tuple[bool, tuple[int, CharElt] | None]:
    """Whether every augmentation-ideal operator kills u; checked on the
    generators delta'_j. On failure returns the witness (j, delta'_j(u))."""
    for j in range(1, datum.rank + 1):
        image = delta_prime(datum, j, u)
        if image:
            return False, (j, image)
    return True, None


def is_weyl_invariant(
    datum: RootDatum, u: CharElt
) -> tuple[bool, tuple[int, CharElt] | None]:
    """Whether u is fixed by W; checked on the simple reflections. On failure
    returns the witness (j, s_j(u))."""
    for j in range(1, datum.rank + 1):
        image = weyl_act_simple(datum, j, u)
        if image != u:
            return False, (j, image)
    return True, None
