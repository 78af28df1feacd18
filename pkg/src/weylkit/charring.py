"""The character ring R(T): integer Laurent combinations of torus characters.

An element is a finite map weight -> nonzero integer coefficient, stored as a
dict with tuple keys. Coefficients are Python ints, so all arithmetic is
exact at arbitrary size. Zero coefficients are never stored; equality is
plain dict equality; the canonical human-readable form lists terms in
lexicographically descending weight order (leading term first), while JSON
serialization lists them ascending.

>>> x = monomial((1,))
>>> (x + x**-1) * (x - x**-1) == x**2 - x**-2
True
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import NotDivisible
from .rootdata import Root, RootDatum, Weight
from .weyl import WeylElt, weyl_group

__all__ = [
    "CharElt",
    "monomial",
    "weyl_act",
    "weyl_act_simple",
    "divide_exact",
    "divide_exact_general",
    "weyl_denominator",
    "antisymmetrize",
]


class CharElt:
    """A virtual character of the maximal torus, as a sparse Laurent element."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Weight, int] = {}
        for weight, coeff in items:
            key = tuple(int(c) for c in weight)
            value = clean.get(key, 0) + int(coeff)
            if value:
                clean[key] = value
            else:
                clean.pop(key, None)
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict[Weight, int]) -> "CharElt":
        # trusted constructor: tuple keys, no zero values
        elt = cls.__new__(cls)
        elt._terms = terms
        return elt

    @classmethod
    def zero(cls) -> "CharElt":
        return cls._raw({})

    @classmethod
    def one(cls, rank: int) -> "CharElt":
        return cls._raw({(0,) * rank: 1})

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CharElt):
            return self._terms == other._terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> Iterator[tuple[Weight, int]]:
        return iter(self._terms.items())

    def support(self) -> tuple[Weight, ...]:
        return tuple(sorted(self._terms))

    def coefficient(self, weight: Sequence[int]) -> int:
        return self._terms.get(tuple(weight), 0)

    def __add__(self, other: "CharElt") -> "CharElt":
        if not isinstance(other, CharElt):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return CharElt._raw(out)

    def __sub__(self, other: "CharElt") -> "CharElt":
        if not isinstance(other, CharElt):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            v = out.get(key, 0) - c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return CharElt._raw(out)

    def __neg__(self) -> "CharElt":
        return CharElt._raw({k: -c for k, c in self._terms.items()})

    def __mul__(self, other: "CharElt | int") -> "CharElt":
        if isinstance(other, int):
            if not other:
                return CharElt.zero()
            return CharElt._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, CharElt):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Weight, int] = {}
        for mu, c in a.items():
            for nu, d in b.items():
                key = tuple(x + y for x, y in zip(mu, nu))
                v = out.get(key, 0) + c * d
                if v:
                    out[key] = v
                else:
                    del out[key]
        return CharElt._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CharElt":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._terms) == 1:
                ((mu, c),) = self._terms.items()
                if c in (1, -1):
                    key = tuple(n * x for x in mu)
                    return CharElt._raw({key: c if n % 2 else 1} if c == -1 else {key: 1})
            raise NotDivisible("negative powers exist only for unit monomials")
        if n == 0:
            if not self._terms:
                return CharElt._raw({(): 1})
            rank = len(next(iter(self._terms)))
            return CharElt.one(rank)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result  # type: ignore[return-value]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for mu in sorted(self._terms, reverse=True):
            c = self._terms[mu]
            mono = "e[" + ",".join(str(x) for x in mu) + "]"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"CharElt({str(self)})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"w": list(mu), "c": self._terms[mu]} for mu in sorted(self._terms)
            ]
        }

    @classmethod
    def from_json(cls, payload: Mapping) -> "CharElt":
        return cls((tuple(t["w"]), t["c"]) for t in payload["terms"])


def monomial(weight: Sequence[int], coeff: int = 1) -> CharElt:
    """The element coeff * e^weight."""
    if coeff == 0:
        return CharElt.zero()
    return CharElt._raw({tuple(int(c) for c in weight): int(coeff)})


def weyl_act(w: WeylElt, u: CharElt) -> CharElt:
    """w(e^mu) = e^{w mu}, extended additively; a ring automorphism."""
    mat = w.matrix
    out: dict[Weight, int] = {}
    for mu, c in u.items():
        key = tuple(sum(r * x for r, x in zip(row, mu)) for row in mat)
        out[key] = c
    return CharElt._raw(out)


def weyl_act_simple(datum: RootDatum, j: int, u: CharElt) -> CharElt:
    """Action of the simple reflection s_j."""
    out: dict[Weight, int] = {}
    for mu, c in u.items():
        out[datum.reflect_simple(j, mu)] = c
    return CharElt._raw(out)


def divide_exact(u: CharElt, root: Root) -> CharElt:
    """Exact division by (1 - e^{-alpha}); raises NotDivisible otherwise.

    Terms are grouped into Z*alpha cosets (the pairing with alpha-check
    separates positions inside a coset, so ties are impossible). On the line
    rep + k*alpha the factor acts by (q_k) -> (q_k - q_{k+1}), so the quotient
    is the top-down cumulative sum; the line divides exactly iff its
    coefficients sum to zero, which makes failure detection deterministic.
    """
    if not u:
        return CharElt.zero()
    alpha = root.weight_coords
    f = root.coroot
    cosets: dict[Weight, dict[int, int]] = {}
    for mu, c in u.items():
        t = sum(a * b for a, b in zip(f, mu))
        k = t // 2
        rep = tuple(m - k * a for m, a in zip(mu, alpha))
        cosets.setdefault(rep, {})[k] = c
    out: dict[Weight, int] = {}
    for rep, line in cosets.items():
        kmax = max(line)
        kmin = min(line)
        running = 0
        for k in range(kmax, kmin, -1):
            running += line.get(k, 0)
            if running:
                out[tuple(r + k * a for r, a in zip(rep, alpha))] = running
        if running + line[kmin]:
            raise NotDivisible(
                f"coset through {rep} has residue {running + line[kmin]}"
            )
    return CharElt._raw(out)


def divide_exact_general(numerator: CharElt, divisor: CharElt) -> CharElt:
    """Exact division by an arbitrary nonzero element, or NotDivisible.

    Long division on the lexicographically leading terms. Support bounds of a
    true quotient follow from additivity of componentwise extremes under
    multiplication, so any generated term outside that box proves
    indivisibility; this keeps termination unconditional.
    """
    if not divisor:
        raise ZeroDivisionError("division by the zero element")
    if not numerator:
        return CharElt.zero()
    rank = len(next(iter(divisor.items()))[0])
    n_sup = numerator.support()
    d_sup = divisor.support()
    lo = tuple(
        min(m[i] for m in n_sup) - min(m[i] for m in d_sup) for i in range(rank)
    )
    hi = tuple(
        max(m[i] for m in n_sup) - max(m[i] for m in d_sup) for i in range(rank)
    )
    lead_d = max(divisor._terms)
    cd = divisor._terms[lead_d]
    rem = dict(numerator._terms)
    quot: dict[Weight, int] = {}
    while rem:
        lead_r = max(rem)
        cr = rem[lead_r]
        if cr % cd:
            raise NotDivisible("leading coefficient does not divide")
        shift = tuple(a - b for a, b in zip(lead_r, lead_d))
        if any(s < l or s > h for s, l, h in zip(shift, lo, hi)):
            raise NotDivisible("quotient support escaped its bound")
        q = cr // cd
        quot[shift] = q
        for mu, c in divisor._terms.items():
            key = tuple(a + b for a, b in zip(shift, mu))
            v = rem.get(key, 0) - q * c
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return CharElt._raw(quot)


@lru_cache(maxsize=None)
def weyl_denominator(datum: RootDatum) -> CharElt:
    """d = prod over positive roots of (1 - e^{-alpha})."""
    result = CharElt.one(datum.rank)
    for root in datum.positive_roots:
        factor = CharElt.one(datum.rank) - monomial(tuple(-c for c in root.weight_coords))
        result = result * factor
    return result


def antisymmetrize(datum: RootDatum, u: CharElt) -> CharElt:
    """A(u) = sum over w of sign(w) e^{-rho} w(e^{rho} u).

    A(1) equals the Weyl denominator, and e^{rho} A(u) changes sign under
    every simple reflection.
    """
    rho = datum.weyl_vector
    shifted = {tuple(m + r for m, r in zip(mu, rho)): c for mu, c in u.items()}
    out: dict[Weight, int] = {}
    for w in weyl_group(datum):
        s = w.sign
        mat = w.matrix
        for mu, c in shifted.items():
            img = tuple(sum(r * x for r, x in zip(row, mu)) for row in mat)
            key = tuple(a - r for a, r in zip(img, rho))
            v = out.get(key, 0) + s * c
            if v:
                out[key] = v
            else:
                del out[key]
    return CharElt._raw(out)
