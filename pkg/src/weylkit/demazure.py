"""Divided-difference (Demazure) operators on the character ring.

For a simple root alpha:

    delta_alpha(u)       = (u - e^{-alpha} s_alpha(u)) / (1 - e^{-alpha})
    delta_prime_alpha(u) = (u - s_alpha(u)) / (1 - e^{-alpha})

Both divisions are exact for every u. delta is idempotent with delta(1) = 1;
delta_prime is idempotent with delta_prime(1) = 0; delta = delta_prime + s.
Compositions along a reduced word depend only on the group element, which
strict mode verifies by recomputing along every reduced word. The operator
for the longest element projects onto Weyl invariants and agrees with the
quotient A(u)/d of the antisymmetrization by the Weyl denominator (the Weyl
character formula route); `top` can compute either or both.
"""

from __future__ import annotations

from .config import resolve_strict
from .charring import (
    CharElt,
    antisymmetrize,
    divide_exact,
    monomial,
    weyl_act_simple,
)
from .errors import InternalInvariantError, WordMismatch
from .rootdata import Root, RootDatum
from .weyl import WeylElt, weyl_group

__all__ = [
    "delta",
    "delta_prime",
    "partial",
    "partial_prime",
    "alternating_quotient",
    "top",
]


def _simple_index(datum: RootDatum, alpha: int | Root) -> int:
    if isinstance(alpha, Root):
        ones = [i for i, c in enumerate(alpha.root_coords) if c]
        if len(ones) != 1 or alpha.root_coords[ones[0]] != 1:
            raise ValueError("divided differences accept simple roots only")
        return ones[0] + 1
    datum._check_index(alpha)
    return alpha


def delta(datum: RootDatum, alpha: int | Root, u: CharElt) -> CharElt:
    """The isobaric divided difference for a simple root (index or Root)."""
    j = _simple_index(datum, alpha)
    root = datum.simple_root(j)
    reflected = weyl_act_simple(datum, j, u)
    shift = monomial(tuple(-c for c in root.weight_coords))
    return divide_exact(u - shift * reflected, root)


def delta_prime(datum: RootDatum, alpha: int | Root, u: CharElt) -> CharElt:
    """The bare divided difference; kills invariants, delta_prime(1) = 0."""
    j = _simple_index(datum, alpha)
    root = datum.simple_root(j)
    reflected = weyl_act_simple(datum, j, u)
    return divide_exact(u - reflected, root)


def _compose(datum: RootDatum, word: tuple[int, ...], u: CharElt, op) -> CharElt:
    # word (j1, ..., jl) denotes op_{j1} o ... o op_{jl}: rightmost acts first
    v = u
    for j in reversed(word):
        v = op(datum, j, v)
    return v


def _along_words(
    datum: RootDatum, w: WeylElt, u: CharElt, op, strict: bool | None
) -> CharElt:
    if not resolve_strict(strict):
        return _compose(datum, w.word, u, op)
    words = weyl_group(datum).all_reduced_words(w)
    first = _compose(datum, words[0], u, op)
    for word in words[1:]:
        other = _compose(datum, word, u, op)
        if other != first:
            raise WordMismatch(
                f"words {words[0]} and {word} disagree: {first} vs {other}"
            )
    return first


def partial(datum: RootDatum, w: WeylElt, u: CharElt, strict: bool | None = None) -> CharElt:
    """Composition of delta along (any) reduced word of w."""
    return _along_words(datum, w, u, delta, strict)


def partial_prime(datum: RootDatum, w: WeylElt, u: CharElt, strict: bool | None = None) -> CharElt:
    """Composition of delta_prime along (any) reduced word of w."""
    return _along_words(datum, w, u, delta_prime, strict)


def alternating_quotient(datum: RootDatum, u: CharElt) -> CharElt:
    """A(u)/d: antisymmetrize, then strip one (1 - e^{-alpha}) per positive root.

    The factors are pairwise coprime, so peeling them one at a time is exact
    at every step; a NotDivisible here would mean a bug.
    """
    q = antisymmetrize(datum, u)
    for root in datum.positive_roots:
        q = divide_exact(q, root)
    return q


def top(
    datum: RootDatum,
    u: CharElt,
    strict: bool | None = None,
    method: str = "demazure",
) -> CharElt:
    """The operator for the longest element: the projector onto invariants.

    Idempotent, R(G)-linear (top(chi * u) = chi * top(u) for invariant chi),
    fixes every Weyl-invariant element. method selects the composition route
    ("demazure"), the character-formula route A(u)/d ("weyl"), or "both",
    which cross-checks them and fails loudly on disagreement.
    """
    if method not in ("demazure", "weyl", "both"):
        raise ValueError(f"unknown method {method!r}")
    demazure_val = None
    weyl_val = None
    if method in ("demazure", "both"):
        w0 = weyl_group(datum).longest
        demazure_val = partial(datum, w0, u, strict)
    if method in ("weyl", "both"):
        weyl_val = alternating_quotient(datum, u)
    if method == "demazure":
        return demazure_val  # type: ignore[return-value]
    if method == "weyl":
        return weyl_val  # type: ignore[return-value]
    if demazure_val != weyl_val:
        raise InternalInvariantError(
            f"top routes disagree: demazure {demazure_val} vs weyl {weyl_val}"
        )
    return demazure_val  # type: ignore[return-value]
