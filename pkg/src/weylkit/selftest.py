"""Seeded property suites runnable per group, packaged for the CLI.

Each suite draws from its own RNG seeded by (seed, group, suite), so reports
are byte-identical across runs with the same seed while timings (which are
not deterministic) go to the diagnostic stream. Suites size themselves to
the group: the linear-solve checks only run when |W| <= 8.
"""

from __future__ import annotations

import random
import sys
from time import perf_counter
from typing import Callable, TextIO

from .charring import (
    CharElt,
    antisymmetrize,
    divide_exact,
    divide_exact_general,
    monomial,
    weyl_act,
    weyl_act_simple,
    weyl_denominator,
)
from .demazure import delta, delta_prime, partial, top
from .errors import NotDivisible, WeylkitError
from .hecke import OpExpr, apply as hecke_apply, in_augmentation_ideal, is_ideal_invariant, is_weyl_invariant, to_basis
from .repring import (
    decompose_into_irreducibles,
    decompose_over_invariants,
    induce,
    irreducible_character,
    orbit_sum,
    reconstruct_over_invariants,
    restrict,
    steinberg_basis,
    weyl_dimension,
)
from .covers import build_cover, decompose_cover, pullback, reconstruct_cover
from .parsing import parse_char_expression
from .rootdata import RootDatum, build_root_datum
from .weyl import weyl_group

__all__ = ["run_selftest", "random_char_elt"]

_SOLVE_MAX_ORDER = 8


def random_char_elt(
    rng: random.Random, rank: int, nterms: int = 4, span: int = 3
) -> CharElt:
    terms: dict[tuple[int, ...], int] = {}
    for _ in range(nterms):
        key = tuple(rng.randint(-span, span) for _ in range(rank))
        coeff = rng.choice([-4, -3, -2, -1, 1, 2, 3, 4])
        terms[key] = terms.get(key, 0) + coeff
    return CharElt(terms)


def _suite_root_data(datum: RootDatum, rng: random.Random) -> int:
    checks = 0
    datum.two_rho_check()
    checks += 1
    for j in range(1, datum.rank + 1):
        coords = datum.simple_root(j).root_coords
        assert coords == tuple(int(i == j - 1) for i in range(datum.rank))
        checks += 1
    for _ in range(20):
        lam = tuple(rng.randint(-5, 5) for _ in range(datum.rank))
        for root in datum.positive_roots:
            image = datum.reflect(root, lam)
            assert datum.reflect(root, image) == lam
            assert datum.pairing(image, root) == -datum.pairing(lam, root)
        rep = datum.dominant_representative(lam)
        assert datum.is_dominant(rep)
        assert datum.dominant_representative(rep) == rep
        checks += 1
    return checks


def _suite_weyl_group(datum: RootDatum, rng: random.Random) -> int:
    group = weyl_group(datum)
    checks = 0
    assert group.longest.length == len(datum.positive_roots)
    assert group.longest.sign == (-1) ** len(datum.positive_roots)
    checks += 2
    elements = list(group.elements)
    for _ in range(20):
        a, b = rng.choice(elements), rng.choice(elements)
        ab = group.multiply(a, b)
        lam = tuple(rng.randint(-3, 3) for _ in range(datum.rank))
        assert ab.act(lam) == a.act(b.act(lam))
        assert group.multiply(a, group.inverse(a)) == group.identity
        checks += 1
    for w in rng.sample(elements, min(4, len(elements))):
        for word in group.all_reduced_words(w):
            assert len(word) == w.length
            v = group.identity
            for j in word:
                v = group.right_descend(v, j)
            assert v == w
            checks += 1
    return checks


def _suite_char_ring(datum: RootDatum, rng: random.Random) -> int:
    rank = datum.rank
    checks = 0
    for _ in range(15):
        u = random_char_elt(rng, rank)
        v = random_char_elt(rng, rank)
        w = random_char_elt(rng, rank, nterms=2)
        assert u + v == v + u
        assert (u + v) * w == u * w + v * w
        assert (u * v) * w == u * (v * w)
        assert u - u == CharElt.zero()
        assert parse_char_expression(str(u), rank) == u
        assert CharElt.from_json(u.to_json()) == u
        checks += 1
    alpha = datum.positive_roots[rng.randrange(len(datum.positive_roots))]
    factor = CharElt.one(rank) - monomial(tuple(-c for c in alpha.weight_coords))
    for _ in range(10):
        u = random_char_elt(rng, rank)
        assert divide_exact(u * factor, alpha) == u
        assert divide_exact_general(u * factor, factor) == u
        checks += 1
    try:
        divide_exact(CharElt.one(rank), datum.positive_roots[0])
        raise AssertionError("expected NotDivisible")
    except NotDivisible:
        checks += 1
    assert antisymmetrize(datum, CharElt.one(rank)) == weyl_denominator(datum)
    checks += 1
    return checks


def _suite_demazure(datum: RootDatum, rng: random.Random) -> int:
    rank = datum.rank
    group = weyl_group(datum)
    one = CharElt.one(rank)
    checks = 0
    for j in range(1, rank + 1):
        assert delta(datum, j, one) == one
        assert delta_prime(datum, j, one) == CharElt.zero()
        checks += 2
    for _ in range(10):
        u = random_char_elt(rng, rank)
        for j in range(1, rank + 1):
            dj = delta(datum, j, u)
            assert delta(datum, j, dj) == dj
            pj = delta_prime(datum, j, u)
            assert delta_prime(datum, j, pj) == pj
            assert dj == pj + weyl_act_simple(datum, j, u)
            checks += 3
    for _ in range(5):
        u = random_char_elt(rng, rank, nterms=3, span=2)
        w = rng.choice(list(group.elements))
        partial(datum, w, u, strict=True)  # raises WordMismatch on any word disagreement
        checks += 1
        t = top(datum, u, strict=False, method="both")
        assert top(datum, t, strict=False) == t
        checks += 1
        rho = datum.weyl_vector
        erho = monomial(rho)
        erho_inv = monomial(tuple(-c for c in rho))
        from .demazure import partial_prime

        assert partial_prime(datum, w, u) == erho * partial(datum, w, erho_inv * u)
        checks += 1
    return checks


def _suite_hecke(datum: RootDatum, rng: random.Random) -> int:
    rank = datum.rank
    checks = 0
    for _ in range(10):
        u = random_char_elt(rng, rank)
        ideal_ok, _ = is_ideal_invariant(datum, u)
        weyl_ok, _ = is_weyl_invariant(datum, u)
        assert ideal_ok == weyl_ok
        checks += 1
    inv = orbit_sum(datum, tuple(rng.randint(0, 2) for _ in range(rank)))
    ok, witness = is_ideal_invariant(datum, inv)
    assert ok and witness is None
    checks += 1
    assert in_augmentation_ideal(datum, OpExpr.dp(1))
    assert not in_augmentation_ideal(datum, OpExpr.d(1))
    checks += 2
    if len(weyl_group(datum)) <= _SOLVE_MAX_ORDER:
        for _ in range(3):
            kinds = [rng.choice(["d", "dp", "w", "m"]) for _ in range(rng.randint(1, 3))]
            expr = None
            for kind in kinds:
                atom = (
                    OpExpr.m(random_char_elt(rng, rank, nterms=2, span=1))
                    if kind == "m"
                    else getattr(OpExpr, kind)(rng.randint(1, rank))
                )
                expr = atom if expr is None else expr * atom
            op = to_basis(datum, expr, strict=False)
            for _ in range(2):
                u = random_char_elt(rng, rank, nterms=3, span=2)
                assert hecke_apply(datum, op, u, strict=False) == expr.apply(
                    datum, u, strict=False
                )
                checks += 1
    return checks


def _suite_rep_ring(datum: RootDatum, rng: random.Random) -> int:
    rank = datum.rank
    checks = 0
    from itertools import product as iproduct

    for lam in iproduct(range(2), repeat=rank):
        ch = irreducible_character(datum, lam, strict=False, method="both")
        assert sum(c for _, c in ch.items()) == weyl_dimension(datum, lam)
        checks += 1
    a = irreducible_character(datum, tuple(rng.randint(0, 1) for _ in range(rank)), strict=False)
    b = irreducible_character(datum, tuple(rng.randint(0, 1) for _ in range(rank)), strict=False)
    dec = decompose_into_irreducibles(datum, a * b, strict=False)
    assert restrict(datum, dec, strict=False) == a * b
    assert induce(datum, a * b, strict=False) == dec
    checks += 2
    if len(weyl_group(datum)) <= _SOLVE_MAX_ORDER:
        basis = steinberg_basis(datum)
        for _ in range(3):
            u = random_char_elt(rng, rank, nterms=2, span=1)
            coords = decompose_over_invariants(datum, u, basis)
            assert reconstruct_over_invariants(datum, coords, basis) == u
            checks += 1
    return checks


def _suite_covers(datum: RootDatum, rng: random.Random) -> int:
    rank = datum.rank
    checks = 0
    matrices: list[list[list[int]]] = []
    if rank == 1:
        matrices = [[[2]], [[3]]]
    else:
        diag = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        upper = [[1 if i == j else 0 for j in range(rank)] for i in range(rank)]
        upper[0][rank - 1] = 2
        upper[0][0] = 3
        matrices = [diag, upper]
    for mat in matrices:
        cover = build_cover(mat)
        assert len(cover.coset_reps) == cover.index
        assert cover.coset_reps[0] == (0,) * rank
        checks += 1
        for _ in range(10):
            u = random_char_elt(rng, rank, nterms=4, span=4)
            parts = decompose_cover(cover, u)
            assert reconstruct_cover(cover, parts) == u
            lifted = decompose_cover(cover, pullback(cover, u))
            assert lifted[(0,) * rank] == u
            assert all(not lifted[rep] for rep in cover.coset_reps[1:])
            checks += 1
    return checks


_SUITES: tuple[tuple[str, Callable[[RootDatum, random.Random], int]], ...] = (
    ("root_data", _suite_root_data),
    ("weyl_group", _suite_weyl_group),
    ("char_ring", _suite_char_ring),
    ("demazure_ops", _suite_demazure),
    ("hecke_ops", _suite_hecke),
    ("rep_ring", _suite_rep_ring),
    ("covers", _suite_covers),
)


def run_selftest(
    names: list[str],
    seed: int = 0,
    out: TextIO = sys.stdout,
    err: TextIO = sys.stderr,
) -> int:
    failures = 0
    total = 0
    for name in names:
        datum = build_root_datum(name)
        for suite_name, fn in _SUITES:
            rng = random.Random(f"{seed}:{name}:{suite_name}")
            started = perf_counter()
            try:
                checks = fn(datum, rng)
            except (AssertionError, WeylkitError) as exc:
                failures += 1
                out.write(f"{name} {suite_name}: FAIL ({type(exc).__name__}: {exc})\n")
            else:
                total += checks
                out.write(f"{name} {suite_name}: ok ({checks} checks)\n")
            err.write(f"# {name} {suite_name}: {(perf_counter() - started) * 1000:.1f} ms\n")
    if failures:
        out.write(f"{failures} suite(s) FAILED\n")
        return 1
    out.write(f"all suites passed ({total} checks)\n")
    return 0
