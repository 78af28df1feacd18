"""Root data for compact connected Lie groups, in fundamental-weight coordinates.

Conventions, fixed once for the whole package:

* A weight is a tuple of ints: the coefficients of the fundamental weights,
  so the j-th coordinate of lambda is the pairing <lambda, alpha_j-check>.
* The Cartan matrix follows A[i][j] = <alpha_j, alpha_i-check>: column j is
  the simple root alpha_j written in fundamental-weight coordinates.
* A simple reflection therefore acts by s_j(lambda)_i = lambda_i - lambda_j * A[i][j].

Positive roots are generated by reflection closure from the simple roots and
each carries its coroot as an integer linear functional, so pairings against
arbitrary (also non-simple) coroots stay exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotFiniteType, SafetyBoundExceeded
from .intlinalg import determinant

Weight = tuple[int, ...]

__all__ = [
    "Weight",
    "Root",
    "RootDatum",
    "build_root_datum",
    "NAMED_TYPES",
]


@dataclass(frozen=True)
class Root:
    """A root, kept in both coordinate systems plus its coroot functional.

    root_coords: coefficients over the simple roots.
    weight_coords: the same root in fundamental-weight coordinates.
    coroot: integer functional f with f . mu == <mu, alpha-check>.
    """

    root_coords: Weight
    weight_coords: Weight
    coroot: Weight

    @property
    def height(self) -> int:
        return sum(self.root_coords)

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.root_coords) and any(self.root_coords)

    def negated(self) -> "Root":
        return Root(
            tuple(-c for c in self.root_coords),
            tuple(-c for c in self.weight_coords),
            tuple(-c for c in self.coroot),
        )


def _validate_cartan(cartan: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    n = len(cartan)
    rows = []
    for row in cartan:
        if len(row) != n:
            raise NotFiniteType("Cartan matrix must be square")
        rows.append(tuple(int(c) for c in row))
    for i in range(n):
        if rows[i][i] != 2:
            raise NotFiniteType(f"diagonal entry A[{i+1}][{i+1}] = {rows[i][i]} != 2")
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] > 0:
                raise NotFiniteType(f"off-diagonal entry A[{i+1}][{j+1}] must be <= 0")
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise NotFiniteType(f"zero pattern not symmetric at ({i+1},{j+1})")
    for k in range(1, n + 1):
        minor = determinant([r[:k] for r in rows[:k]])
        if minor <= 0:
            raise NotFiniteType(f"leading principal minor of order {k} is {minor} <= 0")
    return tuple(rows)


@dataclass(frozen=True)
class RootDatum:
    """Validated finite-type root datum; immutable and hashable."""

    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...] = field(compare=False)
    weyl_vector: Weight = field(compare=False)
    label: str | None = field(default=None, compare=False)

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def simple_root(self, j: int) -> Root:
        """The j-th simple root, j in 1..rank."""
        self._check_index(j)
        return self.positive_roots[j - 1]

    def _check_index(self, j: int) -> None:
        if not 1 <= j <= self.rank:
            raise IndexError(f"simple root index {j} out of range 1..{self.rank}")

    def reflect_simple(self, j: int, weight: Sequence[int]) -> Weight:
        """s_j(lambda), by s_j(lambda)_i = lambda_i - lambda_j * A[i][j]."""
        self._check_index(j)
        lj = weight[j - 1]
        if lj == 0:
            return tuple(weight)
        return tuple(w - lj * self.cartan[i][j - 1] for i, w in enumerate(weight))

    def reflection_matrix(self, j: int) -> tuple[tuple[int, ...], ...]:
        """Matrix of s_j acting on fundamental-weight coordinate columns."""
        self._check_index(j)
        n = self.rank
        return tuple(
            tuple(
                (1 if i == k else 0) - (self.cartan[i][j - 1] if k == j - 1 else 0)
                for k in range(n)
            )
            for i in range(n)
        )

    def pairing(self, weight: Sequence[int], root: Root) -> int:
        """<lambda, alpha-check> for any root alpha of this datum."""
        return sum(f * w for f, w in zip(root.coroot, weight))

    def reflect(self, root: Root, weight: Sequence[int]) -> Weight:
        """s_alpha(lambda) = lambda - <lambda, alpha-check> alpha, any root alpha."""
        k = self.pairing(weight, root)
        if k == 0:
            return tuple(weight)
        return tuple(w - k * a for w, a in zip(weight, root.weight_coords))

    def is_dominant(self, weight: Sequence[int]) -> bool:
        return all(c >= 0 for c in weight)

    def dominant_representative(self, weight: Sequence[int]) -> Weight:
        """The unique dominant weight in the Weyl orbit of the input."""
        lam = tuple(weight)
        cap = 16 * (len(self.positive_roots) + 1)
        for _ in range(cap):
            for j in range(1, self.rank + 1):
                if lam[j - 1] < 0:
                    lam = self.reflect_simple(j, lam)
                    break
            else:
                return lam
        raise SafetyBoundExceeded("dominant-representative loop did not settle")

    def two_rho_check(self) -> bool:
        """2 * rho equals the sum of all positive roots."""
        total = [0] * self.rank
        for root in self.positive_roots:
            for i, c in enumerate(root.weight_coords):
                total[i] += c
        return tuple(total) == tuple(2 * c for c in self.weyl_vector)


def _positive_roots(cartan: tuple[tuple[int, ...], ...]) -> tuple[Root, ...]:
    """Reflection closure of the simple roots, keeping the positive ones.

    Coroot functionals propagate along with the roots: for beta = s_i(gamma),
    <mu, beta-check> = <s_i(mu), gamma-check>, i.e. f_beta = f_gamma o s_i.
    """
    n = len(cartan)
    simples = []
    for j in range(n):
        rc = tuple(1 if k == j else 0 for k in range(n))
        wc = tuple(cartan[i][j] for i in range(n))
        co = tuple(1 if k == j else 0 for k in range(n))
        simples.append(Root(rc, wc, co))

    def reflect_root(i: int, root: Root) -> Root:
        # s_i subtracts (i-th weight coordinate) * alpha_i
        k = root.weight_coords[i]
        rc = tuple(c - (k if idx == i else 0) for idx, c in enumerate(root.root_coords))
        wc = tuple(w - k * cartan[r][i] for r, w in enumerate(root.weight_coords))
        # (f o s_i)(mu) = f(mu) - mu_i * f(alpha_i)
        f_alpha_i = sum(root.coroot[r] * cartan[r][i] for r in range(n))
        co = tuple(
            f - (f_alpha_i if idx == i else 0) for idx, f in enumerate(root.coroot)
        )
        return Root(rc, wc, co)

    found: dict[Weight, Root] = {r.root_coords: r for r in simples}
    bound = 4 * n * n
    for _ in range(bound):
        new: list[Root] = []
        for root in found.values():
            for i in range(n):
                img = reflect_root(i, root)
                if img.is_positive and img.root_coords not in found:
                    new.append(img)
        if not new:
            break
        for r in new:
            found.setdefault(r.root_coords, r)
    else:
        raise SafetyBoundExceeded(f"reflection closure exceeded {bound} sweeps")
    # simple roots first (in index order), then by height
    roots = sorted(
        found.values(), key=lambda r: (r.height, tuple(-c for c in r.root_coords))
    )
    return tuple(roots)


def _family_cartan(name: str) -> list[list[int]]:
    family, rank = name[0], int(name[1:])
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    chain = rank - 2 if family == "D" else rank - 1
    for i in range(chain):
        a[i][i + 1] = -1
        a[i + 1][i] = -1
    if family == "A":
        pass
    elif family == "B":
        # last simple root short: A[n][n-1] = <alpha_{n-1}, alpha_n-check> = -2
        a[rank - 1][rank - 2] = -2
    elif family == "C":
        # last simple root long: A[n-1][n] = <alpha_n, alpha_{n-1}-check> = -2
        a[rank - 2][rank - 1] = -2
    elif family == "D":
        a[rank - 3][rank - 1] = -1
        a[rank - 1][rank - 3] = -1
    elif family == "G":
        # alpha_1 short, alpha_2 long
        a = [[2, -3], [-1, 2]]
    else:
        raise NotFiniteType(f"unknown family {family!r}")
    return a


NAMED_TYPES = ("A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2")


def build_root_datum(spec: str | Sequence[Sequence[int]]) -> RootDatum:
    """Build a root datum from a named type or an explicit Cartan matrix.

    Named types: A1 A2 A3 B2 B3 C2 C3 D4 G2. An explicit matrix must be a
    valid finite-type Cartan matrix under the column convention above;
    anything else raises NotFiniteType.
    """
    label: str | None = None
    if isinstance(spec, str):
        name = spec.strip().upper()
        if name not in NAMED_TYPES:
            raise NotFiniteType(
                f"unknown type {spec!r}; named types are {', '.join(NAMED_TYPES)}"
            )
        matrix: Sequence[Sequence[int]] = _family_cartan(name)
        label = name
    else:
        matrix = spec
    cartan = _validate_cartan(matrix)
    roots = _positive_roots(cartan)
    rho = tuple(1 for _ in cartan)
    return RootDatum(
        rank=len(cartan),
        cartan=cartan,
        positive_roots=roots,
        weyl_vector=rho,
        label=label,
    )
