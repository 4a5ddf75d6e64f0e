"""Numerical tautological ring of the variety of lines on a cubic.

The variety of lines F sits in Gr(2, n+2) with class [F] = 18*c1^2*c2 +
9*c2^2.  Its numerical tautological ring is probed through pairing
matrices of intersection numbers deg(x_i * y_j * [F]) on the ambient
Grassmannian; their ranks are the graded dimensions.

``extra_relation`` finds the polynomial relation of weighted degree n-1
that holds on F but not on the ambient ring (the kernel of multiplication
by [F] from degree n-1 to degree n+3), and ``ideal_decomposition`` checks
ideal membership in degree n+3 by an independent linear solve against the
two relation generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CheckFailed, UnsupportedRange
from .grassmann import (
    GRing,
    build_ring,
    complete_symmetric,
    degree_of_poly,
    fano_class,
    normal_form,
    weight_monomials,
)
from .linalg import MatQ, kernel_basis, solve_linear
from .wpoly import Exponents, WPoly


@dataclass(frozen=True)
class FanoPairing:
    """Pairing matrix deg(x_i * y_j * [F]) between A^k and A^(2(n-2)-k)."""

    n: int
    k: int
    left_basis: tuple[Exponents, ...]
    right_basis: tuple[Exponents, ...]
    matrix: MatQ


@dataclass(frozen=True)
class ExtraRelation:
    """A degree-(n-1) polynomial killed by [F], normalized to lead with c1^(n-1)."""

    n: int
    poly: WPoly
    kernel_dim: int


def _fano_rep(ring: GRing) -> WPoly:
    # canonical representative of [F] in the quotient; single source of truth
    return fano_class(ring).to_poly()


@lru_cache(maxsize=None)
def fano_pairing(n: int, k: int) -> FanoPairing:
    if n < 2:
        raise UnsupportedRange("fano_pairing needs n >= 2")
    top = 2 * (n - 2)
    if not 0 <= k <= top:
        raise UnsupportedRange(f"k must lie in 0..{top}")
    ring = build_ring(n)
    f_poly = _fano_rep(ring)
    left = ring.bases[k]
    right = ring.bases[top - k]
    rows = []
    for ml in left:
        row = []
        for mr in right:
            prod = WPoly.monomial(ml) * WPoly.monomial(mr) * f_poly
            row.append(degree_of_poly(ring, prod))
        rows.append(row)
    return FanoPairing(n, k, left, right, MatQ.from_rows(rows, cols=len(right)))


def taut_rank_F(n: int, k: int) -> int:
    """Rank of the pairing through [F]; the numerical Betti number of R^k(F)."""
    return fano_pairing(n, k).matrix.rank()


def extra_relation(n: int) -> ExtraRelation:
    """Kernel element of multiplication by [F]: A^(n-1) -> A^(n+3).

    Dimension counting makes the kernel nonzero for n >= 3; the returned
    element is the first kernel basis vector with nonzero c1^(n-1)
    coordinate, rescaled so that coordinate is 1 (deterministic output).
    """
    if n < 3:
        raise UnsupportedRange("extra_relation needs n >= 3 (A^(n+3) empty below)")
    ring = build_ring(n)
    f_poly = _fano_rep(ring)
    source = ring.bases[n - 1]
    target_dim = ring.dim(n + 3)
    columns = []
    for mono in source:
        image = normal_form(ring, WPoly.monomial(mono) * f_poly)
        columns.append(image.coords)
    matrix = MatQ.from_rows(
        [[columns[j][i] for j in range(len(source))] for i in range(target_dim)],
        cols=len(source),
    )
    kernel = kernel_basis(matrix)
    if not kernel:
        raise CheckFailed(f"multiplication by [F] is injective at n={n}")
    lead = source.index((n - 1, 0))
    vec = next((v for v in kernel if v[lead] != 0), None)
    if vec is None:
        raise CheckFailed(f"no kernel element with nonzero c1^{n-1} coefficient at n={n}")
    scale = 1 / vec[lead]
    poly = WPoly({mono: scale * c for mono, c in zip(source, vec)})
    return ExtraRelation(n, poly, len(kernel))


def ideal_decomposition(n: int, relation: WPoly) -> tuple[WPoly, WPoly] | None:
    """Solve R = A*h_(n+1) + B*h_(n+2) with A in span{x^2, y}, B in span{x}.

    The cofactor spaces are all monomials of weights 2 and 1, so solvability
    is exactly membership of R in the degree-(n+3) piece of the relation
    ideal.  Returns (A, B) or ``None`` when inconsistent.
    """
    if relation.is_zero():
        return WPoly.zero(), WPoly.zero()
    if not relation.is_homogeneous() or relation.homogeneous_degree() != n + 3:
        raise ValueError("ideal_decomposition needs homogeneous input of degree n+3")
    g1, g2 = complete_symmetric(n + 1), complete_symmetric(n + 2)
    generators = [
        (WPoly.monomial((2, 0)), g1),
        (WPoly.monomial((0, 1)), g1),
        (WPoly.monomial((1, 0)), g2),
    ]
    monos = weight_monomials(n + 3)
    matrix = MatQ.from_rows(
        [[(cof * gen).coefficient(m) for cof, gen in generators] for m in monos],
        cols=len(generators),
    )
    target = [relation.coefficient(m) for m in monos]
    solution = solve_linear(matrix, target)
    if solution is None:
        return None
    m1, m2, m3 = solution
    cofactor_a = WPoly({(2, 0): m1, (0, 1): m2})
    cofactor_b = WPoly({(1, 0): m3})
    return cofactor_a, cofactor_b
