"""The Chow ring of the Grassmannian of lines in P^(n+1).

Two independent models of A*(Gr(2, n+2)) are provided:

* a quotient-ring model: Q[x, y] (x = c1, y = c2, the Chern classes of the
  dual tautological subbundle) modulo the ideal generated by the complete
  symmetric polynomials h_(n+1) and h_(n+2), with each graded piece reduced
  to a monomial basis by exact row reduction;
* a Schubert-calculus oracle on partitions (a, b) in the n x 2 box, with
  multiplication given by the Pieri rule.

The two are tied together by c1 = sigma_1, c2 = sigma_(1,1) and the
Giambelli determinant sigma_(a,b) = h_a*h_b - h_(a+1)*h_(b-1); the degree
map is normalized so the point class sigma_(n,n) = c2^n has degree 1.

Also here: Chern classes of symmetric powers of a rank-2 bundle via the
splitting principle, and the class of the locus of lines on a cubic,
18*c1^2*c2 + 9*c2^2 (the top Chern class of Sym^3 of the dual subbundle).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import NotTopDegree, UnsupportedRange
from .linalg import MatQ, rref
from .wpoly import Exponents, WPoly

X = WPoly.variable("x")
Y = WPoly.variable("y")


class Partition2(NamedTuple):
    """Partition (a, b) with a >= b >= 0; indexes a Schubert class."""

    a: int
    b: int

    @property
    def size(self) -> int:
        return self.a + self.b


SchubertSum = dict[Partition2, Fraction]


@lru_cache(maxsize=None)
def complete_symmetric(k: int) -> WPoly:
    """h_k in (c1, c2) via h_k = c1*h_(k-1) - c2*h_(k-2); h_0 = 1."""
    if k < 0:
        raise ValueError("complete_symmetric needs k >= 0")
    if k == 0:
        return WPoly.constant(1)
    if k == 1:
        return X
    return X * complete_symmetric(k - 1) - Y * complete_symmetric(k - 2)


def weight_monomials(k: int) -> list[Exponents]:
    """All (a, b) with a + 2b = k, in descending graded-lex order (x first)."""
    return [(k - 2 * b, b) for b in range(k // 2 + 1)]


def partition_count(n: int, k: int) -> int:
    """Number of partitions (a, b), n >= a >= b >= 0, a + b = k."""
    lo = max(0, k - n)
    hi = k // 2
    return max(0, hi - lo + 1)


def partitions_in_box(n: int, k: int) -> list[Partition2]:
    return [Partition2(k - b, b) for b in range(max(0, k - n), k // 2 + 1)]


@dataclass(frozen=True)
class GRing:
    """Quotient-ring presentation of A*(Gr(2, n+2)), all degrees 0..2n."""

    n: int
    gens: tuple[WPoly, WPoly]
    bases: tuple[tuple[Exponents, ...], ...]
    reducers: tuple[dict[Exponents, tuple[Fraction, ...]], ...]
    point_scale: Fraction

    def dim(self, k: int) -> int:
        return len(self.bases[k])


@dataclass(frozen=True)
class GClass:
    """Element of one graded piece, in coordinates over the quotient basis."""

    ring: GRing
    degree: int
    coords: tuple[Fraction, ...]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def to_poly(self) -> WPoly:
        out = WPoly.zero()
        for exps, c in zip(self.ring.bases[self.degree], self.coords):
            out = out + WPoly.monomial(exps, c)
        return out

    def __add__(self, other: "GClass") -> "GClass":
        if self.ring is not other.ring or self.degree != other.degree:
            raise ValueError("classes live in different graded pieces")
        return GClass(
            self.ring, self.degree, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: "GClass") -> "GClass":
        return self + other.scale(-1)

    def scale(self, c) -> "GClass":
        c = Fraction(c)
        return GClass(self.ring, self.degree, tuple(c * x for x in self.coords))

    def __str__(self) -> str:
        return str(self.to_poly())


@lru_cache(maxsize=None)
def build_ring(n: int) -> GRing:
    """Reduce every graded piece of Q[x, y]/(h_(n+1), h_(n+2)) to a basis.

    The relations live in degrees n+1 and n+2, forced by dim Gr(2, n+2) = 2n;
    the resulting dimensions are checked against the partition count.
    """
    if n < 1:
        raise UnsupportedRange("build_ring needs n >= 1")
    g1, g2 = complete_symmetric(n + 1), complete_symmetric(n + 2)
    bases: list[tuple[Exponents, ...]] = []
    reducers: list[dict[Exponents, tuple[Fraction, ...]]] = []
    for k in range(2 * n + 1):
        monos = weight_monomials(k)
        index = {m: i for i, m in enumerate(monos)}
        ideal_rows = []
        for gen, gdeg in ((g1, n + 1), (g2, n + 2)):
            if k < gdeg:
                continue
            for cof in weight_monomials(k - gdeg):
                elem = WPoly.monomial(cof) * gen
                ideal_rows.append([elem.coefficient(m) for m in monos])
        reduced, pivots = rref(ideal_rows)
        pivot_set = set(pivots)
        free = [i for i in range(len(monos)) if i not in pivot_set]
        basis = tuple(monos[i] for i in free)
        free_pos = {i: j for j, i in enumerate(free)}
        reducer: dict[Exponents, tuple[Fraction, ...]] = {}
        for i, mono in enumerate(monos):
            coords = [Fraction(0)] * len(free)
            if i in free_pos:
                coords[free_pos[i]] = Fraction(1)
            else:
                row = reduced[pivots.index(i)]
                for f in free:
                    coords[free_pos[f]] = -row[f]
            reducer[mono] = tuple(coords)
        if len(basis) != partition_count(n, k):
            raise AssertionError(
                f"degree {k}: basis size {len(basis)} != partition count"
            )
        bases.append(basis)
        reducers.append(reducer)
    if len(bases[2 * n]) != 1:
        raise AssertionError("top degree is not one-dimensional")
    point_coords = reducers[2 * n][(0, n)]
    scale = point_coords[0]
    if scale == 0:
        raise AssertionError("point class c2^n reduced to zero")
    return GRing(n, (g1, g2), tuple(bases), tuple(reducers), scale)


def _reduce(ring: GRing, p: WPoly, k: int) -> tuple[Fraction, ...]:
    coords = [Fraction(0)] * ring.dim(k)
    reducer = ring.reducers[k]
    for exps, c in p.terms.items():
        for i, r in enumerate(reducer[exps]):
            coords[i] += c * r
    return tuple(coords)


def normal_form(ring: GRing, p: WPoly, degree: int | None = None) -> GClass:
    """Image of a homogeneous polynomial in the quotient, on the degree basis."""
    if p.is_zero():
        if degree is None:
            raise ValueError("zero polynomial needs an explicit degree")
        k = degree
    else:
        if not p.is_homogeneous():
            raise ValueError("normal_form needs weighted-homogeneous input")
        k = p.homogeneous_degree()
        if degree is not None and degree != k:
            raise ValueError("stated degree disagrees with the polynomial")
    if not 0 <= k <= 2 * ring.n:
        raise ValueError(f"degree {k} outside 0..{2 * ring.n}")
    return GClass(ring, k, _reduce(ring, p, k))


def degree(ring: GRing, c: GClass) -> Fraction:
    """Integral of a top-degree class, normalized so degree(c2^n) = 1."""
    if c.degree != 2 * ring.n:
        raise NotTopDegree(f"degree map needs codimension {2 * ring.n}")
    return c.coords[0] / ring.point_scale


def degree_of_poly(ring: GRing, p: WPoly) -> Fraction:
    return degree(ring, normal_form(ring, p, 2 * ring.n))


# -- Schubert oracle ---------------------------------------------------------


def pieri_mul(n: int, part: Partition2, p: int) -> SchubertSum:
    """sigma_(a,b) * sigma_p by the Pieri rule on Gr(2, n+2).

    Out-of-box partitions contribute zero; for p = 0 this is the identity.
    """
    a, b = part
    out: SchubertSum = {}
    for a2 in range(a, n + 1):
        b2 = a + b + p - a2
        if b <= b2 <= a:
            out[Partition2(a2, b2)] = Fraction(1)
    return out


def pieri_mul11(n: int, part: Partition2) -> SchubertSum:
    """Multiplication by sigma_(1,1): shift (a, b) -> (a+1, b+1) inside the box."""
    a, b = part
    if a + 1 > n:
        return {}
    return {Partition2(a + 1, b + 1): Fraction(1)}


def _sum_scale(total: SchubertSum, part_sum: SchubertSum, c: Fraction) -> None:
    for key, v in part_sum.items():
        total[key] = total.get(key, Fraction(0)) + c * v
        if total[key] == 0:
            del total[key]


def schubert_mul(n: int, s1: SchubertSum, s2: SchubertSum) -> SchubertSum:
    """Product of Schubert sums: factor sigma_(c,d) = sigma_(1,1)^d * sigma_(c-d)."""
    out: SchubertSum = {}
    for (c, d), coeff2 in s2.items():
        for part1, coeff1 in s1.items():
            expanded = pieri_mul(n, part1, c - d)
            for _ in range(d):
                shifted: SchubertSum = {}
                for part, v in expanded.items():
                    _sum_scale(shifted, pieri_mul11(n, part), v)
                expanded = shifted
            _sum_scale(out, expanded, coeff1 * coeff2)
    return out


@lru_cache(maxsize=None)
def monomial_schubert(n: int, a: int, b: int) -> tuple[tuple[Partition2, Fraction], ...]:
    """Expansion of c1^a * c2^b in the Schubert basis (cached, immutably)."""
    if b > 0:
        prev = dict(monomial_schubert(n, a, b - 1))
        out: SchubertSum = {}
        for part, v in prev.items():
            _sum_scale(out, pieri_mul11(n, part), v)
    elif a > 0:
        prev = dict(monomial_schubert(n, a - 1, 0))
        out = {}
        for part, v in prev.items():
            _sum_scale(out, pieri_mul(n, part, 1), v)
    else:
        out = {Partition2(0, 0): Fraction(1)}
    return tuple(sorted(out.items()))


def poly_schubert(n: int, p: WPoly) -> SchubertSum:
    """Expansion of a polynomial in (c1, c2) in the Schubert basis."""
    out: SchubertSum = {}
    for (a, b), c in p.terms.items():
        _sum_scale(out, dict(monomial_schubert(n, a, b)), c)
    return out


def schubert_degree(n: int, s: SchubertSum) -> Fraction:
    """Coefficient of the point class sigma_(n,n)."""
    return s.get(Partition2(n, n), Fraction(0))


def giambelli(part: Partition2) -> WPoly:
    """sigma_(a,b) as a polynomial in (c1, c2): h_a*h_b - h_(a+1)*h_(b-1)."""
    a, b = part
    det = complete_symmetric(a) * complete_symmetric(b)
    if b >= 1:
        det = det - complete_symmetric(a + 1) * complete_symmetric(b - 1)
    return det


# -- symmetric powers and the lines-on-a-cubic class -------------------------

_ROOT_VARS = ("r", "s")
_ROOT_WEIGHTS = (1, 1)


def _symmetric_reduce(p: WPoly) -> WPoly:
    """Rewrite a symmetric polynomial in the roots as a WPoly in (c1, c2)."""
    rest = p
    out = WPoly.zero()
    while not rest.is_zero():
        (i, j), c = max(rest.terms.items())
        if i < j:
            raise ValueError("input is not symmetric in the two roots")
        e1 = WPoly.variable("r", _ROOT_VARS, _ROOT_WEIGHTS) + WPoly.variable(
            "s", _ROOT_VARS, _ROOT_WEIGHTS
        )
        e2 = WPoly.monomial((1, 1), 1, _ROOT_VARS, _ROOT_WEIGHTS)
        out = out + WPoly.monomial((i - j, j), c)
        rest = rest - (e1 ** (i - j)) * (e2 ** j) * c
    return out


@lru_cache(maxsize=None)
def sym_power_chern(m: int) -> tuple[WPoly, ...]:
    """Total Chern class [c_0, ..., c_(m+1)] of Sym^m of a rank-2 bundle.

    Splitting principle: if the bundle has roots r, s then Sym^m has the
    m+1 roots i*r + j*s with i + j = m; each elementary symmetric function
    of those is rewritten in c1 = r + s, c2 = r*s.
    """
    if m < 1:
        raise ValueError("sym_power_chern needs m >= 1")
    r = WPoly.variable("r", _ROOT_VARS, _ROOT_WEIGHTS)
    s = WPoly.variable("s", _ROOT_VARS, _ROOT_WEIGHTS)
    roots = [r * i + s * (m - i) for i in range(m + 1)]
    elementary = [WPoly.constant(1, _ROOT_VARS, _ROOT_WEIGHTS)]
    for root in roots:
        nxt = [elementary[0]]
        for k in range(1, len(elementary) + 1):
            term = elementary[k] if k < len(elementary) else WPoly.zero(_ROOT_VARS, _ROOT_WEIGHTS)
            nxt.append(term + elementary[k - 1] * root)
        elementary = nxt
    return tuple(_symmetric_reduce(e) for e in elementary)


def fano_poly() -> WPoly:
    """18*x^2*y + 9*y^2, the class of the lines on a cubic inside the ring."""
    return WPoly({(2, 1): 18, (0, 2): 9})


def fano_class(ring: GRing) -> GClass:
    """Normal form of 18*c1^2*c2 + 9*c2^2 in degree 4."""
    if ring.n < 2:
        raise UnsupportedRange("fano_class needs n >= 2")
    return normal_form(ring, fano_poly())


def pairing_matrix(ring: GRing, k: int) -> MatQ:
    """Poincare pairing deg(x_i * y_j) between degrees k and 2n - k."""
    n = ring.n
    if not 0 <= k <= 2 * n:
        raise UnsupportedRange(f"k must lie in 0..{2 * n}")
    left = ring.bases[k]
    right = ring.bases[2 * n - k]
    rows = []
    for ml in left:
        row = []
        for mr in right:
            prod = WPoly.monomial(ml) * WPoly.monomial(mr)
            row.append(degree_of_poly(ring, prod))
        rows.append(row)
    return MatQ.from_rows(rows, cols=len(right))
