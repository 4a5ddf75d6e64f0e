"""Finite tautological models of X, X^2 and X^3 with diagonal classes.

X is a cubic hypersurface of dimension n with hyperplane class h,
deg h^n = 3.  The Chow-side models close multiplication on explicit bases:

* ``XXClass`` on {h1^r h2^s : r, s <= n} plus the diagonal D, with
  D * (h1^s h2^t) = (1/3) * sum_(a+b=n+s+t) h1^a h2^b   (s + t >= 1)
  D * D = (chi/9) * h1^n h2^n
  (push-pull through the ambient projective space; the diagonal
  self-intersection is pinned by the top Chern class of the tangent
  bundle, (chi/3) h^n);
* ``X3Class`` on monomials, decorated diagonals D_ab * h_c^m, and the
  small diagonal D3 = D12 * D23, with the rules pulled back factor-wise
  and D3 * (h-monomial of degree m) = (1/9) * sum_(p+q+r=2n+m) h1^p h2^q h3^r.

The cohomological twins replace each diagonal by its Kunneth expansion
(1/3) * sum_j h_a^j h_b^(n-j) + d_ab, where d_ab is the projector onto the
primitive middle cohomology; primitive classes are killed by h, and
contractions follow d_ab * d_bc = (1/3) h_b^n d_ac (no sign bookkeeping:
the projector law is verified, not assumed).  Same-pair products d * d
never arise on X^3 and are rejected.

On top of the models: the decomposable coefficients of the small diagonal
after removing its axis corrections, the vanishing of the resulting
defect cycle, and the symbolic evaluator showing that the product of two
positive-codimension cycle classes is (1/9) * m_alpha * m_beta * h^(i+j),
a rank-1 image.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .errors import CheckFailed, UnsupportedRange
from .hodge import euler_cubic, hodge_cubic

Key = tuple

PAIRS = ((1, 2), (1, 3), (2, 3))


def _third(a: int, b: int) -> int:
    return ({1, 2, 3} - {a, b}).pop()


def _chi(n: int) -> int:
    return euler_cubic(n)


def primitive_dim(n: int) -> int:
    """Dimension of the primitive middle cohomology of the cubic."""
    return hodge_cubic(n).betti(n) - (1 if n % 2 == 0 else 0)


def primitive_self_pairing(n: int) -> int:
    """Integral of d * d on X^2: the signed trace chi - (n + 1)."""
    return _chi(n) - (n + 1)


# -- shared formal-sum plumbing ------------------------------------------------


class _FormalSum:
    """Linear combination of basis keys; subclasses define the term products."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Key, Fraction | int] | None = None):
        self.n = n
        clean: dict[Key, Fraction] = {}
        for key, c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                clean[key] = c
        self.terms = clean

    def _check(self, other) -> None:
        if type(self) is not type(other) or self.n != other.n:
            raise ValueError("operands live in different models")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return type(self)(self.n, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) - c
        return type(self)(self.n, out)

    def scale(self, c):
        c = Fraction(c)
        return type(self)(self.n, {k: c * v for k, v in self.terms.items()})

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        self._check(other)
        out: dict[Key, Fraction] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                for key, c in self._term_mul(k1, k2).items():
                    out[key] = out.get(key, Fraction(0)) + c1 * c2 * c
        return type(self)(self.n, out)

    def _term_mul(self, k1: Key, k2: Key) -> dict[Key, Fraction]:
        raise NotImplementedError

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key: Key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __eq__(self, other) -> bool:
        return (
            type(self) is type(other) and self.n == other.n and self.terms == other.terms
        )

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for key in sorted(self.terms, key=self._sort_key):
            c = self.terms[key]
            body = self._format_key(key)
            mag = abs(c)
            text = body if (body and mag == 1) else (f"{mag}*{body}" if body else str(mag))
            if not pieces:
                pieces.append(text if c > 0 else f"-{text}")
            else:
                pieces.append(f"+ {text}" if c > 0 else f"- {text}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, {self})"

    @staticmethod
    def _sort_key(key: Key):
        return key

    @staticmethod
    def _format_key(key: Key) -> str:
        return str(key)


def _format_h(slots: dict[int, int]) -> str:
    parts = []
    for slot in sorted(slots):
        e = slots[slot]
        if e:
            parts.append(f"h{slot}" if e == 1 else f"h{slot}^{e}")
    return "*".join(parts)


# -- the hypersurface itself ---------------------------------------------------


@dataclass(frozen=True)
class XClass:
    """Element of the h-power model of X: coefficients of h^0 .. h^n."""

    n: int
    coeffs: tuple[Fraction, ...]

    @classmethod
    def h_power(cls, n: int, i: int, coeff: Fraction | int = 1) -> "XClass":
        if not 0 <= i <= n:
            raise ValueError(f"h^{i} out of range on an n={n} model")
        return cls(n, tuple(Fraction(coeff) if j == i else Fraction(0) for j in range(n + 1)))

    def degree(self) -> Fraction:
        """Integral of the top piece; deg h^n = 3."""
        return 3 * self.coeffs[self.n]

    def __mul__(self, other: "XClass") -> "XClass":
        out = [Fraction(0)] * (self.n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0 and i + j <= self.n:
                    out[i + j] += a * b
        return XClass(self.n, tuple(out))

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c != 0:
                mono = "1" if i == 0 else ("h" if i == 1 else f"h^{i}")
                parts.append(f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"


# -- X x X: Chow model and cohomological twin -----------------------------------

MONO = "m"
DIAG = "D"
PRIM = "d"
SMALL = "D3"


class XXClass(_FormalSum):
    """Chow model of X x X on {h1^r h2^s} and the diagonal ("D",)."""

    def _term_mul(self, k1, k2):
        n = self.n
        if k1[0] == DIAG and k2[0] == DIAG:
            return {(MONO, n, n): Fraction(_chi(n), 9)}
        if k1[0] == DIAG or k2[0] == DIAG:
            mono = k2 if k1[0] == DIAG else k1
            _, r, s = mono
            if r + s == 0:
                return {(DIAG,): Fraction(1)}
            return {
                (MONO, a, n + r + s - a): Fraction(1, 3)
                for a in range(max(0, r + s), n + 1)
                if n + r + s - a <= n
            }
        _, r1, s1 = k1
        _, r2, s2 = k2
        if r1 + r2 > n or s1 + s2 > n:
            return {}
        return {(MONO, r1 + r2, s1 + s2): Fraction(1)}

    @staticmethod
    def _sort_key(key):
        if key[0] == MONO:
            return (0, key[1] + key[2], -key[1], -key[2])
        return (1,)

    @staticmethod
    def _format_key(key):
        if key[0] == MONO:
            return _format_h({1: key[1], 2: key[2]})
        return "D"


def xx_monomial(n: int, r: int, s: int, coeff=1) -> XXClass:
    if not (0 <= r <= n and 0 <= s <= n):
        raise ValueError("exponents out of the model range")
    return XXClass(n, {(MONO, r, s): Fraction(coeff)})


def xx_diagonal(n: int) -> XXClass:
    return XXClass(n, {(DIAG,): Fraction(1)})


def xx_mul(a: XXClass, b: XXClass) -> XXClass:
    return a * b


def xx_degree(a: XXClass) -> Fraction:
    """Integral of the codimension-2n piece; deg(h1^n h2^n) = 9."""
    return 9 * a.coefficient((MONO, a.n, a.n))


def xx_basis(n: int) -> list[Key]:
    keys: list[Key] = [(MONO, r, s) for r in range(n + 1) for s in range(n + 1)]
    keys.append((DIAG,))
    return keys


class CohXXClass(_FormalSum):
    """Cohomological twin: monomials plus the primitive projector ("d",)."""

    def _term_mul(self, k1, k2):
        n = self.n
        if k1[0] == PRIM and k2[0] == PRIM:
            return {(MONO, n, n): Fraction(primitive_self_pairing(n), 9)}
        if k1[0] == PRIM or k2[0] == PRIM:
            mono = k2 if k1[0] == PRIM else k1
            _, r, s = mono
            if r == s == 0:
                return {(PRIM,): Fraction(1)}
            return {}  # primitive classes are killed by h
        _, r1, s1 = k1
        _, r2, s2 = k2
        if r1 + r2 > n or s1 + s2 > n:
            return {}
        return {(MONO, r1 + r2, s1 + s2): Fraction(1)}

    _sort_key = staticmethod(XXClass._sort_key)

    @staticmethod
    def _format_key(key):
        if key[0] == MONO:
            return _format_h({1: key[1], 2: key[2]})
        return "d"


def xx_diagonal_expansion(n: int) -> CohXXClass:
    """Kunneth expansion (1/3) sum_j h1^j h2^(n-j) + d of the diagonal."""
    terms: dict[Key, Fraction] = {(MONO, j, n - j): Fraction(1, 3) for j in range(n + 1)}
    terms[(PRIM,)] = Fraction(1)
    return CohXXClass(n, terms)


def xx_to_coh(a: XXClass) -> CohXXClass:
    out = CohXXClass(a.n)
    for key, c in a.terms.items():
        if key[0] == MONO:
            out = out + CohXXClass(a.n, {key: c})
        else:
            out = out + xx_diagonal_expansion(a.n).scale(c)
    return out


# -- X^3: Chow model and cohomological twin --------------------------------------


def _delta_push(n: int, m: int) -> dict[Key, Fraction]:
    """Small-diagonal pushforward of h^m: (1/9) sum over p+q+r = 2n+m."""
    out: dict[Key, Fraction] = {}
    for p in range(n + 1):
        for q in range(n + 1):
            r = 2 * n + m - p - q
            if 0 <= r <= n:
                out[(MONO, p, q, r)] = Fraction(1, 9)
    return out


class X3Class(_FormalSum):
    """Chow model of X^3: monomials, decorated diagonals, small diagonal.

    Keys: ("m", i, j, k); ("D", a, b, m) for the diagonal in slots (a, b)
    times h_c^m on the remaining slot; ("D3",).
    """

    def _term_mul(self, k1, k2):
        n = self.n
        if k1[0] == MONO and k2[0] == MONO:
            exps = tuple(e1 + e2 for e1, e2 in zip(k1[1:], k2[1:]))
            if any(e > n for e in exps):
                return {}
            return {(MONO, *exps): Fraction(1)}
        if k1[0] == MONO:
            k1, k2 = k2, k1
        if k2[0] == MONO:
            exps = {1: k2[1], 2: k2[2], 3: k2[3]}
            if k1[0] == SMALL:
                m = sum(exps.values())
                if m == 0:
                    return {(SMALL,): Fraction(1)}
                return _delta_push(n, m)
            _, a, b, m = k1
            c = _third(a, b)
            s, t, u = exps[a], exps[b], exps[c]
            if s + t == 0:
                if m + u > n:
                    return {}
                return {(DIAG, a, b, m + u): Fraction(1)}
            if m + u > n:
                return {}
            out: dict[Key, Fraction] = {}
            for p in range(max(0, s + t), n + 1):
                q = n + s + t - p
                if 0 <= q <= n:
                    slots = {a: p, b: q, c: m + u}
                    out[(MONO, slots[1], slots[2], slots[3])] = Fraction(1, 3)
            return out
        if k1[0] == SMALL and k2[0] == SMALL:
            return {}  # codimension 4n > 3n
        if k1[0] == SMALL or k2[0] == SMALL:
            diag = k2 if k1[0] == SMALL else k1
            _, a, b, m = diag
            if m > 0:
                return {}  # (chi/3) h^n inserted; any extra h dies above degree n
            return {(MONO, n, n, n): Fraction(_chi(n), 27)}
        _, a1, b1, m1 = k1
        _, a2, b2, m2 = k2
        if (a1, b1) == (a2, b2):
            # pulled-back diagonal self-intersection, decorations multiply
            if m1 + m2 > n:
                return {}
            c = _third(a1, b1)
            slots = {a1: n, b1: n, c: m1 + m2}
            return {(MONO, slots[1], slots[2], slots[3]): Fraction(_chi(n), 9)}
        # distinct diagonals meet in the small diagonal; decorations pile onto it
        if m1 + m2 == 0:
            return {(SMALL,): Fraction(1)}
        return _delta_push(n, m1 + m2)

    @staticmethod
    def _sort_key(key):
        if key[0] == MONO:
            return (0, key[1] + key[2] + key[3], tuple(-e for e in key[1:]))
        if key[0] == DIAG:
            return (1, key[1:])
        return (2,)

    @staticmethod
    def _format_key(key):
        if key[0] == MONO:
            return _format_h({1: key[1], 2: key[2], 3: key[3]})
        if key[0] == DIAG:
            _, a, b, m = key
            tail = _format_h({_third(a, b): m})
            return f"D{a}{b}" + (f"*{tail}" if tail else "")
        return "D3"


def x3_monomial(n: int, i: int, j: int, k: int, coeff=1) -> X3Class:
    if not all(0 <= e <= n for e in (i, j, k)):
        raise ValueError("exponents out of the model range")
    return X3Class(n, {(MONO, i, j, k): Fraction(coeff)})


def x3_diagonal(n: int, a: int, b: int, m: int = 0, coeff=1) -> X3Class:
    if (a, b) not in PAIRS:
        raise ValueError("diagonal pair must be one of (1,2), (1,3), (2,3)")
    if not 0 <= m <= n:
        raise ValueError("decoration exponent out of range")
    return X3Class(n, {(DIAG, a, b, m): Fraction(coeff)})


def x3_small_diagonal(n: int, coeff=1) -> X3Class:
    return X3Class(n, {(SMALL,): Fraction(coeff)})


def x3_mul(a: X3Class, b: X3Class) -> X3Class:
    return a * b


def x3_degree(a: X3Class) -> Fraction:
    """Integral of the codimension-3n piece; deg(h1^n h2^n h3^n) = 27."""
    return 27 * a.coefficient((MONO, a.n, a.n, a.n))


def x3_pair(a: X3Class, b: X3Class) -> Fraction:
    return x3_degree(a * b)


class CohX3Class(_FormalSum):
    """Cohomological model: monomials plus primitive projectors d_ab * h_c^m."""

    def _term_mul(self, k1, k2):
        n = self.n
        if k1[0] == MONO and k2[0] == MONO:
            exps = tuple(e1 + e2 for e1, e2 in zip(k1[1:], k2[1:]))
            if any(e > n for e in exps):
                return {}
            return {(MONO, *exps): Fraction(1)}
        if k1[0] == MONO:
            k1, k2 = k2, k1
        if k2[0] == MONO:
            _, a, b, m = k1
            c = _third(a, b)
            exps = {1: k2[1], 2: k2[2], 3: k2[3]}
            if exps[a] or exps[b]:
                return {}  # primitive slots are killed by h
            if m + exps[c] > n:
                return {}
            return {(PRIM, a, b, m + exps[c]): Fraction(1)}
        _, a1, b1, m1 = k1
        _, a2, b2, m2 = k2
        if (a1, b1) == (a2, b2):
            raise ValueError("same-pair primitive product never arises in the model")
        if m1 > 0 or m2 > 0:
            return {}  # decorations sit on a primitive slot of the other factor
        shared = ({a1, b1} & {a2, b2}).pop()
        rest = sorted(({a1, b1} | {a2, b2}) - {shared})
        return {(PRIM, rest[0], rest[1], n): Fraction(1, 3)}

    @staticmethod
    def _sort_key(key):
        if key[0] == MONO:
            return (0, key[1] + key[2] + key[3], tuple(-e for e in key[1:]))
        return (1, key[1:])

    @staticmethod
    def _format_key(key):
        if key[0] == MONO:
            return _format_h({1: key[1], 2: key[2], 3: key[3]})
        _, a, b, m = key
        tail = _format_h({_third(a, b): m})
        return f"d{a}{b}" + (f"*{tail}" if tail else "")


def x3_diagonal_expansion(n: int, a: int, b: int, m: int = 0) -> CohX3Class:
    """Kunneth expansion of D_ab * h_c^m in the cohomological model."""
    c = _third(a, b)
    terms: dict[Key, Fraction] = {}
    if m <= n:
        for j in range(n + 1):
            slots = {a: j, b: n - j, c: m}
            terms[(MONO, slots[1], slots[2], slots[3])] = Fraction(1, 3)
        terms[(PRIM, a, b, m)] = Fraction(1)
    return CohX3Class(n, terms)


@lru_cache(maxsize=None)
def small_diagonal_coh(n: int) -> CohX3Class:
    """Class of the small diagonal, computed as [D12] * [D23] in the model."""
    if n < 1:
        raise UnsupportedRange("small_diagonal_coh needs n >= 1")
    return x3_diagonal_expansion(n, 1, 2) * x3_diagonal_expansion(n, 2, 3)


def x3_to_coh(a: X3Class) -> CohX3Class:
    """Cycle-class map of the model: diagonals go to their Kunneth expansions."""
    out = CohX3Class(a.n)
    for key, c in a.terms.items():
        if key[0] == MONO:
            out = out + CohX3Class(a.n, {key: c})
        elif key[0] == DIAG:
            out = out + x3_diagonal_expansion(a.n, key[1], key[2], key[3]).scale(c)
        else:
            out = out + small_diagonal_coh(a.n).scale(c)
    return out


def push13(a: CohX3Class) -> CohXXClass:
    """Pushforward to slots (1, 3): integrate slot 2 (h2^n -> 3, free d -> 0)."""
    out: dict[Key, Fraction] = {}

    def bump(key, c):
        out[key] = out.get(key, Fraction(0)) + c

    for key, c in a.terms.items():
        if key[0] == MONO:
            _, i, j, k = key
            if j == a.n:
                bump((MONO, i, k), 3 * c)
        else:
            _, p, q, m = key
            if (p, q) == (1, 3):
                if m == a.n:
                    bump((PRIM,), 3 * c)
            # primitive slot 2 integrates to zero for the other pairs
    return CohXXClass(a.n, out)


def coh_pair(a: CohX3Class, b: CohX3Class) -> Fraction:
    """Integration pairing on the cohomological model.

    Monomials pair against complementary monomials (value 27); primitive
    terms pair against same-pair primitive terms with complementary
    decorations (value 3 * (chi - n - 1), the primitive self-pairing times
    the degree of h^n); the two sectors are orthogonal.
    """
    n = a.n
    total = Fraction(0)
    s = primitive_self_pairing(n)
    for k1, c1 in a.terms.items():
        for k2, c2 in b.terms.items():
            if k1[0] == MONO and k2[0] == MONO:
                if all(e1 + e2 == n for e1, e2 in zip(k1[1:], k2[1:])):
                    total += 27 * c1 * c2
            elif k1[0] == PRIM and k2[0] == PRIM:
                if k1[1:3] == k2[1:3] and k1[3] + k2[3] == n:
                    total += 3 * s * c1 * c2
    return total


# -- the decomposition of the small diagonal ------------------------------------


@lru_cache(maxsize=None)
def corrected_small_diagonal(n: int) -> X3Class:
    """D3 minus a third of each diagonal decorated with the opposite h^n."""
    if n < 1:
        raise UnsupportedRange("corrected_small_diagonal needs n >= 1")
    out = x3_small_diagonal(n)
    for a, b in PAIRS:
        out = out - x3_diagonal(n, a, b, n, Fraction(1, 3))
    return out


@lru_cache(maxsize=None)
def decomposable_coefficients(n: int) -> dict[tuple[int, int, int], Fraction]:
    """Coefficients of the corrected small diagonal on the monomial basis.

    The primitive terms of the Kunneth expansions must cancel exactly
    (:class:`CheckFailed` otherwise); the returned table covers every
    (i, j, k) with i + j + k = 2n and 0 <= i, j, k <= n, including zeros,
    and is invariant under permutations of the slots.
    """
    image = x3_to_coh(corrected_small_diagonal(n))
    table: dict[tuple[int, int, int], Fraction] = {}
    for i in range(n + 1):
        for j in range(n + 1):
            k = 2 * n - i - j
            if 0 <= k <= n:
                table[(i, j, k)] = Fraction(0)
    for key, c in image.terms.items():
        if key[0] != MONO:
            raise CheckFailed(
                f"primitive term {CohX3Class._format_key(key)} survives at n={n}"
            )
        table[key[1:]] = c
    return table


@lru_cache(maxsize=None)
def small_diagonal_defect(n: int) -> X3Class:
    """Corrected small diagonal minus its decomposable part; must die in cohomology."""
    out = corrected_small_diagonal(n)
    for (i, j, k), c in decomposable_coefficients(n).items():
        if c != 0:
            out = out - x3_monomial(n, i, j, k, c)
    return out


def defect_vanishes_cohomologically(n: int) -> bool:
    image = x3_to_coh(small_diagonal_defect(n))
    if not image.is_zero():
        raise CheckFailed(f"defect cycle has nonzero image at n={n}: {image}")
    return True


# -- the symbolic product evaluator ----------------------------------------------


@dataclass(frozen=True)
class FormalCycle:
    """Opaque cycle class: only its codimension and moment survive.

    The moment is the degree of the zero-cycle (class) * h^(n - codim).
    """

    codim: int
    moment: Fraction

    def __post_init__(self):
        if self.codim <= 0:
            raise ValueError("formal cycles must have positive codimension")
        object.__setattr__(self, "moment", Fraction(self.moment))


def cycle_product(n: int, alpha: FormalCycle, beta: FormalCycle) -> XClass:
    """Product of two formal cycles through the small-diagonal decomposition.

    Evaluates the pushforward to the third slot of
    pi1* alpha * pi2* beta * (corrected small diagonal) term by term:

    * the D12 * h3^n correction integrates alpha * beta over X^2 and dies
      because its codimension n + i + j is below 2n (i + j < n);
    * the D23 / D13 corrections contain alpha * h^n resp. beta * h^n,
      zero above codimension n (i, j > 0);
    * the small-diagonal slot itself is the product being computed, and the
      vanishing of the defect cycle trades it for the decomposable table,
      where only (n-i, n-j, i+j) survives the two integrations.
    """
    i, j = alpha.codim, beta.codim
    if not (0 < i and 0 < j and i + j < n):
        raise UnsupportedRange(
            f"cycle_product needs 0 < i, 0 < j, i + j < n; got i={i}, j={j}, n={n}"
        )
    table = decomposable_coefficients(n)
    coeff = Fraction(0)
    for (r, s, t), a_rst in table.items():
        if a_rst == 0:
            continue
        # deg(h^r * alpha) is m_alpha for r = n - i, zero otherwise; same for beta
        if r == n - i and s == n - j:
            assert t == i + j
            coeff += a_rst * alpha.moment * beta.moment
    out = [Fraction(0)] * (n + 1)
    out[i + j] = coeff
    return XClass(n, tuple(out))
