"""Exact weighted polynomials over the rationals.

A :class:`WPoly` is a sparse map from exponent vectors to ``Fraction``
coefficients.  Every variable carries a positive integer weight and the
weighted degree of a monomial is the weight-dot-product of its exponents.
Most of the package works in Q[x, y] with weights (1, 2), where x and y
stand for the first and second Chern class of a rank-2 bundle.

The canonical text form sorts terms by descending graded-lex order, e.g.
``18*x^2*y + 9*y^2``; :meth:`WPoly.parse` inverts it exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

Exponents = tuple[int, ...]

CHERN_VARS = ("x", "y")
CHERN_WEIGHTS = (1, 2)

_TERM_RE = re.compile(
    r"(?P<coeff>-?\d+(?:/\d+)?)?"
    r"(?P<factors>(?:\*?[A-Za-z]\w*(?:\^\d+)?)*)$"
)
_FACTOR_RE = re.compile(r"([A-Za-z]\w*)(?:\^(\d+))?")


class WPoly:
    """Immutable sparse polynomial with a weighted grading."""

    __slots__ = ("vars", "weights", "terms")

    def __init__(
        self,
        terms: Mapping[Exponents, Fraction | int] | None = None,
        vars: tuple[str, ...] = CHERN_VARS,
        weights: tuple[int, ...] = CHERN_WEIGHTS,
    ):
        if len(vars) != len(weights):
            raise ValueError("one weight per variable required")
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be positive")
        clean: dict[Exponents, Fraction] = {}
        for exps, c in (terms or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(vars) or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps!r}")
            clean[exps] = c
        object.__setattr__(self, "vars", tuple(vars))
        object.__setattr__(self, "weights", tuple(weights))
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("WPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars=CHERN_VARS, weights=CHERN_WEIGHTS) -> "WPoly":
        return cls({}, vars, weights)

    @classmethod
    def constant(cls, c, vars=CHERN_VARS, weights=CHERN_WEIGHTS) -> "WPoly":
        zero = (0,) * len(vars)
        return cls({zero: Fraction(c)}, vars, weights)

    @classmethod
    def variable(cls, name: str, vars=CHERN_VARS, weights=CHERN_WEIGHTS) -> "WPoly":
        i = vars.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(vars)))
        return cls({exps: Fraction(1)}, vars, weights)

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff=1, vars=CHERN_VARS, weights=CHERN_WEIGHTS) -> "WPoly":
        return cls({tuple(exps): Fraction(coeff)}, vars, weights)

    # -- grading -----------------------------------------------------------

    def wdeg(self, exps: Exponents) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def is_zero(self) -> bool:
        return not self.terms

    def weighted_degree(self) -> int | None:
        """Maximum weighted degree of the support; ``None`` for zero."""
        if not self.terms:
            return None
        return max(self.wdeg(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {self.wdeg(e) for e in self.terms}
        return len(degrees) <= 1

    def homogeneous_degree(self) -> int:
        """Weighted degree of a nonzero homogeneous polynomial."""
        degrees = {self.wdeg(e) for e in self.terms}
        if len(degrees) != 1:
            raise ValueError("polynomial is zero or not homogeneous")
        return degrees.pop()

    def graded_component(self, d: int) -> "WPoly":
        """Sum of the terms of weighted degree exactly ``d``."""
        return WPoly(
            {e: c for e, c in self.terms.items() if self.wdeg(e) == d},
            self.vars,
            self.weights,
        )

    def coefficient(self, exps: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    # -- arithmetic ----------------------------------------------------------

    def _check_compatible(self, other: "WPoly") -> None:
        if self.vars != other.vars or self.weights != other.weights:
            raise ValueError(
                f"mismatched variable sets: {self.vars}/{self.weights} vs "
                f"{other.vars}/{other.weights}"
            )

    def _coerce(self, other) -> "WPoly":
        if isinstance(other, WPoly):
            self._check_compatible(other)
            return other
        return WPoly.constant(other, self.vars, self.weights)

    def __add__(self, other) -> "WPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return WPoly(out, self.vars, self.weights)

    __radd__ = __add__

    def __neg__(self) -> "WPoly":
        return WPoly({e: -c for e, c in self.terms.items()}, self.vars, self.weights)

    def __sub__(self, other) -> "WPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "WPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "WPoly":
        if not isinstance(other, WPoly):
            c = Fraction(other)
            return WPoly({e: c * v for e, v in self.terms.items()}, self.vars, self.weights)
        self._check_compatible(other)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return WPoly(out, self.vars, self.weights)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "WPoly":
        if k < 0:
            raise ValueError("negative power")
        result = WPoly.constant(1, self.vars, self.weights)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, WPoly):
            return NotImplemented
        return (
            self.vars == other.vars
            and self.weights == other.weights
            and self.terms == other.terms
        )

    __hash__ = None  # mutable-dict payload; not hashable

    # -- canonical text form -------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in descending graded-lex order (leading term first)."""
        return sorted(
            self.terms.items(), key=lambda t: (self.wdeg(t[0]), t[0]), reverse=True
        )

    def _format_monomial(self, exps: Exponents) -> str:
        parts = []
        for name, e in zip(self.vars, exps):
            if e == 0:
                continue
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = self._format_monomial(exps)
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"WPoly({self})"

    @classmethod
    def parse(cls, text: str, vars=CHERN_VARS, weights=CHERN_WEIGHTS) -> "WPoly":
        """Parse the canonical text form produced by ``str``."""
        text = text.strip()
        if text == "0":
            return cls.zero(vars, weights)
        # normalize "a - b" to "a + -b" then split on "+"
        text = text.replace("- ", "+ -").replace(" ", "")
        out: dict[Exponents, Fraction] = {}
        for chunk in text.split("+"):
            if not chunk:
                continue
            sign = Fraction(1)
            if chunk.startswith("-"):
                sign = Fraction(-1)
                chunk = chunk[1:]
            m = _TERM_RE.match(chunk)
            if not m:
                raise ValueError(f"cannot parse term {chunk!r}")
            coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
            exps = [0] * len(vars)
            for name, power in _FACTOR_RE.findall(m.group("factors") or ""):
                if name not in vars:
                    raise ValueError(f"unknown variable {name!r}")
                exps[vars.index(name)] += int(power) if power else 1
            key = tuple(exps)
            out[key] = out.get(key, Fraction(0)) + sign * coeff
        return cls(out, vars, weights)


def poly_mul(a: WPoly, b: WPoly) -> WPoly:
    """Exact product; raises ``ValueError`` on mismatched variable sets."""
    return a * b


def graded_component(p: WPoly, d: int) -> WPoly:
    return p.graded_component(d)
