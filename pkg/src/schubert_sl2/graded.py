"""Graded polynomials in alpha0, alpha1 with exact rational coefficients.

These house the cohomology structure constants.  Monomials are encoded as
exponent pairs ``(i, j)`` meaning ``alpha0^i * alpha1^j``; coefficients are
:class:`fractions.Fraction` because closed forms carry factors like 1/12 or
1/4 before they telescope to integers.  No zero coefficient is stored.

Canonical text form: ``c*A0^i*A1^j`` per term, joined by `` + `` and sorted
by ``(i, j)``; zero prints as ``0``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator

from .laurent import Weight

_TERM_RE = re.compile(r"^(-?\d+(?:/\d+)?)\*A0\^(\d+)\*A1\^(\d+)$")

Rational = int | Fraction


class GradedPoly:
    """Polynomial in alpha0, alpha1 over the rationals, canonical form."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | Iterable[tuple[tuple[int, int], Rational]] = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        canonical: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i},{j})")
            c = Fraction(c)
            if c:
                canonical[(i, j)] = c
        self._terms = canonical

    @classmethod
    def zero(cls) -> "GradedPoly":
        return cls()

    @classmethod
    def const(cls, value: Rational) -> "GradedPoly":
        return cls({(0, 0): Fraction(value)})

    @classmethod
    def alpha(cls, idx: int) -> "GradedPoly":
        if idx not in (0, 1):
            raise ValueError("variable index must be 0 or 1")
        return cls({(1, 0) if idx == 0 else (0, 1): Fraction(1)})

    @classmethod
    def from_weight(cls, w: Weight) -> "GradedPoly":
        """Lift a root-lattice vector to the degree-1 form a0*alpha0 + a1*alpha1."""
        return cls({(1, 0): Fraction(w[0]), (0, 1): Fraction(w[1])})

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        return iter(self._terms.items())

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GradedPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(0, 0): Fraction(other)} if other else {})
        return NotImplemented

    __hash__ = None

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        if not isinstance(other, GradedPoly):
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        result = GradedPoly.__new__(GradedPoly)
        result._terms = out
        return result

    def __neg__(self) -> "GradedPoly":
        result = GradedPoly.__new__(GradedPoly)
        result._terms = {m: -c for m, c in self._terms.items()}
        return result

    def __sub__(self, other: "GradedPoly") -> "GradedPoly":
        return self + (-other)

    def __mul__(self, other) -> "GradedPoly":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            result = GradedPoly.__new__(GradedPoly)
            result._terms = (
                {m: c * other for m, c in self._terms.items()} if other else {}
            )
            return result
        if not isinstance(other, GradedPoly):
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                m = (i1 + i2, j1 + j2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        result = GradedPoly.__new__(GradedPoly)
        result._terms = out
        return result

    __rmul__ = __mul__

    def degree_component(self, d: int) -> "GradedPoly":
        result = GradedPoly.__new__(GradedPoly)
        result._terms = {m: c for m, c in self._terms.items() if m[0] + m[1] == d}
        return result

    def is_homogeneous_of_degree(self, d: int) -> bool:
        """True iff every stored monomial has total degree d (zero qualifies)."""
        return all(i + j == d for i, j in self._terms)

    def homogeneous_degree(self) -> int | None:
        """The common total degree, or None for zero or mixed polynomials."""
        degrees = {i + j for i, j in self._terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def constant_value(self) -> Fraction:
        """The value of a degree-0 polynomial; raises on higher-degree terms."""
        if not self.is_homogeneous_of_degree(0):
            raise ValueError(f"{self!r} is not constant")
        return self._terms.get((0, 0), Fraction(0))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(
            f"{c}*A0^{i}*A1^{j}" for (i, j), c in sorted(self._terms.items())
        )

    @classmethod
    def from_text(cls, text: str) -> "GradedPoly":
        text = text.strip()
        if text == "0":
            return cls.zero()
        terms: dict[tuple[int, int], Fraction] = {}
        for part in text.split(" + "):
            m = _TERM_RE.match(part)
            if m is None:
                raise ValueError(f"malformed graded term {part!r}")
            c = Fraction(m.group(1))
            key = (int(m.group(2)), int(m.group(3)))
            if c == 0:
                raise ValueError(f"zero coefficient stored at {part!r}")
            if key in terms:
                raise ValueError(f"duplicate monomial at {part!r}")
            terms[key] = c
        return cls(terms)

    def __repr__(self) -> str:
        return f"GradedPoly({self.to_text()!r})"
