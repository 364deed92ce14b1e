"""Exact Laurent-polynomial arithmetic over the rank-2 root lattice.

Weights are integer vectors ``a*alpha0 + b*alpha1`` in the root lattice of
affine sl2; they serve as the exponents of the character monomials ``e^w``.
A :class:`LaurentPoly` is a finitely supported map ``Weight -> int`` with
arbitrary-precision coefficients, i.e. an element of the character ring
restricted to the root lattice.  The zero polynomial is the empty map and
no stored coefficient is ever zero (canonical form).

Canonical text form: each term prints as ``c*E[a,b]`` (meaning
``c * e^(a*alpha0 + b*alpha1)``), terms joined by `` + `` and sorted by
``(a, b)`` lexicographically; the zero polynomial prints as ``0``.  Every
serializer in the package uses this form.

All values are immutable after construction and all operations are pure,
so concurrent use needs no coordination.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Iterator, NamedTuple

from .errors import NotDivisible, ZeroInput


class Weight(NamedTuple):
    """Root-lattice vector a0*alpha0 + a1*alpha1 with componentwise arithmetic."""

    a0: int
    a1: int

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.a0 + other[0], self.a1 + other[1])

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.a0 - other[0], self.a1 - other[1])

    def __neg__(self) -> "Weight":
        return Weight(-self.a0, -self.a1)

    def __mul__(self, c: int) -> "Weight":
        return Weight(c * self.a0, c * self.a1)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.a0}*a0+{self.a1}*a1"


ZERO_WEIGHT = Weight(0, 0)
ALPHA0 = Weight(1, 0)
ALPHA1 = Weight(0, 1)

_TERM_RE = re.compile(r"^(-?\d+)\*E\[(-?\d+),(-?\d+)\]$")


class LaurentPoly:
    """Finitely supported integer combination of character monomials e^w."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | Iterable[tuple[Weight, int]] = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        canonical: dict[Weight, int] = {}
        for w, c in items:
            if c:
                canonical[Weight(*w)] = c
        self._terms = canonical

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({ZERO_WEIGHT: 1})

    @classmethod
    def monomial(cls, coeff: int, weight: Weight) -> "LaurentPoly":
        return cls({Weight(*weight): coeff})

    def items(self) -> Iterator[tuple[Weight, int]]:
        return iter(self._terms.items())

    def coeff(self, weight: Weight) -> int:
        return self._terms.get(Weight(*weight), 0)

    def support(self) -> set[Weight]:
        return set(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({ZERO_WEIGHT: other} if other else {})
        return NotImplemented

    __hash__ = None

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = out
        return result

    def __neg__(self) -> "LaurentPoly":
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = {w: -c for w, c in self._terms.items()}
        return result

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            result = LaurentPoly.__new__(LaurentPoly)
            result._terms = (
                {w: c * other for w, c in self._terms.items()} if other else {}
            )
            return result
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        # convolution product; iterate the smaller factor outermost
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Weight, int] = {}
        for wa, ca in a.items():
            for wb, cb in b.items():
                w = wa + wb
                s = out.get(w, 0) + ca * cb
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = out
        return result

    __rmul__ = __mul__

    def shift(self, weight: Weight) -> "LaurentPoly":
        """Multiply by the monomial e^weight (an exponent translation)."""
        weight = Weight(*weight)
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = {w + weight: c for w, c in self._terms.items()}
        return result

    def eval_one(self) -> int:
        """Evaluate every character at 1, i.e. sum all coefficients."""
        return sum(self._terms.values())

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(
            f"{c}*E[{w.a0},{w.a1}]" for w, c in sorted(self._terms.items())
        )

    @classmethod
    def from_text(cls, text: str) -> "LaurentPoly":
        """Parse the canonical text form; rejects zero or duplicate terms."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        terms: dict[Weight, int] = {}
        for part in text.split(" + "):
            m = _TERM_RE.match(part)
            if m is None:
                raise ValueError(f"malformed Laurent term {part!r}")
            c, a, b = (int(g) for g in m.groups())
            w = Weight(a, b)
            if c == 0:
                raise ValueError(f"zero coefficient stored at {part!r}")
            if w in terms:
                raise ValueError(f"duplicate exponent at {part!r}")
            terms[w] = c
        return cls(terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"


def exp(weight: Weight) -> LaurentPoly:
    """The monomial e^weight."""
    return LaurentPoly.monomial(1, weight)


def _monomial_quotient(p: dict, mu: Weight, c: int) -> dict | None:
    out = {}
    for w, v in p.items():
        q, r = divmod(v, c)
        if r:
            return None
        out[w - mu] = q
    return out


def _binomial_quotient(p: dict, d: dict) -> dict | None:
    """Divide by a two-term divisor via residue classes mod its exponent gap.

    Writing the divisor as e^mu0 * (c1*e^gamma + c0), terms of the shifted
    dividend split into classes w = rho + t*gamma; within each class the
    division is univariate division by (c1*x + c0), which is exact and
    order-free.
    """
    (mu0, c0), (mu1, c1) = sorted(d.items())
    gamma = mu1 - mu0
    classes: dict[Weight, dict[int, int]] = {}
    for w, v in p.items():
        w = w - mu0
        t = w.a0 // gamma.a0 if gamma.a0 else w.a1 // gamma.a1
        rho = w - t * gamma
        classes.setdefault(rho, {})[t] = v
    out: dict[Weight, int] = {}
    for rho, coeffs in classes.items():
        lo, hi = min(coeffs), max(coeffs)
        a = [coeffs.get(t, 0) for t in range(lo, hi + 1)]
        # synthetic division of sum a[t]*x^t by (c1*x + c0), x = e^gamma
        for k in range(len(a) - 1, 0, -1):
            q, r = divmod(a[k], c1)
            if r:
                return None
            a[k] = q
            a[k - 1] -= q * c0
        if a[0]:
            return None
        for t, c in enumerate(a[1:], start=lo):
            if c:
                out[rho + t * gamma] = c
    return out


def _univariate_quotient(num: dict[int, int], den: dict[int, int]) -> dict | None:
    """Exact division of univariate integer Laurent polynomials (dicts)."""
    if not num:
        return {}
    dmax = max(den)
    lead = den[dmax]
    qmin = min(num) - min(den)  # valuation of any exact quotient
    quot: dict[int, int] = {}
    rem = dict(num)
    while rem:
        e = max(rem) - dmax
        if e < qmin:
            return None
        c, r = divmod(rem[e + dmax], lead)
        if r:
            return None
        quot[e] = c
        for k, v in den.items():
            s = rem.get(k + e, 0) - c * v
            if s:
                rem[k + e] = s
            else:
                rem.pop(k + e, None)
    return quot


def _a1_layers(p: dict) -> dict[int, dict[int, int]]:
    out: dict[int, dict[int, int]] = {}
    for w, c in p.items():
        out.setdefault(w.a1, {})[w.a0] = c
    return out


def _general_quotient(p: dict, d: dict) -> dict | None:
    """Exact division by an arbitrary divisor: univariate in alpha1 with
    coefficients divided exactly as univariate alpha0-polynomials."""
    dlayers = _a1_layers(d)
    dmax, dmin = max(dlayers), min(dlayers)
    qmin = min(w.a1 for w in p) - dmin  # lowest alpha1-layer of any quotient
    out: dict[Weight, int] = {}
    rem = dict(p)
    while rem:
        rlayers = _a1_layers(rem)
        e = max(rlayers) - dmax
        if e < qmin:
            return None
        t = _univariate_quotient(rlayers[e + dmax], dlayers[dmax])
        if t is None:
            return None
        for x0, c in t.items():
            out[Weight(x0, e)] = c
            for w, v in d.items():
                key = Weight(w.a0 + x0, w.a1 + e)
                s = rem.get(key, 0) - c * v
                if s:
                    rem[key] = s
                else:
                    rem.pop(key, None)
    return out


def exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Return q with q*d == p exactly, else raise :class:`NotDivisible`.

    The quotient is re-verified by multiplication before it is returned,
    so a wrong accept is impossible.
    """
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return LaurentPoly.zero()
    dterms = dict(d.items())
    pterms = dict(p.items())
    if len(dterms) == 1:
        ((mu, c),) = dterms.items()
        raw = _monomial_quotient(pterms, mu, c)
    elif len(dterms) == 2:
        raw = _binomial_quotient(pterms, dterms)
    else:
        raw = _general_quotient(pterms, dterms)
    if raw is None:
        raise NotDivisible(f"{p!r} has no exact quotient by {d!r}")
    q = LaurentPoly(raw)
    if q * d != p:
        raise NotDivisible(
            f"quotient verification failed for {p!r} / {d!r} (internal bug)"
        )
    return q


def lowest_graded_part(p: LaurentPoly):
    """Lowest nonzero homogeneous component of p under e^w -> sum w^t/t!.

    The substitution sends each character to its exponential series in the
    polynomial ring on alpha0, alpha1; the degree-t component of the image
    is sum_w c_w * w^t / t!, computed exactly with rational arithmetic.  A
    nonzero polynomial has a nonzero component at some degree below its
    number of terms (specialize alpha = (1, r) with r separating the
    support: a Vandermonde system forces some moment to survive).
    """
    from .graded import GradedPoly

    if not p:
        raise ZeroInput("the zero polynomial has no lowest graded part")
    terms = list(p.items())
    for deg in range(len(terms)):
        inv = Fraction(1, factorial(deg))
        comp: dict[tuple[int, int], Fraction] = {}
        for w, c in terms:
            for i in range(deg + 1):
                v = c * comb(deg, i) * w.a0**i * w.a1 ** (deg - i) * inv
                if v:
                    key = (i, deg - i)
                    s = comp.get(key, 0) + v
                    if s:
                        comp[key] = s
                    else:
                        comp.pop(key, None)
        if comp:
            return GradedPoly(comp)
    raise RuntimeError("unreachable: nonzero polynomial with all moments zero")
