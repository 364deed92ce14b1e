"""Display renderings of polynomial values: compact plain text and LaTeX.

The canonical machine form lives on the value classes themselves
(``to_text``/``from_text``); these functions are presentation only.  Terms
are always emitted in exponent-lexicographic order so rendered tables are
diffable.
"""

from __future__ import annotations

from fractions import Fraction

from .graded import GradedPoly
from .laurent import LaurentPoly


def _join_signed(parts: list[tuple[bool, str]]) -> str:
    # parts: (is_negative, magnitude string)
    out = []
    for idx, (neg, text) in enumerate(parts):
        if idx == 0:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f" - {text}" if neg else f" + {text}")
    return "".join(out)


def laurent_pretty(p: LaurentPoly) -> str:
    if not p:
        return "0"
    parts = []
    for w, c in sorted(p.items()):
        base = None if (w.a0, w.a1) == (0, 0) else f"E[{w.a0},{w.a1}]"
        mag = abs(c)
        if base is None:
            text = str(mag)
        elif mag == 1:
            text = base
        else:
            text = f"{mag}*{base}"
        parts.append((c < 0, text))
    return _join_signed(parts)


def graded_pretty(g: GradedPoly) -> str:
    if not g:
        return "0"
    parts = []
    for (i, j), c in sorted(g.items()):
        factors = []
        if i:
            factors.append("A0" if i == 1 else f"A0^{i}")
        if j:
            factors.append("A1" if j == 1 else f"A1^{j}")
        base = "*".join(factors) if factors else None
        mag = abs(c)
        if base is None:
            text = str(mag)
        elif mag == 1:
            text = base
        else:
            text = f"{mag}*{base}"
        parts.append((c < 0, text))
    return _join_signed(parts)


def _weight_latex(a0: int, a1: int) -> str:
    pieces = []
    for coeff, symbol in ((a0, r"\alpha_0"), (a1, r"\alpha_1")):
        if coeff == 0:
            continue
        if coeff == 1:
            term = symbol
        elif coeff == -1:
            term = f"-{symbol}"
        else:
            term = f"{coeff}{symbol}"
        if pieces and not term.startswith("-"):
            pieces.append("+")
        pieces.append(term)
    return "".join(pieces) if pieces else "0"


def laurent_latex(p: LaurentPoly) -> str:
    if not p:
        return "0"
    parts = []
    for w, c in sorted(p.items()):
        base = None if (w.a0, w.a1) == (0, 0) else f"e^{{{_weight_latex(w.a0, w.a1)}}}"
        mag = abs(c)
        if base is None:
            text = str(mag)
        elif mag == 1:
            text = base
        else:
            text = f"{mag}{base}"
        parts.append((c < 0, text))
    return _join_signed(parts)


def _fraction_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return f"{sign}\\tfrac{{{abs(c.numerator)}}}{{{c.denominator}}}"


def graded_latex(g: GradedPoly) -> str:
    if not g:
        return "0"
    parts = []
    for (i, j), c in sorted(g.items()):
        factors = []
        if i:
            factors.append(r"\alpha_0" if i == 1 else rf"\alpha_0^{{{i}}}")
        if j:
            factors.append(r"\alpha_1" if j == 1 else rf"\alpha_1^{{{j}}}")
        base = "".join(factors) if factors else None
        mag = abs(c)
        if base is None:
            text = _fraction_latex(mag)
        elif mag == 1:
            text = base
        else:
            text = f"{_fraction_latex(mag)}{base}"
        parts.append((c < 0, text))
    return _join_signed(parts)


def value_pretty(value) -> str:
    if isinstance(value, LaurentPoly):
        return laurent_pretty(value)
    if isinstance(value, GradedPoly):
        return graded_pretty(value)
    return str(value)


def value_latex(value) -> str:
    if isinstance(value, LaurentPoly):
        return laurent_latex(value)
    if isinstance(value, GradedPoly):
        return graded_latex(value)
    return str(value)


def value_text(value) -> str:
    """Canonical machine text for any table value."""
    if isinstance(value, (LaurentPoly, GradedPoly)):
        return value.to_text()
    return str(value)
