"""Base-case structure constants from localization at torus fixed points.

``d_base(n, m)`` is the restriction of the codimension-n Schubert class to
the fixed point indexed by w_m (n <= m): a signed sum over the subsequences
of the reduced word of w_m whose Demazure product equals w_n, each subset
contributing the product of (e^{inversion root} - 1) over its positions.

Two computation paths are kept deliberately: a dynamic program over word
positions whose state is the Demazure fold of the chosen subsequence, and a
literal 2^m subset enumeration as the oracle.  In the free product of two
involutions a folded word is determined by (length, last letter), which is
what makes the DP state finite.
"""

from __future__ import annotations

from itertools import combinations

from .errors import BadRange, TooLarge
from .laurent import LaurentPoly, exp
from .weyl import demazure_product, inversion_root, reduced_word

_BRUTEFORCE_LIMIT = 16


def _letter(m: int, l: int) -> int:
    # letter at 1-indexed position l of the reduced word of w_m
    return (m - l) % 2


def d_base(n: int, m: int) -> LaurentPoly:
    """DP over positions 1..m; accepts folds of length n ending in s0."""
    if n < 0 or m < 0 or n > m:
        raise BadRange(f"need 0 <= n <= m, got ({n}, {m})")
    # state: (collapsed length, last letter); last letter None only at length 0
    states: dict[tuple[int, int | None], LaurentPoly] = {(0, None): LaurentPoly.one()}
    for l in range(1, m + 1):
        c = _letter(m, l)
        factor = exp(inversion_root(m, l)) - LaurentPoly.one()
        new = dict(states)
        for (length, last), acc in states.items():
            taken = acc * factor
            key = (length, last) if last == c else (length + 1, c)
            if key in new:
                new[key] = new[key] + taken
            else:
                new[key] = taken
        states = new
    accept = (0, None) if n == 0 else (n, 0)
    value = states.get(accept, LaurentPoly.zero())
    return value if n % 2 == 0 else -value


def d_base_bruteforce(n: int, m: int) -> LaurentPoly:
    """Literal subset enumeration over all 2^m subsequences (oracle path)."""
    if n < 0 or m < 0 or n > m:
        raise BadRange(f"need 0 <= n <= m, got ({n}, {m})")
    if m > _BRUTEFORCE_LIMIT:
        raise TooLarge(f"brute force capped at m <= {_BRUTEFORCE_LIMIT}, got {m}")
    word = reduced_word(m)
    target = reduced_word(n)
    total = LaurentPoly.zero()
    for size in range(m + 1):
        for subset in combinations(range(1, m + 1), size):
            if demazure_product(word[j - 1] for j in subset) != target:
                continue
            term = LaurentPoly.one()
            for j in subset:
                term = term * (exp(inversion_root(m, j)) - LaurentPoly.one())
            total = total + term
    return total if n % 2 == 0 else -total
