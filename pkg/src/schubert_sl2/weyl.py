"""Combinatorics of the affine Weyl group of sl2.

The group is the free product of two order-2 reflections s0, s1, so a word
over the alphabet {0, 1} is reduced exactly when no two adjacent letters are
equal, and the Demazure product is computed by a left fold of the two rules
s*s = s and s*t = st (s != t).  The minimal coset representatives of the
Grassmannian quotient are the alternating words w_n ending in s0; w_0 is
the empty word.

Weight bookkeeping: ``q_weight(m)`` is the root-lattice drop Lambda0 -
w_m(Lambda0); ``inversion_root(m, l)`` is the l-th inversion root of the
reduced word of w_m.  Positions in reduced words are 1-indexed.
"""

from __future__ import annotations

from typing import Iterable

from .errors import OutOfRange
from .laurent import ALPHA0, ALPHA1, Weight

WeylWord = tuple[int, ...]


def reduced_word(n: int) -> WeylWord:
    """The alternating word of length n ending in s0 (empty for n = 0)."""
    if n < 0:
        raise OutOfRange(f"word length must be nonnegative, got {n}")
    return tuple((n - l) % 2 for l in range(1, n + 1))


def is_reduced(word: Iterable[int]) -> bool:
    word = tuple(word)
    return all(word[i] != word[i + 1] for i in range(len(word) - 1))


def demazure_product(letters: Iterable[int]) -> WeylWord:
    """Left fold of s*s = s, s*t = st; the result is always reduced."""
    out: list[int] = []
    for s in letters:
        if s not in (0, 1):
            raise OutOfRange(f"letters must be 0 or 1, got {s!r}")
        if not out or out[-1] != s:
            out.append(s)
    return tuple(out)


def inversion_root(m: int, l: int) -> Weight:
    """The l-th inversion root of the length-m alternating word ending in s0.

    Closed form: l*alpha0 + (l-1)*alpha1 for m odd, (l-1)*alpha0 + l*alpha1
    for m even.
    """
    if not 1 <= l <= m:
        raise OutOfRange(f"need 1 <= l <= m, got l={l}, m={m}")
    if m % 2 == 1:
        return Weight(l, l - 1)
    return Weight(l - 1, l)


def q_weight(m: int) -> Weight:
    """ceil(m/2)^2 * alpha0 + (floor(m/2)^2 + floor(m/2)) * alpha1."""
    if m < 0:
        raise OutOfRange(f"index must be nonnegative, got {m}")
    h, odd = divmod(m, 2)
    return Weight((h + odd) ** 2, h * h + h)


def orbit_weight_offset(i: int) -> Weight:
    """The root-lattice offset w_i(Lambda0) - Lambda0 (always -q_weight(i))."""
    if i < 0:
        raise OutOfRange(f"index must be nonnegative, got {i}")
    j, odd = divmod(i, 2)
    if odd:
        return Weight(-((j + 1) ** 2), -(j * j + j))
    return Weight(-(j * j), -(j * j + j))


def orbit_weight_step(i: int) -> Weight:
    """w_{i-1}(Lambda0) - w_i(Lambda0): i*alpha0 for i odd, i*alpha1 for i even."""
    if i < 1:
        raise OutOfRange(f"index must be positive, got {i}")
    return i * ALPHA0 if i % 2 == 1 else i * ALPHA1
