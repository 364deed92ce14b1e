"""Lakshmibai-Seshadri paths of shape Lambda0 and the divisor column.

A path from w_begin down to w_end is encoded by the integer chain
``1 <= i_begin <= i_{begin-1} <= ... <= i_{end+1} <= end`` (the rational
subdivision times their denominators); the empty chain is the unique path
with begin == end.  The tuple stores the chain as ``(i_begin, ...,
i_{end+1})``, i.e. position 0 belongs to index j = begin and the indices
decrease along the tuple.

``chi_weight`` collects the chain into the root lattice: entries at odd j
feed alpha0, entries at even j feed alpha1.  The Chevalley coefficient for
the divisor class and the divisor structure constants d^k_{1,m} are then
signed path sums with the global prefactor e^{q_m}; the ambient
fundamental-weight factor cancels against the line-bundle twist and is
never materialized, so everything stays inside the root lattice.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import NamedTuple

from .errors import BadRange
from .laurent import ALPHA0, ALPHA1, LaurentPoly, Weight, exp
from .weyl import q_weight


class LSPath(NamedTuple):
    begin: int
    end: int
    steps: tuple[int, ...]  # (i_begin, ..., i_{end+1}), weakly increasing

    def chi_weight(self) -> Weight:
        """Sum of i_j*alpha0 over odd j plus i_j*alpha1 over even j."""
        w = Weight(0, 0)
        for offset, i in enumerate(self.steps):
            j = self.begin - offset
            w = w + (i * ALPHA0 if j % 2 == 1 else i * ALPHA1)
        return w


def enumerate_paths(begin: int, end: int) -> list[LSPath]:
    """All paths from w_begin to w_end, chains in lexicographic order.

    Counts: 1 for begin == end, binom(begin-1, end-1) for begin > end >= 1,
    and 0 for begin > end == 0.
    """
    if begin < end or end < 0:
        raise BadRange(f"need begin >= end >= 0, got ({begin}, {end})")
    if begin == end:
        return [LSPath(begin, end, ())]
    return [
        LSPath(begin, end, chain)
        for chain in combinations_with_replacement(range(1, end + 1), begin - end)
    ]


def chevalley_coefficient(k: int, m: int) -> LaurentPoly:
    """Root-lattice part of the divisor Chevalley coefficient a^k_m.

    Equals (-1)^(k+m) * e^{q_m} * sum of e^{chi} over the paths from w_k to
    w_m together with the paths from w_{k-1} to w_m (the latter set is empty
    when k == m).
    """
    if k < m or m < 0:
        raise BadRange(f"need k >= m >= 0, got ({k}, {m})")
    total = LaurentPoly.zero()
    for p in enumerate_paths(k, m):
        total = total + exp(p.chi_weight())
    if k > m:
        for p in enumerate_paths(k - 1, m):
            total = total + exp(p.chi_weight())
    sign = 1 if (k + m) % 2 == 0 else -1
    return (sign * total).shift(q_weight(m))


def d_divisor(k: int, m: int) -> LaurentPoly:
    """Structure constant of the divisor product, column m, target k.

    Three cases: 1 - e^{q_m} on the diagonal k == m; for k > m the signed
    path sum (-1)^(k+m+1) e^{q_m} [paths(k,m) + paths(k-1,m)], where the
    k == m+1 bracket picks up +1 from the trivial path.  Returns 0 for
    k < m.  The m == 0 column degenerates to the indicator of k == 1.
    """
    if k < 0 or m < 0:
        raise BadRange(f"indices must be nonnegative, got ({k}, {m})")
    if k < m:
        return LaurentPoly.zero()
    if k == m:
        return LaurentPoly.one() - exp(q_weight(m))
    bracket = LaurentPoly.zero()
    for p in enumerate_paths(k, m):
        bracket = bracket + exp(p.chi_weight())
    if k == m + 1:
        bracket = bracket + LaurentPoly.one()
    else:
        for p in enumerate_paths(k - 1, m):
            bracket = bracket + exp(p.chi_weight())
    sign = 1 if (k + m + 1) % 2 == 0 else -1
    return (sign * bracket).shift(q_weight(m))
