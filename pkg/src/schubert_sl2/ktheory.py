"""Structure-constant tables for K-theory, equivariant and ordinary.

The equivariant constants d^k_{n,m} are produced by an inductive formula on
k - n: the diagonal column d^m_{n,m} comes from localization, the divisor
column d^k_{1,m} from the path model, and every other entry is

    d^k_{n,m} = [ sum_{i=max(n,m)}^{k-1} d^i_{n,m} d^k_{1,i}
                  - sum_{j=n+1}^{k} d^j_{1,n} d^k_{j,m} ]
                / (d^n_{1,n} - d^k_{1,k}),

where the denominator is e^{q_k} - e^{q_n}, nonzero because the q-weights
are pairwise distinct.  The division is exact; a failed division signals an
internal inconsistency and is never expected.

The ideal-sheaf constants b^k_{n,m} are partial sums of the four-term
combination d^k_{n,m} - d^k_{n+1,m} - d^k_{n,m+1} + d^k_{n+1,m+1}, built
incrementally in k.  Ordinary (non-equivariant) constants are exposed both
as evaluations at 1 of the equivariant entries and through closed forms;
per-entry provenance records which path filled a slot.

Memo tables are shared mutable state: every mutation happens under a
re-entrant lock, entries are immutable once stored, and results do not
depend on thread interleaving.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

from .errors import BadRange, NonInteger, OutOfRange
from .laurent import LaurentPoly, exact_div, exp
from .localization import d_base
from .lspaths import d_divisor
from .weyl import q_weight

T_K_EQ = "k-equivariant"
T_K_ORD = "k-ordinary"
T_XI_EQ = "xi-equivariant"
T_XI_ORD = "xi-ordinary"


def d_ordinary_closed(n: int, m: int, koff: int) -> int:
    """Ordinary constant at target n+m+koff, in closed form.

    (-1)^koff * (n+m+koff-1)! / ((n-1)! (m-1)! koff!) * (n+m+2*koff) /
    ((n+koff)(m+koff)); always an exact integer, asserted here.
    """
    if n < 1 or m < 1:
        raise BadRange(f"need n, m >= 1, got ({n}, {m})")
    if koff < 0:
        raise BadRange(f"need koff >= 0, got {koff}")
    value = Fraction(
        factorial(n + m + koff - 1) * (n + m + 2 * koff),
        factorial(n - 1) * factorial(m - 1) * factorial(koff) * (n + koff) * (m + koff),
    )
    if value.denominator != 1:
        raise NonInteger(f"closed form gave {value} at ({n}, {m}, {koff})")
    return int(value) if koff % 2 == 0 else -int(value)


def b_ordinary_closed(n: int, m: int, koff: int) -> int:
    """Ideal-sheaf basis ordinary constant: (-1)^koff (n+m+koff)!/(n!m!koff!)."""
    if n < 0 or m < 0 or koff < 0:
        raise OutOfRange(f"indices must be nonnegative, got ({n}, {m}, {koff})")
    value = factorial(n + m + koff) // (factorial(n) * factorial(m) * factorial(koff))
    return value if koff % 2 == 0 else -value


def d_ordinary_divisor(k: int, m: int) -> int:
    """Divisor column at 1: (-1)^(k+m+1) [binom(k-1,m-1) + binom(k-2,m-1)]."""
    if not k > m >= 1:
        raise BadRange(f"need k > m >= 1, got ({k}, {m})")
    value = comb(k - 1, m - 1) + comb(k - 2, m - 1)
    return value if (k + m + 1) % 2 == 0 else -value


def _d_ordinary_at(n: int, m: int, target: int) -> int:
    # ordinary d at an absolute target index, 0 below n+m
    if target < n + m:
        return 0
    return d_ordinary_closed(n, m, target - n - m)


def dddd_rhs(n: int, m: int, j: int) -> int:
    """(-1)^j (n+m+j-1)!/(n!m!j!) (n+m+2j), with j the offset above n+m."""
    value = Fraction(
        factorial(n + m + j - 1) * (n + m + 2 * j),
        factorial(n) * factorial(m) * factorial(j),
    )
    assert value.denominator == 1
    return int(value) if j % 2 == 0 else -int(value)


def dddd_identity_check(n: int, m: int, j: int) -> bool:
    """Four-term alternating combination at target n+m+j vs its closed form.

    The offset convention (superscript = n+m+j) is pinned by the partial
    sums reproducing b_ordinary_closed.
    """
    if n < 1 or m < 1:
        raise BadRange(f"need n, m >= 1, got ({n}, {m})")
    if j < 0:
        raise BadRange(f"need j >= 0, got {j}")
    target = n + m + j
    lhs = (
        _d_ordinary_at(n, m, target)
        - _d_ordinary_at(n + 1, m, target)
        - _d_ordinary_at(n, m + 1, target)
        + _d_ordinary_at(n + 1, m + 1, target)
    )
    return lhs == dddd_rhs(n, m, j)


class KTheoryTable:
    """Memoized structure-constant tables with per-entry provenance."""

    def __init__(self) -> None:
        self._lock = threading.RLock()
        self._d: dict[tuple[int, int, int], LaurentPoly] = {}
        self._b: dict[tuple[int, int, int], LaurentPoly] = {}
        self._d_ord: dict[tuple[int, int, int], int] = {}
        self._b_ord: dict[tuple[int, int, int], int] = {}
        self._provenance: dict[tuple[str, int, int, int], str] = {}
        self._in_progress: set[tuple[int, int, int]] = set()

    # -- equivariant O-basis -------------------------------------------------

    def d(self, n: int, m: int, k: int) -> LaurentPoly:
        """Equivariant constant d^k_{n,m}; any nonnegative triple accepted."""
        if n < 0 or m < 0 or k < 0:
            raise OutOfRange(f"indices must be nonnegative, got ({n}, {m}, {k})")
        if n > m:
            n, m = m, n
        key = (n, m, k)
        with self._lock:
            hit = self._d.get(key)
            if hit is not None:
                return hit
            if key in self._in_progress:
                raise RuntimeError(f"recursion cycle at {key}")
            self._in_progress.add(key)
            try:
                value, tag = self._compute_d(n, m, k)
            finally:
                self._in_progress.discard(key)
            self._d[key] = value
            self._provenance[(T_K_EQ, *key)] = tag
            return value

    def _compute_d(self, n: int, m: int, k: int) -> tuple[LaurentPoly, str]:
        # callers guarantee 0 <= n <= m
        if n == 0:
            one = LaurentPoly.one() if k == m else LaurentPoly.zero()
            return one, "closed-form"
        if k < m:
            return LaurentPoly.zero(), "closed-form"
        if n == 1:
            return d_divisor(k, m), "chevalley"
        if k == m:
            return d_base(n, m), "localization"
        return self.induction_value(n, m, k), "recursion"

    def induction_value(self, n: int, m: int, k: int) -> LaurentPoly:
        """Apply the inductive formula with first index n (requires k > n).

        Exposed separately so the two symmetric orders (n, m) and (m, n) can
        be exercised as genuinely different computation paths.
        """
        if k <= n:
            raise BadRange(f"induction needs k > n, got ({n}, {m}, {k})")
        total = LaurentPoly.zero()
        for i in range(max(n, m), k):
            total = total + self.d(n, m, i) * d_divisor(k, i)
        for j in range(n + 1, k + 1):
            total = total - d_divisor(j, n) * self.d(j, m, k)
        denominator = exp(q_weight(k)) - exp(q_weight(n))
        return exact_div(total, denominator)

    # -- equivariant xi-basis ------------------------------------------------

    def xi_delta(self, n: int, m: int, k: int) -> LaurentPoly:
        """The k-th increment of the xi-basis partial sums."""
        return (
            self.d(n, m, k)
            - self.d(n + 1, m, k)
            - self.d(n, m + 1, k)
            + self.d(n + 1, m + 1, k)
        )

    def b(self, n: int, m: int, k: int) -> LaurentPoly:
        """Xi-basis constant b^k_{n,m}: sum of xi_delta over targets <= k."""
        if n < 0 or m < 0:
            raise OutOfRange(f"indices must be nonnegative, got ({n}, {m})")
        if k < 0:
            return LaurentPoly.zero()
        if n > m:
            n, m = m, n
        key = (n, m, k)
        with self._lock:
            hit = self._b.get(key)
            if hit is not None:
                return hit
            value = self.b(n, m, k - 1) + self.xi_delta(n, m, k)
            self._b[key] = value
            self._provenance[(T_XI_EQ, *key)] = "conversion"
            return value

    # -- ordinary constants ----------------------------------------------------

    def d_ordinary(self, n: int, m: int, k: int, *, via_eval: bool = False) -> int:
        """Ordinary d at target k, by closed form or by evaluating at 1."""
        if n < 0 or m < 0 or k < 0:
            raise OutOfRange(f"indices must be nonnegative, got ({n}, {m}, {k})")
        if n > m:
            n, m = m, n
        key = (n, m, k)
        with self._lock:
            hit = self._d_ord.get(key)
            if hit is not None:
                return hit
            if via_eval:
                value, tag = self.d(n, m, k).eval_one(), "conversion"
            elif n == 0:
                value, tag = (1 if k == m else 0), "closed-form"
            elif k < n + m:
                value, tag = 0, "closed-form"
            else:
                value, tag = d_ordinary_closed(n, m, k - n - m), "closed-form"
            self._d_ord[key] = value
            self._provenance[(T_K_ORD, *key)] = tag
            return value

    def b_ordinary(self, n: int, m: int, k: int, *, via_eval: bool = False) -> int:
        """Ordinary xi-basis constant at target k."""
        if n < 0 or m < 0 or k < 0:
            raise OutOfRange(f"indices must be nonnegative, got ({n}, {m}, {k})")
        if n > m:
            n, m = m, n
        key = (n, m, k)
        with self._lock:
            hit = self._b_ord.get(key)
            if hit is not None:
                return hit
            if via_eval:
                value, tag = self.b(n, m, k).eval_one(), "conversion"
            elif k < n + m:
                value, tag = 0, "closed-form"
            else:
                value, tag = b_ordinary_closed(n, m, k - n - m), "closed-form"
            self._b_ord[key] = value
            self._provenance[(T_XI_ORD, *key)] = tag
            return value

    # -- bookkeeping -----------------------------------------------------------

    def provenance(self, theory: str, n: int, m: int, k: int) -> str | None:
        if n > m:
            n, m = m, n
        return self._provenance.get((theory, n, m, k))

    def entry_counts(self) -> dict[str, int]:
        with self._lock:
            return {
                T_K_EQ: len(self._d),
                T_XI_EQ: len(self._b),
                T_K_ORD: len(self._d_ord),
                T_XI_ORD: len(self._b_ord),
            }

    def entries(self):
        """Snapshot of all memoized entries as (theory, n, m, k, value, tag)."""
        with self._lock:
            tables = (
                (T_K_EQ, self._d),
                (T_XI_EQ, self._b),
                (T_K_ORD, self._d_ord),
                (T_XI_ORD, self._b_ord),
            )
            out = []
            for theory, table in tables:
                for (n, m, k), value in table.items():
                    tag = self._provenance.get((theory, n, m, k), "recursion")
                    out.append((theory, n, m, k, value, tag))
            return out

    def seed(self, theory: str, n: int, m: int, k: int, value, tag: str) -> None:
        """Install an externally validated entry (cache loading)."""
        if n > m:
            n, m = m, n
        table = {
            T_K_EQ: self._d,
            T_XI_EQ: self._b,
            T_K_ORD: self._d_ord,
            T_XI_ORD: self._b_ord,
        }[theory]
        with self._lock:
            table[(n, m, k)] = value
            self._provenance[(theory, n, m, k)] = tag
