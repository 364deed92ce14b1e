"""Equivariant cohomology structure constants and their closed forms.

The product of degree-1 classes obeys the Chevalley rule

    eps_1 * eps_m = q_m * eps_m + (m+1) * eps_{m+1},

with q_m the degree-1 form lifted from the root-lattice weight.  Powers of
eps_1 expand through the complete homogeneous sums Q^d_{i,j} (all degree-d
monomials in q_i, ..., q_{i+j}), and solving the triangular system gives
the recursion, for n <= m and k = m + i:

    c^{m+i}_{n,m} = 1/n! [ (m+i)!/m! Q^{n-i}_{m,i}
                           - sum_{k'=max(i,1)}^{n-1} k'! Q^{n-k'}_{1,k'-1} c^{m+i}_{k',m} ].

Q is always computed through its recurrence Q^d_{i,j} = Q^{d-1}_{i,j} q_{i+j}
+ Q^d_{i,j-1}; the closed Q^1 table and the summed-q formula are test targets
only.  Intermediates are rational; every final constant is asserted integral.

The closed forms for the top three targets and for the bottom target k = m
are implemented from their parity-case tables.  Two entries of the
k = n+m-2 table as commonly printed fail the recursion oracle and are used
here in the corrected form: the odd/odd alpha1^2 coefficient is
(nm^2 + n^2m - nm + 3)/4 (no -n^2 term; the printed variant breaks both
n<->m symmetry and integrality), and the two mixed-parity cases apply with
their labels exchanged.  Both corrections are pinned against the recursion
for all 2 <= n, m <= 8 in the test suite.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, factorial

from .errors import BadRange, NonInteger, OutOfRange
from .graded import GradedPoly
from .weyl import q_weight

T_COH = "cohomology"


def q_poly(m: int) -> GradedPoly:
    """The weight q_m as a degree-1 graded polynomial."""
    return GradedPoly.from_weight(q_weight(m))


def Q_bruteforce(d: int, i: int, j: int) -> GradedPoly:
    """Sum over all size-d multisets of {q_i, ..., q_{i+j}} (oracle path)."""
    if d < 0 or i < 1 or j < -1:
        raise OutOfRange(f"need d >= 0, i >= 1, j >= -1, got ({d}, {i}, {j})")
    total = GradedPoly.zero()
    for picks in combinations_with_replacement(range(i, i + j + 1), d):
        term = GradedPoly.const(1)
        for v in picks:
            term = term * q_poly(v)
        total = total + term
    return total


def sumq_closed(k: int) -> GradedPoly:
    """Closed form of q_1 + ... + q_k, split by the parity of k."""
    if k < 0:
        raise OutOfRange(f"need k >= 0, got {k}")
    if k % 2 == 0:
        c = Fraction(k * (k + 1) * (k + 2), 12)
        return GradedPoly({(1, 0): c, (0, 1): c})
    return GradedPoly(
        {
            (1, 0): Fraction((k + 1) * (3 + 2 * k + k * k), 12),
            (0, 1): Fraction((k - 1) * (k + 1) * (k + 3), 12),
        }
    )


def Q1_closed(i: int, j: int) -> GradedPoly:
    """Degree-1 complete sum q_i + ... + q_{i+j} from its parity-case table."""
    if i < 1 or j < 0:
        raise OutOfRange(f"need i >= 1, j >= 0, got ({i}, {j})")
    i_even, j_even = i % 2 == 0, j % 2 == 0
    if i_even and j_even:
        a0 = 3*i*i + 2*j + 6*i*j + 3*i*i*j + 3*j*j + 3*i*j*j + j**3
        a1 = a0 + 6 * i
    elif not i_even and not j_even:
        a0 = a1 = (1 + j) * (3*i + 3*i*i + 2*j + 3*i*j + j*j)
    elif i_even:
        a0 = (1 + j) * (3 + 3*i + 3*i*i + 2*j + 3*i*j + j*j)
        a1 = a0 - 6 * (1 + j)
    else:
        a0 = 3 + 6*i + 3*i*i + 5*j + 6*i*j + 3*i*i*j + 3*j*j + 3*i*j*j + j**3
        a1 = -3 + 3*i*i - j + 6*i*j + 3*i*i*j + 3*j*j + 3*i*j*j + j**3
    return GradedPoly({(1, 0): Fraction(a0, 12), (0, 1): Fraction(a1, 12)})


def c_top_minus_1(n: int, m: int) -> GradedPoly:
    """Closed form at target n+m-1, four parity cases."""
    if n < 1 or m < 1:
        raise OutOfRange(f"need n, m >= 1, got ({n}, {m})")
    n_even, m_even = n % 2 == 0, m % 2 == 0
    if n_even and m_even:
        pref = Fraction(factorial(n + m), 4 * factorial(n - 1) * factorial(m - 1))
        a0 = a1 = 1
    elif not n_even and not m_even:
        pref = Fraction(factorial(n + m), 4 * factorial(n) * factorial(m))
        a0, a1 = 1 + n * m, -1 + n * m
    elif n_even:
        pref = Fraction(factorial(n + m - 1), 4 * factorial(n - 1) * factorial(m))
        a0, a1 = -1 + n * m + m * m, 1 + n * m + m * m
    else:
        pref = Fraction(factorial(n + m - 1), 4 * factorial(n) * factorial(m - 1))
        a0, a1 = -1 + n * m + n * n, 1 + n * m + n * n
    return GradedPoly({(1, 0): pref * a0, (0, 1): pref * a1})


def c_top_minus_2(n: int, m: int) -> GradedPoly:
    """Closed form at target n+m-2; zero when that lies below max(n, m).

    Prefactor times (b0*alpha0^2 + b1*alpha0*alpha1 + b2*alpha1^2), with the
    corrected parity-case tables (see module docstring); symmetric in n, m.
    """
    if n < 1 or m < 1 or n + m < 2:
        raise BadRange(f"need n, m >= 1 with n+m >= 2, got ({n}, {m})")
    if n > m:
        n, m = m, n
    if n + m - 2 < m:
        return GradedPoly.zero()
    nm = n * m * m + n * n * m
    n_even, m_even = n % 2 == 0, m % 2 == 0
    if n_even and m_even:
        a = Fraction(
            factorial(n + m), 8 * factorial(n - 1) * factorial(m - 1) * (n + m - 1)
        )
        base = nm - n * n - m * m - 3 * n * m
        b0 = Fraction(base + 4, 4)
        b1 = Fraction(base + 2 * n + 2 * m - 2, 2)
        b2 = Fraction(base + 4 * n + 4 * m - 4, 4)
    elif not n_even and not m_even:
        a = Fraction(
            factorial(n + m) * (n - 1) * (m - 1),
            8 * factorial(n) * factorial(m) * (n + m - 1),
        )
        b0 = Fraction(nm - n * m - 1, 4)
        b1 = Fraction(nm - n * m - 1, 2)
        b2 = Fraction(nm - n * m + 3, 4)
    elif not n_even:  # n odd, m even
        a = Fraction(factorial(n + m - 1) * (n - 1), 8 * factorial(n) * factorial(m - 1))
        b0 = Fraction(nm - n * n - n * m + 2 * n + 3, 4)
        b1 = Fraction(nm - n * n - n * m - 1, 2)
        b2 = Fraction(nm - n * n - n * m - 2 * n - 1, 4)
    else:  # n even, m odd
        a = Fraction(factorial(n + m - 1) * (m - 1), 8 * factorial(n - 1) * factorial(m))
        b0 = Fraction(nm - m * m - n * m + 2 * m + 3, 4)
        b1 = Fraction(nm - m * m - n * m - 1, 2)
        b2 = Fraction(nm - m * m - n * m - 2 * m - 1, 4)
    return GradedPoly({(2, 0): a * b0, (1, 1): a * b1, (0, 2): a * b2})


def c_bottom(n: int, m: int) -> GradedPoly:
    """Closed form at the bottom target k = m, for n <= m.

    A binomial prefactor times a product of n linear forms; the four parity
    cases differ in the half-integer shifts and in which root leads.
    """
    if n < 1 or m < 1:
        raise OutOfRange(f"need n, m >= 1, got ({n}, {m})")
    if n > m:
        raise BadRange(f"need n <= m, got ({n}, {m})")
    n_even, m_even = n % 2 == 0, m % 2 == 0
    if n_even == m_even:
        pref = comb((m + n) // 2, n)
        h = (m - n) // 2
        shifts = (h, h + 1) if n_even else (h + 1, h)
    else:
        pref = comb((m + n - 1) // 2, n)
        h = (m - n + 1) // 2
        shifts = (h, h + 1) if not n_even else (h + 1, h)
    total = GradedPoly.const(pref)
    for i in range(n):
        total = total * GradedPoly(
            {(1, 0): Fraction(shifts[0] + i), (0, 1): Fraction(shifts[1] + i)}
        )
    return total


class CohomologyTable:
    """Memoized Q-sums and structure constants with provenance tags."""

    def __init__(self) -> None:
        self._lock = threading.RLock()
        self._Q: dict[tuple[int, int, int], GradedPoly] = {}
        self._c: dict[tuple[int, int, int], GradedPoly] = {}
        self._provenance: dict[tuple[int, int, int], str] = {}

    def Q(self, d: int, i: int, j: int) -> GradedPoly:
        """Complete homogeneous sum of degree d in q_i, ..., q_{i+j}.

        Conventions at the recurrence boundary: Q^0 = 1 for any j >= -1 and
        Q^d with an empty variable range (j = -1) is 0 for d >= 1.
        """
        if d < 0 or i < 1 or j < -1:
            raise OutOfRange(f"need d >= 0, i >= 1, j >= -1, got ({d}, {i}, {j})")
        if d == 0:
            return GradedPoly.const(1)
        if j == -1:
            return GradedPoly.zero()
        key = (d, i, j)
        with self._lock:
            hit = self._Q.get(key)
            if hit is not None:
                return hit
            value = self.Q(d - 1, i, j) * q_poly(i + j) + self.Q(d, i, j - 1)
            self._Q[key] = value
            return value

    def c(self, n: int, m: int, k: int) -> GradedPoly:
        """Structure constant c^k_{n,m}; zero outside max(n,m) <= k <= n+m."""
        if n < 0 or m < 0 or k < 0:
            raise OutOfRange(f"indices must be nonnegative, got ({n}, {m}, {k})")
        if n > m:
            n, m = m, n
        if k < m or k > n + m:
            return GradedPoly.zero()
        key = (n, m, k)
        with self._lock:
            hit = self._c.get(key)
            if hit is not None:
                return hit
            if n == 0:
                value, tag = GradedPoly.const(1), "closed-form"
            elif n == 1:
                value = q_poly(m) if k == m else GradedPoly.const(m + 1)
                tag = "chevalley"
            else:
                i = k - m
                acc = Fraction(factorial(m + i), factorial(m)) * self.Q(n - i, m, i)
                for kp in range(max(i, 1), n):
                    acc = acc - factorial(kp) * self.Q(n - kp, 1, kp - 1) * self.c(
                        kp, m, k
                    )
                value = Fraction(1, factorial(n)) * acc
                tag = "recursion"
                if not value.is_integral():
                    raise NonInteger(f"c({n},{m},{k}) = {value!r} is not integral")
            self._c[key] = value
            self._provenance[key] = tag
            return value

    def provenance(self, n: int, m: int, k: int) -> str | None:
        if n > m:
            n, m = m, n
        return self._provenance.get((n, m, k))

    def entry_counts(self) -> dict[str, int]:
        with self._lock:
            return {"c": len(self._c), "Q": len(self._Q)}

    def entries(self):
        """Snapshot of memoized constants as (theory, n, m, k, value, tag)."""
        with self._lock:
            return [
                (T_COH, n, m, k, value, self._provenance.get((n, m, k), "recursion"))
                for (n, m, k), value in self._c.items()
            ]

    def seed(self, n: int, m: int, k: int, value: GradedPoly, tag: str) -> None:
        """Install an externally validated entry (cache loading)."""
        if n > m:
            n, m = m, n
        with self._lock:
            self._c[(n, m, k)] = value
            self._provenance[(n, m, k)] = tag


def chevalley_multiply(coeffs: dict[int, GradedPoly]) -> dict[int, GradedPoly]:
    """Multiply a finite combination sum_k f_k eps_k by the degree-1 class."""
    out: dict[int, GradedPoly] = {}
    for k, f in coeffs.items():
        diag = q_poly(k) * f
        if diag:
            out[k] = out.get(k, GradedPoly.zero()) + diag
        up = (k + 1) * f
        out[k + 1] = out.get(k + 1, GradedPoly.zero()) + up
    return {k: v for k, v in out.items() if v}


def euler_class_identities(
    table: CohomologyTable | None = None, max_n: int = 6, max_m: int = 6
) -> bool:
    """Check both closed expansions of powers of the degree-1 class.

    Every power (eps_1)^n, alone and against eps_m, is expanded by repeated
    Chevalley steps and compared with the closed coefficients
    (m+i)!/m! Q^{n-i}_{m,i} resp. k! Q^{n-k}_{1,k-1}.
    """
    table = table if table is not None else CohomologyTable()
    for m in range(1, max_m + 1):
        coeffs = {m: GradedPoly.const(1)}
        for n in range(1, max_n + 1):
            coeffs = chevalley_multiply(coeffs)
            closed = {}
            for i in range(n + 1):
                value = Fraction(factorial(m + i), factorial(m)) * table.Q(n - i, m, i)
                if value:
                    closed[m + i] = value
            if coeffs != closed:
                return False
    coeffs = {0: GradedPoly.const(1)}
    for n in range(1, max_n + 1):
        coeffs = chevalley_multiply(coeffs)
        closed = {}
        for k in range(1, n + 1):
            value = factorial(k) * table.Q(n - k, 1, k - 1)
            if value:
                closed[k] = value
        if coeffs != closed:
            return False
    return True
