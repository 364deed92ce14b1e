"""Cross-check orchestration behind the `verify` command.

Every invariant promised by the library runs here as a named check at its
full range; `quick` halves every bound.  Randomized checks draw from a
fixed-seed generator so reports are byte-identical across runs.  Each check
returns a list of failure descriptions; the runner prints one PASS/FAIL
line per check and exits nonzero if anything failed.
"""

from __future__ import annotations

import random
import sys
import tempfile
from math import comb
from pathlib import Path

from .cohomology import (
    CohomologyTable,
    Q1_closed,
    Q_bruteforce,
    c_bottom,
    c_top_minus_1,
    c_top_minus_2,
    euler_class_identities,
    q_poly,
    sumq_closed,
)
from .graded import GradedPoly
from .ktheory import (
    KTheoryTable,
    b_ordinary_closed,
    d_ordinary_divisor,
    dddd_identity_check,
    dddd_rhs,
)
from .laurent import LaurentPoly, Weight, exact_div, exp, lowest_graded_part
from .localization import d_base, d_base_bruteforce
from .lspaths import d_divisor, enumerate_paths
from .cache import load_cache, store_cache
from .weyl import (
    demazure_product,
    orbit_weight_offset,
    orbit_weight_step,
    q_weight,
    reduced_word,
)

_SEED = 20250809

FULL_BOUNDS = {
    "ring-trials": 200,
    "div-trials": 100,
    "graded-trials": 100,
    "word-len": 50,
    "fold-trials": 200,
    "q-range": 50,
    "path-index": 16,
    "divisor-index": 16,
    "loc-index": 12,
    "bottom-link": 6,
    "kt-nm": 5,
    "kt-k": 10,
    "assoc-abc": 3,
    "assoc-k": 9,
    "sym-nm": 4,
    "sym-k": 8,
    "consistency-index": 10,
    "xi-nm": 4,
    "xi-k": 9,
    "dddd-range": 4,
    "coh-nm": 8,
    "q-d": 4,
    "q-j": 6,
    "q1-range": 12,
    "sumq-range": 24,
    "euler-range": 6,
}


def bounds_for(level: str) -> dict[str, int]:
    if level == "full":
        return dict(FULL_BOUNDS)
    if level == "quick":
        return {k: max(1, (v + 1) // 2) for k, v in FULL_BOUNDS.items()}
    raise ValueError(f"unknown verify level {level!r}")


def _random_laurent(rng: random.Random, max_terms: int, span: int = 4) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        w = Weight(rng.randint(-span, span), rng.randint(-span, span))
        terms[w] = rng.choice([c for c in range(-9, 10) if c])
    return LaurentPoly(terms)


def _random_graded(rng: random.Random, degree: int, max_terms: int) -> GradedPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        i = rng.randint(0, degree)
        terms[(i, degree - i)] = rng.choice([c for c in range(-9, 10) if c])
    return GradedPoly(terms)


def check_laurent_ring_identities(b, kt, ct, rng):
    failures = []
    for trial in range(b["ring-trials"]):
        p = _random_laurent(rng, 6)
        q = _random_laurent(rng, 6)
        r = _random_laurent(rng, 4)
        if (p + q) * r != p * r + q * r:
            failures.append(f"distributivity (trial {trial})")
        if p * q != q * p:
            failures.append(f"commutativity (trial {trial})")
        if (p * q) * r != p * (q * r):
            failures.append(f"associativity (trial {trial})")
        if p + (-p) != LaurentPoly.zero():
            failures.append(f"additive inverse (trial {trial})")
        if (p * q).eval_one() != p.eval_one() * q.eval_one():
            failures.append(f"evaluation homomorphism (trial {trial})")
        if LaurentPoly.from_text(p.to_text()) != p:
            failures.append(f"serialize/parse round trip (trial {trial})")
    return failures


def check_laurent_division_roundtrip(b, kt, ct, rng):
    failures = []
    for trial in range(b["div-trials"]):
        p = _random_laurent(rng, 20)
        q = LaurentPoly.zero()
        while not q:
            q = _random_laurent(rng, rng.choice([1, 2, 20]))
        if exact_div(p * q, q) != p:
            failures.append(f"(p*q)/q != p (trial {trial})")
    return failures


def check_graded_ops(b, kt, ct, rng):
    failures = []
    for trial in range(b["graded-trials"]):
        d1, d2 = rng.randint(0, 4), rng.randint(0, 4)
        g1 = _random_graded(rng, d1, 5)
        g2 = _random_graded(rng, d1, 5)
        g3 = _random_graded(rng, d2, 5)
        if not (g1 + g2).is_homogeneous_of_degree(d1):
            failures.append(f"addition breaks homogeneity (trial {trial})")
        if not (g1 * g3).is_homogeneous_of_degree(d1 + d2):
            failures.append(f"degrees not additive under product (trial {trial})")
        if GradedPoly.from_text(g1.to_text()) != g1:
            failures.append(f"serialize/parse round trip (trial {trial})")
        total = g1 + g3
        recombined = sum(
            (total.degree_component(d) for d in range(d1 + d2 + 1)),
            GradedPoly.zero(),
        )
        if recombined != total:
            failures.append(f"degree components do not recombine (trial {trial})")
    return failures


def check_demazure_reduced(b, kt, ct, rng):
    return [
        f"fold changes reduced word (n={n})"
        for n in range(b["word-len"] + 1)
        if demazure_product(reduced_word(n)) != reduced_word(n)
    ]


def check_demazure_fold_consistency(b, kt, ct, rng):
    failures = []
    for trial in range(b["fold-trials"]):
        u = [rng.randint(0, 1) for _ in range(rng.randint(0, 12))]
        v = [rng.randint(0, 1) for _ in range(rng.randint(0, 12))]
        if demazure_product(u + v) != demazure_product(list(demazure_product(u)) + v):
            failures.append(f"fold not prefix-stable (trial {trial})")
    return failures


def check_q_weights(b, kt, ct, rng):
    failures = []
    top = b["q-range"]
    values = [q_weight(m) for m in range(top + 1)]
    for m in range(top - 1):
        step = values[m + 2] - values[m]
        if step.a0 <= 0 or step.a1 <= 0:
            failures.append(f"q not monotone over m -> m+2 at m={m}")
    if len(set(values)) != len(values):
        failures.append("q weights are not pairwise distinct")
    return failures


def check_orbit_offsets(b, kt, ct, rng):
    failures = []
    for i in range(1, b["q-range"] + 1):
        if orbit_weight_offset(i - 1) - orbit_weight_offset(i) != orbit_weight_step(i):
            failures.append(f"offset/step mismatch at i={i}")
    for m in range(b["q-range"] + 1):
        if -1 * orbit_weight_offset(m) != q_weight(m):
            failures.append(f"-offset(m) != q(m) at m={m}")
    return failures


def check_path_counts(b, kt, ct, rng):
    failures = []
    top = b["path-index"]
    for m in range(1, top + 1):
        for k in range(m, top + 1):
            n_paths = len(enumerate_paths(k, m))
            expected = 1 if k == m else comb(k - 1, m - 1)
            if n_paths != expected:
                failures.append(f"|paths({k},{m})| = {n_paths} != {expected}")
            prev = len(enumerate_paths(k - 1, m)) if k - 1 >= m else 0
            dcard = comb(k - 1, m - 1) + comb(k - 2, m - 1) if k > m else 1
            if n_paths + prev != dcard:
                failures.append(f"divisor-set cardinality at (k={k}, m={m})")
    for ell in range(1, top + 1):
        if enumerate_paths(ell, 0):
            failures.append(f"paths({ell},0) should be empty")
    return failures


def check_divisor_eval(b, kt, ct, rng):
    failures = []
    top = b["divisor-index"]
    for m in range(1, top + 1):
        if d_divisor(m, m) != LaurentPoly.one() - exp(q_weight(m)):
            failures.append(f"diagonal not 1 - e^q (m={m})")
        for k in range(m + 1, top + 1):
            if d_divisor(k, m).eval_one() != d_ordinary_divisor(k, m):
                failures.append(f"divisor evaluation at 1 (k={k}, m={m})")
        for k in range(0, m):
            if d_divisor(k, m):
                failures.append(f"nonzero below the diagonal (k={k}, m={m})")
    return failures


def check_divisor_vs_localization(b, kt, ct, rng):
    failures = []
    for m in range(1, b["loc-index"] + 1):
        expected = LaurentPoly.one() - exp(q_weight(m))
        if d_base(1, m) != expected or d_divisor(m, m) != expected:
            failures.append(f"(m={m})")
    return failures


def check_dp_vs_bruteforce(b, kt, ct, rng):
    failures = []
    for m in range(b["loc-index"] + 1):
        for n in range(m + 1):
            if d_base(n, m) != d_base_bruteforce(n, m):
                failures.append(f"(n={n}, m={m})")
    return failures


def check_localization_eval_zero(b, kt, ct, rng):
    failures = []
    for m in range(1, b["loc-index"] + 1):
        for n in range(1, m + 1):
            if d_base(n, m).eval_one() != 0:
                failures.append(f"(n={n}, m={m})")
    return failures


def check_lowest_vs_bottom(b, kt, ct, rng):
    failures = []
    for m in range(1, b["bottom-link"] + 1):
        for n in range(1, m + 1):
            sign = 1 if n % 2 == 0 else -1
            if sign * lowest_graded_part(d_base(n, m)) != c_bottom(n, m):
                failures.append(f"(n={n}, m={m})")
    return failures


def check_ktheory_eval(b, kt, ct, rng):
    failures = []
    for n in range(1, b["kt-nm"] + 1):
        for m in range(n, b["kt-nm"] + 1):
            for k in range(m, b["kt-k"] + 1):
                if kt.d(n, m, k).eval_one() != kt.d_ordinary(n, m, k):
                    failures.append(f"(n={n}, m={m}, k={k})")
    return failures


def check_ktheory_associativity(b, kt, ct, rng):
    failures = []
    top = b["assoc-abc"]
    for a in range(top + 1):
        for bb in range(top + 1):
            for cc in range(top + 1):
                for k in range(b["assoc-k"] + 1):
                    lhs = LaurentPoly.zero()
                    rhs = LaurentPoly.zero()
                    for i in range(k + 1):
                        lhs = lhs + kt.d(a, bb, i) * kt.d(i, cc, k)
                        rhs = rhs + kt.d(bb, cc, i) * kt.d(a, i, k)
                    if lhs != rhs:
                        failures.append(f"(a={a}, b={bb}, c={cc}, k={k})")
    return failures


def check_ktheory_symmetry(b, kt, ct, rng):
    failures = []
    for n in range(1, b["sym-nm"] + 1):
        for m in range(1, b["sym-nm"] + 1):
            if n == m:
                continue
            for k in range(max(n, m) + 1, b["sym-k"] + 1):
                if kt.induction_value(n, m, k) != kt.induction_value(m, n, k):
                    failures.append(f"(n={n}, m={m}, k={k})")
    return failures


def check_divisor_consistency(b, kt, ct, rng):
    failures = []
    top = b["consistency-index"]
    for m in range(top + 1):
        for k in range(top + 1):
            if kt.d(1, m, k) != d_divisor(k, m):
                failures.append(f"delegation (m={m}, k={k})")
    for m in range(1, top + 1):
        for k in range(max(1, m) + 1, top + 1):
            if kt.induction_value(1, m, k) != d_divisor(k, m):
                failures.append(f"recursion vs path model (m={m}, k={k})")
    return failures


def check_base_consistency(b, kt, ct, rng):
    failures = []
    top = b["consistency-index"]
    for m in range(top + 1):
        for n in range(m + 1):
            if kt.d(n, m, m) != d_base(n, m):
                failures.append(f"delegation (n={n}, m={m})")
            if 1 <= n < m and kt.induction_value(n, m, m) != d_base(n, m):
                failures.append(f"recursion vs localization (n={n}, m={m})")
    return failures


def check_xi_partial_sums(b, kt, ct, rng):
    failures = []
    for n in range(b["assoc-abc"] + 1):
        for m in range(n, b["assoc-abc"] + 1):
            for k in range(b["sym-k"] + 1):
                if kt.b(n, m, k) - kt.b(n, m, k - 1) != kt.xi_delta(n, m, k):
                    failures.append(f"(n={n}, m={m}, k={k})")
    return failures


def check_xi_ordinary(b, kt, ct, rng):
    failures = []
    for n in range(b["xi-nm"] + 1):
        for m in range(n, b["xi-nm"] + 1):
            for k in range(b["xi-k"] + 1):
                expected = b_ordinary_closed(n, m, k - n - m) if k >= n + m else 0
                if kt.b(n, m, k).eval_one() != expected:
                    failures.append(f"(n={n}, m={m}, k={k})")
    return failures


def check_dddd(b, kt, ct, rng):
    failures = []
    top = b["dddd-range"]
    for n in range(1, top + 1):
        for m in range(1, top + 1):
            for j in range(top + 1):
                if not dddd_identity_check(n, m, j):
                    failures.append(f"four-term identity (n={n}, m={m}, j={j})")
            for koff in range(top + 1):
                partial = sum(dddd_rhs(n, m, j) for j in range(koff + 1))
                if partial != b_ordinary_closed(n, m, koff):
                    failures.append(f"partial sums vs xi closed form (n={n}, m={m})")
    return failures


def check_cohomology_invariants(b, kt, ct, rng):
    failures = []
    top = b["coh-nm"]
    for n in range(top + 1):
        for m in range(n, top + 1):
            for k in range(0, n + m + 2):
                value = ct.c(n, m, k)
                if k < m or k > n + m:
                    if value:
                        failures.append(f"support (n={n}, m={m}, k={k})")
                    continue
                if not value.is_homogeneous_of_degree(n + m - k):
                    failures.append(f"homogeneity (n={n}, m={m}, k={k})")
                if not value.is_integral():
                    failures.append(f"integrality (n={n}, m={m}, k={k})")
                if ct.c(m, n, k) != value:
                    failures.append(f"symmetry (n={n}, m={m}, k={k})")
    return failures


def check_cohomology_closed_forms(b, kt, ct, rng):
    failures = []
    top = b["coh-nm"]
    for n in range(1, top + 1):
        for m in range(1, top + 1):
            if ct.c(n, m, n + m) != comb(n + m, n):
                failures.append(f"top class (n={n}, m={m})")
            if ct.c(n, m, n + m - 1) != c_top_minus_1(n, m):
                failures.append(f"target n+m-1 (n={n}, m={m})")
            if n >= 2 and m >= 2 and n + m - 2 >= max(n, m):
                if ct.c(n, m, n + m - 2) != c_top_minus_2(n, m):
                    failures.append(f"target n+m-2 (n={n}, m={m})")
            if n <= m and ct.c(n, m, m) != c_bottom(n, m):
                failures.append(f"bottom class (n={n}, m={m})")
    return failures


def check_q_consistency(b, kt, ct, rng):
    failures = []
    for d in range(b["q-d"] + 1):
        for i in range(1, 5):
            for j in range(-1, b["q-j"] + 1):
                if ct.Q(d, i, j) != Q_bruteforce(d, i, j):
                    failures.append(f"recurrence vs multisets (d={d}, i={i}, j={j})")
    for i in range(1, b["q1-range"] + 1):
        for j in range(0, b["q1-range"] - i + 1):
            if ct.Q(1, i, j) != Q1_closed(i, j):
                failures.append(f"degree-1 closed form (i={i}, j={j})")
    for k in range(b["sumq-range"] + 1):
        direct = sum((q_poly(j) for j in range(1, k + 1)), GradedPoly.zero())
        if sumq_closed(k) != direct:
            failures.append(f"summed q closed form (k={k})")
    return failures


def check_cohomology_associativity(b, kt, ct, rng):
    failures = []
    top = b["assoc-abc"]
    for a in range(top + 1):
        for bb in range(top + 1):
            for cc in range(top + 1):
                for k in range(a + bb + cc + 2):
                    lhs = GradedPoly.zero()
                    rhs = GradedPoly.zero()
                    for i in range(a + bb + 1):
                        lhs = lhs + ct.c(a, bb, i) * ct.c(i, cc, k)
                    for j in range(bb + cc + 1):
                        rhs = rhs + ct.c(bb, cc, j) * ct.c(a, j, k)
                    if lhs != rhs:
                        failures.append(f"(a={a}, b={bb}, c={cc}, k={k})")
    return failures


def check_cross_theory_top(b, kt, ct, rng):
    failures = []
    top = b["euler-range"]
    for n in range(1, top + 1):
        for m in range(n, top + 1):
            expected = comb(n + m, n)
            if ct.c(n, m, n + m) != expected:
                failures.append(f"cohomology top (n={n}, m={m})")
            if kt.d(n, m, n + m).eval_one() != expected:
                failures.append(f"K-theory top (n={n}, m={m})")
    return failures


def check_euler_identities(b, kt, ct, rng):
    top = b["euler-range"]
    if not euler_class_identities(ct, top, top):
        return ["power expansions disagree"]
    return []


def check_cache_roundtrip(b, kt, ct, rng):
    failures = []
    small_k, small_c = KTheoryTable(), CohomologyTable()
    small_k.d(2, 2, 3)
    small_k.b(1, 1, 3)
    small_k.d_ordinary(1, 2, 4)
    small_c.c(2, 3, 4)
    with tempfile.TemporaryDirectory() as tmp:
        first = Path(tmp) / "a.json"
        second = Path(tmp) / "b.json"
        store_cache(first, small_k, small_c)
        kt2, ct2 = KTheoryTable(), CohomologyTable()
        load_cache(first, kt2, ct2)
        store_cache(second, kt2, ct2)
        if first.read_bytes() != second.read_bytes():
            failures.append("write-read-write not byte-identical")
    return failures


CHECKS = [
    ("laurent-ring-identities", check_laurent_ring_identities),
    ("laurent-exact-division-roundtrip", check_laurent_division_roundtrip),
    ("graded-ops", check_graded_ops),
    ("weyl-demazure-reduced", check_demazure_reduced),
    ("weyl-demazure-fold-consistency", check_demazure_fold_consistency),
    ("weyl-q-weights", check_q_weights),
    ("weyl-orbit-offsets", check_orbit_offsets),
    ("lspath-counts", check_path_counts),
    ("divisor-eval-closed-form", check_divisor_eval),
    ("divisor-vs-localization", check_divisor_vs_localization),
    ("localization-dp-vs-bruteforce", check_dp_vs_bruteforce),
    ("localization-eval-zero", check_localization_eval_zero),
    ("localization-lowest-vs-cohomology-bottom", check_lowest_vs_bottom),
    ("ktheory-eval-vs-closed-form", check_ktheory_eval),
    ("ktheory-associativity", check_ktheory_associativity),
    ("ktheory-symmetry", check_ktheory_symmetry),
    ("ktheory-divisor-consistency", check_divisor_consistency),
    ("ktheory-base-consistency", check_base_consistency),
    ("xi-partial-sums", check_xi_partial_sums),
    ("xi-ordinary-closed-form", check_xi_ordinary),
    ("ordinary-dddd-identity", check_dddd),
    ("cohomology-invariants", check_cohomology_invariants),
    ("cohomology-closed-forms", check_cohomology_closed_forms),
    ("cohomology-q-consistency", check_q_consistency),
    ("cohomology-associativity", check_cohomology_associativity),
    ("cross-theory-top-class", check_cross_theory_top),
    ("euler-class-identities", check_euler_identities),
    ("cache-roundtrip", check_cache_roundtrip),
]


def run_verify(
    level: str = "quick",
    ktable: KTheoryTable | None = None,
    ctable: CohomologyTable | None = None,
    stream=None,
) -> int:
    """Run every check; print one PASS/FAIL line each; 0 iff all pass."""
    stream = stream if stream is not None else sys.stdout
    bounds = bounds_for(level)
    kt = ktable if ktable is not None else KTheoryTable()
    ct = ctable if ctable is not None else CohomologyTable()
    rng = random.Random(_SEED)
    n_failed = 0
    for name, fn in CHECKS:
        try:
            failures = fn(bounds, kt, ct, rng)
        except Exception as e:  # a crashed check is a failed check
            failures = [f"raised {type(e).__name__}: {e}"]
        if failures:
            n_failed += 1
            extra = f"; +{len(failures) - 1} more" if len(failures) > 1 else ""
            print(f"FAIL: {name} {failures[0]}{extra}", file=stream)
        else:
            print(f"PASS: {name}", file=stream)
    if level == "full":
        counts = kt.entry_counts() | ctable_counts(ct)
        rendered = ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
        print(f"memo entries computed: {rendered}", file=stream)
    total = len(CHECKS)
    print(f"{total - n_failed}/{total} checks passed ({level})", file=stream)
    return 0 if n_failed == 0 else 1


def ctable_counts(ct: CohomologyTable) -> dict[str, int]:
    return {f"cohomology-{k}": v for k, v in ct.entry_counts().items()}
