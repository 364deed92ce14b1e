"""Persistent memo cache: a validated JSON file of table entries.

Schema (version 1): a JSON object with exactly the keys ``version`` and
``entries``; each entry has exactly the fields ``theory``, ``n``, ``m``,
``k``, ``value`` (canonical text form) and ``provenance``.  Unknown fields
are rejected.  Entries are stored sorted by (theory, n, m, k) with a fixed
JSON layout, so write-read-write round trips are byte-identical.

Loading re-validates every record before it is merged: the value must parse,
support rules must hold, and the value must reproduce its known closed form
(evaluation at 1 for K-theory entries; homogeneity, integrality and degree
for cohomology).  These checks are necessary conditions, designed to catch
file corruption, not a cryptographic integrity guarantee.  A zero-length
file loads as an empty cache.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .cohomology import CohomologyTable, T_COH
from .errors import CorruptCache
from .graded import GradedPoly
from .ktheory import (
    KTheoryTable,
    T_K_EQ,
    T_K_ORD,
    T_XI_EQ,
    T_XI_ORD,
    b_ordinary_closed,
    d_ordinary_closed,
)
from .laurent import LaurentPoly

CACHE_VERSION = 1
CACHE_ENV_VAR = "SCHUBERT_SL2_CACHE"

THEORIES = (T_K_EQ, T_K_ORD, T_XI_EQ, T_XI_ORD, T_COH)
PROVENANCE_TAGS = {"recursion", "closed-form", "chevalley", "localization", "conversion"}
_RECORD_FIELDS = {"theory", "n", "m", "k", "value", "provenance"}


def default_cache_path() -> str | None:
    return os.environ.get(CACHE_ENV_VAR)


def _expected_ordinary_d(n: int, m: int, k: int) -> int:
    if n > m:
        n, m = m, n
    if n == 0:
        return 1 if k == m else 0
    if k < n + m:
        return 0
    return d_ordinary_closed(n, m, k - n - m)


def _expected_ordinary_b(n: int, m: int, k: int) -> int:
    if k < n + m:
        return 0
    return b_ordinary_closed(n, m, k - n - m)


def _validate(theory: str, n: int, m: int, k: int, text: str):
    """Parse and re-validate one record's value; returns the parsed value."""
    if theory in (T_K_EQ, T_XI_EQ):
        value = LaurentPoly.from_text(text)
        if theory == T_K_EQ:
            if k < max(n, m) and value:
                raise ValueError("support rule violated (k below max index)")
            if min(n, m) == 0:
                expected = LaurentPoly.one() if k == max(n, m) else LaurentPoly.zero()
                if value != expected:
                    raise ValueError("identity column mismatch")
            elif value.eval_one() != _expected_ordinary_d(n, m, k):
                raise ValueError("evaluation at 1 contradicts the closed form")
        else:
            if k < max(n, m) and value:
                raise ValueError("support rule violated (k below max index)")
            if value.eval_one() != _expected_ordinary_b(n, m, k):
                raise ValueError("evaluation at 1 contradicts the closed form")
        return value
    if theory in (T_K_ORD, T_XI_ORD):
        value = int(text)
        if str(value) != text:
            raise ValueError("non-canonical integer text")
        expected = (
            _expected_ordinary_d(n, m, k)
            if theory == T_K_ORD
            else _expected_ordinary_b(n, m, k)
        )
        if value != expected:
            raise ValueError("value contradicts the closed form")
        return value
    if theory == T_COH:
        value = GradedPoly.from_text(text)
        if (k < max(n, m) or k > n + m) and value:
            raise ValueError("support rule violated")
        if not value.is_homogeneous_of_degree(n + m - k):
            raise ValueError(f"not homogeneous of degree {n + m - k}")
        if not value.is_integral():
            raise ValueError("non-integer coefficient")
        return value
    raise ValueError(f"unknown theory {theory!r}")


def store_cache(path: str | Path, ktable: KTheoryTable, ctable: CohomologyTable) -> int:
    """Write all memoized entries, sorted; returns the entry count."""
    records = []
    for theory, n, m, k, value, tag in ktable.entries() + ctable.entries():
        text = value.to_text() if not isinstance(value, int) else str(value)
        records.append(
            {
                "theory": theory,
                "n": n,
                "m": m,
                "k": k,
                "value": text,
                "provenance": tag,
            }
        )
    records.sort(key=lambda r: (r["theory"], r["n"], r["m"], r["k"]))
    payload = {"version": CACHE_VERSION, "entries": records}
    Path(path).write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return len(records)


def load_cache(path: str | Path, ktable: KTheoryTable, ctable: CohomologyTable) -> int:
    """Merge a cache file into the tables after re-validation.

    Returns the number of merged entries; raises :class:`CorruptCache` with
    the offending record named on any validation failure.
    """
    raw = Path(path).read_text(encoding="utf-8")
    if not raw.strip():
        return 0
    try:
        payload = json.loads(raw)
    except json.JSONDecodeError as e:
        raise CorruptCache(f"{path}: not valid JSON ({e})") from e
    if not isinstance(payload, dict) or set(payload) != {"version", "entries"}:
        raise CorruptCache(f"{path}: top level must have exactly version and entries")
    if payload["version"] != CACHE_VERSION:
        raise CorruptCache(f"{path}: unsupported version {payload['version']!r}")
    entries = payload["entries"]
    if not isinstance(entries, list):
        raise CorruptCache(f"{path}: entries must be a list")
    count = 0
    for idx, record in enumerate(entries):
        label = f"{path}: record {idx}"
        if not isinstance(record, dict) or set(record) != _RECORD_FIELDS:
            raise CorruptCache(f"{label}: fields must be exactly {sorted(_RECORD_FIELDS)}")
        theory, n, m, k = record["theory"], record["n"], record["m"], record["k"]
        label = f"{path}: record {idx} ({theory!r}, n={n}, m={m}, k={k})"
        if theory not in THEORIES:
            raise CorruptCache(f"{label}: unknown theory")
        if not all(isinstance(v, int) and v >= 0 for v in (n, m, k)):
            raise CorruptCache(f"{label}: indices must be nonnegative integers")
        if record["provenance"] not in PROVENANCE_TAGS:
            raise CorruptCache(f"{label}: unknown provenance {record['provenance']!r}")
        if not isinstance(record["value"], str):
            raise CorruptCache(f"{label}: value must be a string")
        try:
            value = _validate(theory, n, m, k, record["value"])
        except (ValueError, ArithmeticError) as e:
            raise CorruptCache(f"{label}: {e}") from e
        if theory == T_COH:
            ctable.seed(n, m, k, value, record["provenance"])
        else:
            ktable.seed(theory, n, m, k, value, record["provenance"])
        count += 1
    return count
