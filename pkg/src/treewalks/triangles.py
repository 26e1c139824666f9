"""Catalan's triangle and Borel's triangle, exact and cross-validated.

C(n, k) counts monotone lattice paths from (0,0) to (n,k) staying weakly
below the diagonal (OEIS A009766).  B(n, k) is its row-wise binomial
transform (OEIS A234950):

    B(n, k) = sum_{s=k}^{n} binom(s, k) * C(n, s)

The published explicit formula for B(n, k) carries a 1/n factor, which is
inconsistent with the triangle itself (it gives B(1, 0) = 4 instead of 2
and is undefined at n = 0).  The correct denominator is n + 1:

    B(n, k) = binom(2n+2, n-k) * binom(n+k, n) / (n + 1)

We implement the corrected form and assert exact divisibility; the
transform definition above is kept as an independent second route and
the two are required to agree everywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb


class TriangleIndexError(ValueError):
    """Raised when (n, k) falls outside the lower triangle 0 <= k <= n."""


def _check_index(n: int, k: int) -> None:
    if n < 0 or k < 0 or k > n:
        raise TriangleIndexError(f"(n={n}, k={k}) outside the triangle 0 <= k <= n")


def _exact_div(numerator: int, divisor: int) -> int:
    q, r = divmod(numerator, divisor)
    assert r == 0, f"non-exact division {numerator}/{divisor}: remainder {r}"
    return q


def catalan_number(n: int) -> int:
    """n-th Catalan number, binom(2n, n)/(n+1)."""
    if n < 0:
        raise TriangleIndexError(f"n must be >= 0, got {n}")
    return _exact_div(comb(2 * n, n), n + 1)


def catalan_entry(n: int, k: int) -> int:
    """C(n, k) = ((n - k + 1)/(n + 1)) * binom(n + k, n), exactly."""
    _check_index(n, k)
    return _exact_div((n - k + 1) * comb(n + k, n), n + 1)


def borel_entry_explicit(n: int, k: int) -> int:
    """B(n, k) by the corrected explicit formula (1/(n+1) denominator)."""
    _check_index(n, k)
    return _exact_div(comb(2 * n + 2, n - k) * comb(n + k, n), n + 1)


def borel_entry_transform(n: int, k: int) -> int:
    """B(n, k) by the binomial transform of Catalan's triangle row n."""
    _check_index(n, k)
    return sum(comb(s, k) * catalan_entry(n, s) for s in range(k, n + 1))


@dataclass(frozen=True)
class TriangleTable:
    """Immutable lower-triangular table of exact counts."""

    rows: tuple[tuple[int, ...], ...]
    kind: str  # "catalan" or "borel"

    def __post_init__(self) -> None:
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")
            if any(e < 1 for e in row):
                raise ValueError(f"row {n} has an entry < 1")

    def entry(self, n: int, k: int) -> int:
        _check_index(n, k)
        if n >= len(self.rows):
            raise TriangleIndexError(f"row {n} not built (table has {len(self.rows)} rows)")
        return self.rows[n][k]

    @property
    def size(self) -> int:
        return len(self.rows)

    def to_csv(self) -> str:
        """One line per row, comma-separated decimal entries."""
        return "\n".join(",".join(str(e) for e in row) for row in self.rows) + "\n"

    def to_json(self) -> str:
        """Array of arrays; entries as decimal strings (no precision loss)."""
        return json.dumps([[str(e) for e in row] for row in self.rows])


def catalan_table(N: int) -> TriangleTable:
    """Rows 0..N of Catalan's triangle via the additive ballot recurrence.

    The recurrence C(n, k) = C(n-1, k) + C(n, k-1) with C(n, 0) = 1 is
    standard but not part of the source identities, so the test suite
    validates it against ``catalan_entry`` rather than trusting it.
    """
    if N < 0:
        raise TriangleIndexError(f"N must be >= 0, got {N}")
    rows: list[tuple[int, ...]] = []
    for n in range(N + 1):
        row = [1]
        for k in range(1, n + 1):
            above = rows[n - 1][k] if k < n else 0
            row.append(above + row[k - 1])
        rows.append(tuple(row))
    return TriangleTable(rows=tuple(rows), kind="catalan")


def borel_table(N: int) -> TriangleTable:
    """Rows 0..N of Borel's triangle via the transform route."""
    if N < 0:
        raise TriangleIndexError(f"N must be >= 0, got {N}")
    cat = catalan_table(N)
    rows = tuple(
        tuple(
            sum(comb(s, k) * cat.entry(n, s) for s in range(k, n + 1))
            for k in range(n + 1)
        )
        for n in range(N + 1)
    )
    return TriangleTable(rows=rows, kind="borel")
