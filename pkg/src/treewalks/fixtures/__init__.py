"""Bundled golden tables, transcribed once and treated as read-only.

catalan_triangle.csv / borel_triangle.csv: rows 0..7 of each triangle,
one CSV line per row.

walk_polynomials.csv: one line per n = 1..6, "n,c_n,...,c_1" with the
walk-polynomial coefficients exponent-descending.

k_return_multipliers.csv: "n,k,m" lines; m is the shape count multiplying
delta^k (delta-1)^(n-k) in the per-return breakdown of W(2n).

Tests and the CLI can point at an alternate directory (used to exercise
the corrupted-fixture failure path).
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

FIXTURE_NAMES = (
    "catalan_triangle.csv",
    "borel_triangle.csv",
    "walk_polynomials.csv",
    "k_return_multipliers.csv",
)


def fixture_text(name: str, fixture_dir: str | Path | None = None) -> str:
    if fixture_dir is not None:
        return (Path(fixture_dir) / name).read_text()
    return (resources.files(__package__) / name).read_text()


def triangle_rows(kind: str, fixture_dir: str | Path | None = None) -> list[list[int]]:
    text = fixture_text(f"{kind}_triangle.csv", fixture_dir)
    return [[int(e) for e in line.split(",")] for line in text.splitlines() if line]


def polynomial_coefficients(fixture_dir: str | Path | None = None) -> dict[int, list[int]]:
    """n -> exponent-descending coefficient list, for n = 1..6."""
    text = fixture_text("walk_polynomials.csv", fixture_dir)
    out = {}
    for line in text.splitlines():
        if not line:
            continue
        n, *coeffs = (int(e) for e in line.split(","))
        out[n] = list(coeffs)
    return out


def k_return_multipliers(fixture_dir: str | Path | None = None) -> dict[tuple[int, int], int]:
    """(n, k) -> shape-count multiplier from the per-return tables."""
    text = fixture_text("k_return_multipliers.csv", fixture_dir)
    out = {}
    for line in text.splitlines():
        if not line:
            continue
        n, k, m = (int(e) for e in line.split(","))
        out[(n, k)] = m
    return out
