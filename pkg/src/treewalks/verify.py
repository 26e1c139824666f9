"""Cross-method verification suite backing the `verify` CLI command.

Every check returns a CheckResult; a failed check carries the first
located mismatch so a corrupted fixture or a broken formula is reported
with coordinates, never as a bare boolean.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from pathlib import Path

from treewalks import fixtures as fx
from treewalks import rlseq
from treewalks.oracle import dp_return_profile, dp_walk_count, weighted_dyck_count
from treewalks.series import gf_walk_counts
from treewalks.triangles import (
    borel_entry_explicit,
    borel_entry_transform,
    borel_table,
    catalan_entry,
    catalan_number,
    catalan_table,
)
from treewalks.walks import (
    first_return_count,
    second_return_count,
    walks_polynomial,
    walks_via_borel,
    walks_via_catalan,
    walks_via_components,
    walks_with_k_returns,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def check_method_agreement(max_n: int, max_delta: int) -> CheckResult:
    """components = catalan = borel = DP oracle = gf (delta >= 2), exactly."""
    name = "five-method agreement"
    for delta in range(1, max_delta + 1):
        gf = gf_walk_counts(delta, max_n) if delta >= 2 else None
        for n in range(1, max_n + 1):
            values = {
                "components": walks_via_components(n, delta),
                "catalan": walks_via_catalan(n, delta),
                "borel": walks_via_borel(n, delta),
                "oracle": dp_walk_count(n, delta),
            }
            if gf is not None:
                values["gf"] = gf[n]
            if len(set(values.values())) != 1:
                return CheckResult(
                    name, False, f"disagreement at (n={n}, delta={delta}): {values}"
                )
    return CheckResult(name, True)


def check_s_table(max_n: int, enum_cap: int) -> CheckResult:
    """enumerated = recurrence = closed form for all S(n, k)."""
    name = "S-table triple equality"
    limit = min(max_n, enum_cap)
    enum = rlseq.s_table_enumerated(limit, cap=enum_cap)
    rec = rlseq.s_table_recurrence(limit)
    for n in range(1, limit + 1):
        for k in range(1, n + 1):
            a, b, c = enum.s(n, k), rec.s(n, k), rlseq.s_closed_form(n, k)
            if not (a == b == c):
                return CheckResult(
                    name,
                    False,
                    f"(n={n}, k={k}): enumerated={a} recurrence={b} closed={c}",
                )
        total = sum(rec.s(n, k) for k in range(1, n + 1))
        if total != catalan_number(n):
            return CheckResult(
                name, False, f"row {n} sums to {total}, not Catalan({n})"
            )
    return CheckResult(name, True)


def check_bijection(max_n: int) -> CheckResult:
    """Exhaustive deletion/insertion bijection check with i = 1."""
    name = "deletion/insertion bijection"
    for n in range(1, max_n + 1):
        by_comps: dict[int, list[rlseq.RLSequence]] = {}
        for seq in rlseq.enumerate_sequences(n):
            by_comps.setdefault(seq.component_count, []).append(seq)
        prev: dict[int, list[rlseq.RLSequence]] = {}
        for seq in rlseq.enumerate_sequences(n - 1):
            prev.setdefault(seq.component_count, []).append(seq)
        for k, members in by_comps.items():
            images = [rlseq.delete_component_pair(seq, 1) for seq in members]
            if len(set(images)) != len(images):
                return CheckResult(name, False, f"f_1 not injective on (n={n}, k={k})")
            target = {s for j, seqs in prev.items() if j >= k - 1 for s in seqs}
            if set(images) != target:
                return CheckResult(
                    name, False, f"f_1 image mismatch on (n={n}, k={k})"
                )
        # round trips: every valid (alpha, i, k) re-inserts then deletes to alpha
        for alpha in rlseq.enumerate_sequences(n - 1):
            j = alpha.component_count
            for k in range(1, n + 1):
                if j < k - 1:
                    continue
                for i in range(1, k + 1):
                    if j - k + i > j:
                        continue
                    omega = rlseq.insert_component_pair(alpha, i, k)
                    if omega.component_count != k or len(omega) != len(alpha) + 2:
                        return CheckResult(
                            name, False, f"insert postcondition fails at {alpha}, i={i}, k={k}"
                        )
                    if rlseq.delete_component_pair(omega, i) != alpha:
                        return CheckResult(
                            name, False, f"round trip fails at {alpha}, i={i}, k={k}"
                        )
    return CheckResult(name, True)


def check_borel_consistency(max_n: int = 30) -> CheckResult:
    """Corrected explicit formula agrees with the transform everywhere."""
    name = "Borel explicit = transform"
    for n in range(max_n + 1):
        for k in range(n + 1):
            a, b = borel_entry_explicit(n, k), borel_entry_transform(n, k)
            if a != b:
                return CheckResult(name, False, f"(n={n}, k={k}): {a} != {b}")
    return CheckResult(name, True)


def check_central_binomial(max_n: int) -> CheckResult:
    """Degree-2 specialization: W(2n, 2) = binom(2n, n) (the infinite path)."""
    name = "delta=2 central binomial identity"
    for n in range(1, max_n + 1):
        w, c = walks_via_catalan(n, 2), comb(2 * n, n)
        if w != c:
            return CheckResult(name, False, f"n={n}: {w} != binom(2n,n)={c}")
    return CheckResult(name, True)


def check_return_corollaries(max_n: int, max_delta: int) -> CheckResult:
    """First/second-return closed forms against the return-profile DP."""
    name = "first/second return corollaries"
    for delta in range(1, max_delta + 1):
        for n in range(1, max_n + 1):
            profile = dp_return_profile(n, delta)
            if sum(profile) != dp_walk_count(n, delta):
                return CheckResult(name, False, f"profile sum off at (n={n}, delta={delta})")
            if first_return_count(n, delta) != profile[0]:
                return CheckResult(
                    name, False, f"first-return mismatch at (n={n}, delta={delta})"
                )
            if n >= 2 and second_return_count(n, delta) != profile[1]:
                return CheckResult(
                    name, False, f"second-return mismatch at (n={n}, delta={delta})"
                )
            for k in range(1, n + 1):
                if walks_with_k_returns(n, k, delta) != profile[k - 1]:
                    return CheckResult(
                        name, False, f"k-return mismatch at (n={n}, k={k}, delta={delta})"
                    )
    return CheckResult(name, True)


def check_fixtures(fixture_dir: str | Path | None = None) -> CheckResult:
    """Recompute every bundled golden table and diff entry-for-entry."""
    name = "golden fixtures"
    try:
        cat = fx.triangle_rows("catalan", fixture_dir)
        bor = fx.triangle_rows("borel", fixture_dir)
        polys = fx.polynomial_coefficients(fixture_dir)
        mults = fx.k_return_multipliers(fixture_dir)
    except (OSError, ValueError) as exc:
        return CheckResult(name, False, f"fixture unreadable: {exc}")
    cat_rows = [list(r) for r in catalan_table(len(cat) - 1).rows]
    if cat_rows != cat:
        return CheckResult(name, False, _first_row_diff("catalan", cat_rows, cat))
    bor_rows = [list(r) for r in borel_table(len(bor) - 1).rows]
    if bor_rows != bor:
        return CheckResult(name, False, _first_row_diff("borel", bor_rows, bor))
    for n, expected in sorted(polys.items()):
        got = walks_polynomial(n).coefficient_list()
        if got != expected:
            return CheckResult(
                name, False, f"polynomial n={n}: computed {got}, fixture {expected}"
            )
    for (n, k), m in sorted(mults.items()):
        got_m = catalan_entry(n - 1, n - k)
        if got_m != m:
            return CheckResult(
                name, False, f"k-return multiplier (n={n}, k={k}): computed {got_m}, fixture {m}"
            )
    return CheckResult(name, True)


def _first_row_diff(kind: str, computed: list[list[int]], fixture: list[list[int]]) -> str:
    for n, (crow, frow) in enumerate(zip(computed, fixture)):
        if crow != frow:
            for k, (c, f) in enumerate(zip(crow, frow)):
                if c != f:
                    return f"{kind} triangle (n={n}, k={k}): computed {c}, fixture {f}"
            return f"{kind} triangle row {n}: length mismatch"
    return f"{kind} triangle: row count mismatch"


def run_all(
    max_n: int = 12,
    max_delta: int = 6,
    enum_cap: int = 8,
    fixture_dir: str | Path | None = None,
) -> list[CheckResult]:
    return [
        check_method_agreement(max_n, max_delta),
        check_s_table(max_n, enum_cap),
        check_bijection(min(max_n, enum_cap)),
        check_borel_consistency(max(max_n, 30)),
        check_central_binomial(max_n),
        check_return_corollaries(min(max_n, 12), max_delta),
        check_fixtures(fixture_dir),
    ]
