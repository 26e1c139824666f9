"""Closed-walk counts at a vertex of an infinite delta-regular tree.

W(2n, delta) is computed by three mutually independent closed forms:

  * components route:  sum_k delta^k (delta-1)^(n-k) * |{paths of
    semi-length n-1 with >= k-1 components}|
  * Catalan route:     sum_k delta^k (delta-1)^(n-k) * C(n-1, n-k)
  * Borel route:       sum_l (-1)^(n-l) * B(n-1, n-l) * delta^l

All three must agree exactly; the test grid enforces it against the DP
and generating-function oracles as well.

delta = 1 is admitted as a formal specialization (W = 1, the single
there-and-back walk) even though an infinite 1-regular tree does not
exist.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from treewalks.rlseq import cumulative_s, s_table_recurrence
from treewalks.triangles import (
    borel_entry_transform,
    catalan_entry,
    catalan_number,
)

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _check_domain(n: int, delta: int, min_n: int = 1) -> None:
    if n < min_n:
        raise ValueError(f"n must be >= {min_n}, got {n}")
    if delta < 1:
        raise ValueError(f"delta must be >= 1, got {delta}")


@dataclass(frozen=True)
class DeltaPolynomial:
    """Walk-count polynomial in the tree degree, exponents 1..n.

    ``coefficients[l]`` is the (signed, exact) coefficient of degree^l.
    Leading coefficient is B(n-1, 0), the n-th Catalan number; signs
    alternate down from the top; there is no constant term.
    """

    coefficients: dict[int, int]

    @property
    def degree(self) -> int:
        return max(self.coefficients)

    def evaluate(self, delta: int) -> int:
        return sum(c * delta**l for l, c in self.coefficients.items())

    def coefficient_list(self) -> list[int]:
        """Coefficients exponent-descending, degree down to 1."""
        return [self.coefficients.get(l, 0) for l in range(self.degree, 0, -1)]

    def render(self, ascii_only: bool = False) -> str:
        var = "d" if ascii_only else "δ"
        minus = "-" if ascii_only else "−"
        terms = []
        for l in range(self.degree, 0, -1):
            c = self.coefficients.get(l, 0)
            if c == 0:
                continue
            mag = abs(c)
            if l == 1:
                power = ""
            elif ascii_only:
                power = f"^{l}"
            else:
                power = str(l).translate(_SUPERSCRIPTS)
            term = f"{'' if mag == 1 else mag}{var}{power}"
            if not terms:
                terms.append(term if c > 0 else f"{minus}{term}")
            else:
                terms.append(f" {minus} {term}" if c < 0 else f" + {term}")
        return "".join(terms) if terms else "0"

    def to_json(self) -> str:
        """Exponent-descending coefficient array, decimal strings."""
        return json.dumps([str(c) for c in self.coefficient_list()])


def walks_via_components(n: int, delta: int) -> int:
    """Closed walks of length 2n via the component-count recurrence."""
    _check_domain(n, delta)
    table = s_table_recurrence(n - 1)
    return sum(
        delta**k * (delta - 1) ** (n - k) * cumulative_s(n - 1, k, table)
        for k in range(1, n + 1)
    )


def walks_via_catalan(n: int, delta: int) -> int:
    """Closed walks of length 2n via Catalan-triangle entries."""
    _check_domain(n, delta)
    return sum(
        delta**k * (delta - 1) ** (n - k) * catalan_entry(n - 1, n - k)
        for k in range(1, n + 1)
    )


def walks_via_borel(n: int, delta: int) -> int:
    """Closed walks of length 2n via Borel-triangle coefficients."""
    _check_domain(n, delta)
    return walks_polynomial(n).evaluate(delta)


def walks_polynomial(n: int) -> DeltaPolynomial:
    """Walk-count polynomial: coefficient of degree^l is (-1)^(n-l) B(n-1, n-l)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    coeffs = {
        l: (-1) ** (n - l) * borel_entry_transform(n - 1, n - l)
        for l in range(1, n + 1)
    }
    return DeltaPolynomial(coefficients=coeffs)


def walks_with_k_returns(n: int, k: int, delta: int) -> int:
    """Closed walks of length 2n returning to the root exactly k times."""
    _check_domain(n, delta)
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got (n={n}, k={k})")
    return delta**k * (delta - 1) ** (n - k) * catalan_entry(n - 1, n - k)


def first_return_count(n: int, delta: int) -> int:
    """Walks of length 2n returning to the start for the first time at the end."""
    _check_domain(n, delta)
    c = catalan_number(n - 1)
    # the diagonal identity C(n-1, n-1) = Catalan(n-1) makes this the k=1 term
    assert c == catalan_entry(n - 1, n - 1)
    return delta * (delta - 1) ** (n - 1) * c


def second_return_count(n: int, delta: int) -> int:
    """Walks of length 2n ending at the root on their second return."""
    _check_domain(n, delta, min_n=2)
    return delta**2 * (delta - 1) ** (n - 2) * catalan_number(n - 1)
