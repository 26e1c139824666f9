"""Formula-independent ground truth for closed-walk counts.

Two routes, independent of every closed form under test:

  * a dynamic program on distance-from-root states (on a tree the walk's
    future depends only on the current depth, so tracking depth alone is
    exact: every vertex at depth d >= 1 has one edge toward the root and
    delta - 1 away, and the root has delta away),
  * brute-force enumeration of Dyck-path shapes weighted by
    delta^k (delta-1)^(n-k) for a shape with k components.
"""

from __future__ import annotations

from treewalks import _kernel
from treewalks.rlseq import ENUM_CAP_DEFAULT, EnumerationCapError


def _check(delta: int) -> None:
    if delta < 1:
        raise ValueError(f"delta must be >= 1, got {delta}")


def dp_walk_count_by_length(length: int, delta: int) -> int:
    """Closed walks of the given length from the root (0 when length is odd)."""
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    _check(delta)
    # counts[d] = walks of current length ending at distance d
    counts = [0] * (length + 2)
    counts[0] = 1
    for _ in range(length):
        nxt = [0] * (length + 2)
        if counts[0]:
            nxt[1] += delta * counts[0]
        for d in range(1, length + 1):
            if counts[d]:
                nxt[d + 1] += (delta - 1) * counts[d]
                nxt[d - 1] += counts[d]
        counts = nxt
    return counts[0]


def dp_walk_count(n: int, delta: int) -> int:
    """Closed walks of length 2n from the root, by the distance-state DP."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return dp_walk_count_by_length(2 * n, delta)


def weighted_dyck_count(n: int, delta: int, cap: int = ENUM_CAP_DEFAULT) -> int:
    """Sum over Dyck-path shapes of semi-length n of delta^k (delta-1)^(n-k)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _check(delta)
    if n > cap:
        raise EnumerationCapError(
            f"n={n} exceeds enumeration cap {cap}; raise the cap explicitly"
        )
    hist = _kernel.component_histogram(n)
    return sum(
        count * delta**k * (delta - 1) ** (n - k)
        for k, count in enumerate(hist)
        if count
    )


def dp_return_profile(n: int, delta: int) -> list[int]:
    """Closed walks of length 2n by exact number of returns to the root.

    Entry k-1 of the result counts walks with exactly k returns,
    k = 1..n.  Computed by the distance DP augmented with a return
    counter; independent of the triangle formulas.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _check(delta)
    # state[(d, r)] = walks ending at distance d with r returns so far
    state: dict[tuple[int, int], int] = {(0, 0): 1}
    for _ in range(2 * n):
        nxt: dict[tuple[int, int], int] = {}
        for (d, r), cnt in state.items():
            if d == 0:
                key = (1, r)
                nxt[key] = nxt.get(key, 0) + delta * cnt
            else:
                up = (d + 1, r)
                nxt[up] = nxt.get(up, 0) + (delta - 1) * cnt
                down = (d - 1, r + 1 if d == 1 else r)
                nxt[down] = nxt.get(down, 0) + cnt
        state = nxt
    profile = [0] * n
    for (d, r), cnt in state.items():
        if d == 0:
            profile[r - 1] += cnt
    return profile
