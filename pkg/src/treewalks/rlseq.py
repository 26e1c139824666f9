"""Balanced legal RL-sequences (Dyck paths) and their component structure.

An RL-sequence records a closed walk's radial shape: R moves away from
the root, L moves toward it.  Balanced means #R = #L; legal means no
prefix has more L's than R's.  A component is a maximal segment between
consecutive visits to height 0, so the number of components equals the
number of returns to the root.

S(n, k) = number of balanced legal sequences of length 2n with exactly
k components.  Three routes to it live here:

  * brute-force enumeration (``s_table_enumerated``),
  * the deletion-bijection recurrence S(n, k) = sum_{j>=k-1} S(n-1, j)
    (``s_table_recurrence``),
  * the Catalan-triangle closed form S(n, k) = C(n-1, n-k)
    (``s_closed_form``),

plus the deletion/insertion pair realizing the bijection itself.

Internally sequences are bit-encoded (R = set bit); the string form over
{R, L} is the interface representation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from treewalks import _kernel
from treewalks.triangles import catalan_entry, catalan_number

#: Default semi-length cap for brute-force enumeration (~2.7M paths).
ENUM_CAP_DEFAULT = 14


class AlphabetError(ValueError):
    """A character outside {R, L} was supplied."""


class IllegalSequenceError(ValueError):
    """The word is not balanced or not legal."""


class ComponentIndexError(ValueError):
    """A component index exceeds the sequence's component count."""


class EnumerationCapError(ValueError):
    """Requested enumeration exceeds the resource cap."""


def _parse(word: str) -> tuple[int, int]:
    """Return (mask, length); validates alphabet only."""
    mask = 0
    for pos, ch in enumerate(word):
        if ch == "R":
            mask |= 1 << pos
        elif ch != "L":
            raise AlphabetError(f"invalid character {ch!r} at position {pos}")
    return mask, len(word)


def is_balanced_legal(word: str) -> bool:
    """True iff the word is balanced (#R = #L) and legal (Dyck prefix condition)."""
    height = 0
    for pos, ch in enumerate(word):
        if ch == "R":
            height += 1
        elif ch == "L":
            height -= 1
            if height < 0:
                return False
        else:
            raise AlphabetError(f"invalid character {ch!r} at position {pos}")
    return height == 0


class RLSequence:
    """Immutable balanced legal RL-sequence."""

    __slots__ = ("_mask", "_length")

    def __init__(self, word: str):
        if not is_balanced_legal(word):
            raise IllegalSequenceError(f"not a balanced legal RL-sequence: {word!r}")
        self._mask, self._length = _parse(word)

    @classmethod
    def _from_mask(cls, mask: int, length: int) -> "RLSequence":
        # trusted constructor: mask already known balanced legal
        obj = object.__new__(cls)
        obj._mask = mask
        obj._length = length
        return obj

    def __len__(self) -> int:
        return self._length

    @property
    def semilength(self) -> int:
        return self._length // 2

    def __str__(self) -> str:
        return "".join(
            "R" if self._mask >> p & 1 else "L" for p in range(self._length)
        )

    def __repr__(self) -> str:
        return f"RLSequence({str(self)!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RLSequence):
            return NotImplemented
        return self._mask == other._mask and self._length == other._length

    def __hash__(self) -> int:
        return hash((self._mask, self._length))

    def component_spans(self) -> list[tuple[int, int]]:
        """Half-open [start, end) index spans of the components."""
        spans = []
        height = 0
        start = 0
        for pos in range(self._length):
            height += 1 if self._mask >> pos & 1 else -1
            if height == 0:
                spans.append((start, pos + 1))
                start = pos + 1
        return spans

    @property
    def component_count(self) -> int:
        return len(self.component_spans())

    def _slice(self, start: int, end: int) -> "RLSequence":
        mask = (self._mask >> start) & ((1 << (end - start)) - 1)
        return RLSequence._from_mask(mask, end - start)


@dataclass(frozen=True)
class ComponentDecomposition:
    """Ordered components whose concatenation is the original sequence."""

    components: tuple[RLSequence, ...]

    def __len__(self) -> int:
        return len(self.components)

    def concatenation(self) -> RLSequence:
        return concat(self.components)


def concat(parts: "tuple[RLSequence, ...] | list[RLSequence]") -> RLSequence:
    mask = 0
    offset = 0
    for part in parts:
        mask |= part._mask << offset
        offset += len(part)
    return RLSequence._from_mask(mask, offset)


def components(seq: RLSequence | str) -> ComponentDecomposition:
    """Split a balanced legal sequence at its returns to height 0."""
    if isinstance(seq, str):
        seq = RLSequence(seq)
    parts = tuple(seq._slice(a, b) for a, b in seq.component_spans())
    return ComponentDecomposition(components=parts)


def enumerate_sequences(n: int, cap: int = ENUM_CAP_DEFAULT) -> list[RLSequence]:
    """All balanced legal sequences of length 2n, lexicographic with R < L."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > cap:
        raise EnumerationCapError(
            f"n={n} exceeds enumeration cap {cap}; raise the cap explicitly"
        )
    return [RLSequence._from_mask(m, 2 * n) for m in _kernel.enumerate_masks(n)]


class STable:
    """Counts S(m, k) of sequences of length 2m with k components, m <= n.

    Row 0 is the convention S(0, 0) = 1 (the empty sequence); row m >= 1
    holds k = 1..m (S(m, 0) = 0 implicitly: a nonempty sequence has at
    least one component).
    """

    def __init__(self, rows: list[list[int]]):
        # rows[0] == [1]; rows[m] for m >= 1 holds S(m, 1..m)
        self._rows = [list(r) for r in rows]

    @property
    def size(self) -> int:
        """Largest m with a stored row."""
        return len(self._rows) - 1

    def s(self, m: int, k: int) -> int:
        if m < 0 or m > self.size:
            raise IndexError(f"row {m} not in table (size {self.size})")
        if m == 0:
            return 1 if k == 0 else 0
        if k < 1 or k > m:
            return 0
        return self._rows[m][k - 1]

    def row(self, m: int) -> list[int]:
        if m == 0:
            return [1]
        return list(self._rows[m])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, STable):
            return NotImplemented
        return self._rows == other._rows

    def to_csv(self) -> str:
        return "\n".join(",".join(str(e) for e in row) for row in self._rows) + "\n"

    def to_json(self) -> str:
        return json.dumps([[str(e) for e in row] for row in self._rows])


def s_table_enumerated(n: int, cap: int = ENUM_CAP_DEFAULT) -> STable:
    """Brute-force S-table over all enumerated sequences up to length 2n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > cap:
        raise EnumerationCapError(
            f"n={n} exceeds enumeration cap {cap}; raise the cap explicitly"
        )
    rows: list[list[int]] = [[1]]
    for m in range(1, n + 1):
        hist = _kernel.component_histogram(m)
        rows.append(hist[1:])
    return STable(rows)


def s_table_recurrence(n: int) -> STable:
    """S-table from S(n, k) = sum_{j=k-1}^{n-1} S(n-1, j), base S(0, 0) = 1."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    rows: list[list[int]] = [[1]]
    table = STable(rows)
    for m in range(1, n + 1):
        row = [
            sum(table.s(m - 1, j) for j in range(k - 1, m)) for k in range(1, m + 1)
        ]
        rows.append(row)
        table = STable(rows)
    return table


def s_closed_form(n: int, k: int) -> int:
    """S(n, k) = C(n-1, n-k), the Catalan-triangle closed form."""
    if not 1 <= k <= n:
        raise IndexError(f"need 1 <= k <= n, got (n={n}, k={k})")
    return catalan_entry(n - 1, n - k)


def cumulative_s(n: int, k: int, table: STable | None = None) -> int:
    """Number of sequences of length 2n with at least k-1 components.

    Equals sum_{j >= k-1} S(n, j); the j = 0 term exists only as
    S(0, 0) = 1.  Valid for 1 <= k <= n+1 (k = n+1 gives S(n, n) = 1).
    """
    if n < 0 or not 1 <= k <= n + 1:
        raise IndexError(f"need n >= 0 and 1 <= k <= n+1, got (n={n}, k={k})")
    if n == 0:
        return 1  # the empty sequence, zero components
    if table is None:
        table = s_table_recurrence(n)
    return sum(table.s(n, j) for j in range(max(k - 1, 1), n + 1))


def delete_component_pair(seq: RLSequence | str, i: int) -> RLSequence:
    """Remove the outer R...L pair of the i-th component (1-based).

    The bijection's deletion map: the i-th component R w L becomes w,
    which may itself be empty or split into several components.
    """
    if isinstance(seq, str):
        seq = RLSequence(seq)
    comps = components(seq).components
    if not 1 <= i <= len(comps):
        raise ComponentIndexError(
            f"component index {i} out of range 1..{len(comps)}"
        )
    target = comps[i - 1]
    inner = target._slice(1, len(target) - 1)
    return concat(list(comps[: i - 1]) + [inner] + list(comps[i:]))


def insert_component_pair(alpha: RLSequence | str, i: int, k: int) -> RLSequence:
    """Inverse of deletion: wrap components i..(j-k+i) of alpha in R...L.

    alpha has j components; the result has exactly k components and the
    wrapped block sits at position i.  Requires 1 <= i <= k <= j + 1.
    """
    if isinstance(alpha, str):
        alpha = RLSequence(alpha)
    comps = components(alpha).components
    j = len(comps)
    if not (1 <= i <= k and j >= k - 1):
        raise ComponentIndexError(
            f"need 1 <= i <= k and components >= k-1, got (i={i}, k={k}, components={j})"
        )
    hi = j - k + i  # last wrapped component (may be i-1: wrap nothing)
    inner = concat(comps[i - 1 : hi])
    core_mask = (1 << 0) | (inner._mask << 1)  # R, inner, L (L is a clear bit)
    core = RLSequence._from_mask(core_mask, len(inner) + 2)
    return concat(list(comps[: i - 1]) + [core] + list(comps[hi:]))
