"""Exact integer linear algebra certificates for event families.

For a family of events A_1..A_t on {1..n} with incidence matrix B (rows
are sample points, columns are events), pairwise independence holds
exactly when the scaled Gram identity

    n * (B^T B) == u u^T + n*D

holds entrywise, where u_i = |A_i| and n*D_ii = n|A_i| - |A_i|^2.  When
it holds and every event is nonempty, B^T B is positive definite, so B
has full column rank and t = rank(B) <= n.  Everything here is integer
arithmetic; a rank claim never rests on a floating-point tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .setsys import Family, ParameterError


@dataclass(frozen=True)
class IncidenceMatrix:
    """0/1 matrix with rows = sample points 1..n, columns = family events."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(tuple(row) for row in self.entries))
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ParameterError("incidence matrix rows must have equal length")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def t(self) -> int:
        return len(self.entries[0]) if self.entries else 0


def incidence(family: Family) -> IncidenceMatrix:
    """Incidence matrix of a family: entry (i, j) = 1 iff point i is in event j."""
    n = family.space.n
    rows = tuple(
        tuple(1 if ev.mask >> i & 1 else 0 for ev in family) for i in range(n)
    )
    return IncidenceMatrix(rows)


def rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix, by Bareiss elimination.

    Fraction-free: every intermediate value is an exact minor of the
    input, so divisions are exact and the result is bit-exact.
    """
    rows = [list(map(int, row)) for row in matrix]
    m = len(rows)
    if m == 0:
        return 0
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise ParameterError("rank needs a rectangular matrix")
    rk = 0
    prev = 1
    for col in range(width):
        if rk == m:
            break
        pivot = next((i for i in range(rk, m) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        lead = rows[rk][col]
        top = rows[rk]
        for i in range(rk + 1, m):
            row = rows[i]
            head = row[col]
            for j in range(col + 1, width):
                quot, rem = divmod(lead * row[j] - head * top[j], prev)
                assert rem == 0, "Bareiss division is always exact"
                row[j] = quot
            row[col] = 0
        prev = lead
        rk += 1
    return rk


@dataclass(frozen=True)
class GramReport:
    """Exact certificate n*B^T B == u u^T + n*D plus the rank of B."""

    n: int
    t: int
    sizes: tuple[int, ...]        # u_i = |A_i|, as incidence column sums
    diag_scaled: tuple[int, ...]  # n*D_ii = n|A_i| - |A_i|^2
    gram_ok: bool
    rank: int
    full_column_rank: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "gram_ok": self.gram_ok,
            "rank": self.rank,
            "t": self.t,
            "n": self.n,
            "full_column_rank": self.full_column_rank,
        }


def gram_certify(family: Family) -> GramReport:
    """Check the scaled Gram identity and compute rank(B), all in integers.

    Requires every event nonempty (the full space is permitted).  A family
    that is not pairwise independent yields gram_ok=False, not an error.
    """
    if any(ev.is_empty for ev in family):
        raise ParameterError("gram certificates are defined for nonempty events only")
    mat = incidence(family)
    n, t = mat.n, mat.t
    u = [sum(mat.entries[i][j] for i in range(n)) for j in range(t)]
    gram = [
        [sum(mat.entries[i][a] * mat.entries[i][b] for i in range(n)) for b in range(t)]
        for a in range(t)
    ]
    diag = [n * ua - ua * ua for ua in u]
    gram_ok = all(
        n * gram[a][b] == u[a] * u[b] + (diag[a] if a == b else 0)
        for a in range(t)
        for b in range(t)
    )
    rk = rank(mat.entries)
    full = rk == t
    if gram_ok:
        # positive definiteness of B^T B forces full column rank
        assert full, "Gram identity holds but B is column rank deficient"
    return GramReport(n, t, tuple(u), tuple(diag), gram_ok, rk, full)
