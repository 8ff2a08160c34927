"""Explicit constructions: Hadamard matrices, block designs, and the
families they induce.

Two pipelines produce pairwise-independent witness families:

* Hadamard matrix of order n (4 | n)  ->  symmetric 2-(n-1, n/2-1, n/4-1)
  design  ->  family of n events on {1..n} (each design block plus the
  point n, topped off with the full space), showing g(n) = n.
* Any 2-(v,k,lambda) design whose replication number r = lambda(v-1)/(k-1)
  satisfies r^2 = lambda*n for an integer n dualizes to v+1 events on
  {1..n}, showing g(n) >= v+1.  Projective planes of prime order q are
  built from the geometry of F_q^3 and feed this pipeline.

Every Hadamard constructor re-checks H H^T = nI in exact integers before
returning; design constructors re-check the design axioms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any

from .setsys import (
    CapacityError,
    Family,
    ParameterError,
    SampleSpace,
    is_valid_g_family,
    mask_to_points,
    points_to_mask,
)

MAX_ORDER = 64  # largest Hadamard order any generator emits


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class HadamardMatrix:
    """Square +1/-1 matrix H with H H^T = nI, checked at construction."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(row) for row in self.rows))
        n = len(self.rows)
        if n == 0:
            raise ParameterError("a Hadamard matrix has at least one row")
        for row in self.rows:
            if len(row) != n:
                raise ParameterError(f"matrix is not square: {n} rows, a row of {len(row)}")
            for x in row:
                if x not in (1, -1):
                    raise ParameterError(f"entry {x!r} is not +1 or -1")
        for i in range(n):
            for j in range(i, n):
                dot = sum(self.rows[i][c] * self.rows[j][c] for c in range(n))
                want = n if i == j else 0
                if dot != want:
                    raise ParameterError(
                        f"rows {i + 1} and {j + 1} have inner product {dot}; "
                        f"H H^T = {n}I fails"
                    )

    @property
    def order(self) -> int:
        return len(self.rows)


def sylvester(k: int) -> HadamardMatrix:
    """Hadamard matrix of order 2^k by the doubling construction."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ParameterError(f"sylvester index must be a nonnegative integer, got {k!r}")
    if 2**k > MAX_ORDER:
        raise CapacityError(f"sylvester supports orders up to {MAX_ORDER} (k <= 6), got k={k}")
    rows: list[list[int]] = [[1]]
    for _ in range(k):
        rows = [r + r for r in rows] + [r + [-x for x in r] for r in rows]
    return HadamardMatrix(tuple(tuple(r) for r in rows))


def paley1(q: int) -> HadamardMatrix:
    """Hadamard matrix of order q+1 for a prime q congruent to 3 mod 4.

    The quadratic-residue character on Z/q gives a skew conference
    matrix S (zero diagonal, all-ones border); H = I + S is Hadamard.
    """
    if not isinstance(q, int) or isinstance(q, bool) or not _is_prime(q):
        raise ParameterError(f"q={q!r} is not prime (prime powers are not supported)")
    if q % 4 != 3:
        raise ParameterError(f"q={q} is {q % 4} mod 4; the construction needs q = 3 mod 4")
    if q + 1 > MAX_ORDER:
        raise CapacityError(f"order q+1={q + 1} exceeds the {MAX_ORDER} limit")
    residues = {i * i % q for i in range(1, q)}
    size = q + 1
    rows = [[1] * size]
    for i in range(1, size):
        row = [-1]
        for j in range(1, size):
            if i == j:
                row.append(1)
            else:
                row.append(1 if (i - j) % q in residues else -1)
        rows.append(row)
    return HadamardMatrix(tuple(tuple(r) for r in rows))


def sylvester_orders(limit: int = MAX_ORDER) -> list[int]:
    return [2**k for k in range(7) if 2**k <= limit]


def paley_orders(limit: int = MAX_ORDER) -> list[int]:
    return [q + 1 for q in range(3, limit) if _is_prime(q) and q % 4 == 3 and q + 1 <= limit]


def hadamard_matrix(order: int, method: str = "auto") -> HadamardMatrix:
    """Hadamard matrix of the given order, from whichever generator covers it."""
    if method not in ("auto", "sylvester", "paley"):
        raise ParameterError(f"unknown method {method!r}; use sylvester, paley, or auto")
    if method in ("auto", "sylvester") and order in sylvester_orders():
        return sylvester(order.bit_length() - 1)
    if method in ("auto", "paley") and order in paley_orders():
        return paley1(order - 1)
    tried = {"sylvester": sylvester_orders(), "paley": paley_orders()}
    supported = tried[method] if method != "auto" else sorted(set(tried["sylvester"]) | set(tried["paley"]))
    raise CapacityError(
        f"no {'generator' if method == 'auto' else method + ' construction'} covers order "
        f"{order}; supported orders: {supported}"
    )


def normalize(h: HadamardMatrix) -> HadamardMatrix:
    """Equivalent matrix (row/column negations) with all-ones first row and column."""
    rows = [list(row) for row in h.rows]
    n = h.order
    for j in range(n):
        if rows[0][j] < 0:
            for i in range(n):
                rows[i][j] = -rows[i][j]
    for i in range(n):
        if rows[i][0] < 0:
            rows[i] = [-x for x in rows[i]]
    return HadamardMatrix(tuple(tuple(r) for r in rows))


def hadamard_to_text(h: HadamardMatrix) -> str:
    """n lines of n characters, '+' for +1 and '-' for -1."""
    return "\n".join("".join("+" if x > 0 else "-" for x in row) for row in h.rows) + "\n"


def hadamard_from_text(text: str) -> HadamardMatrix:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        row = []
        for ch in line:
            if ch == "+":
                row.append(1)
            elif ch == "-":
                row.append(-1)
            else:
                raise ParameterError(f"unexpected character {ch!r} in matrix text")
        rows.append(tuple(row))
    if not rows:
        raise ParameterError("matrix text contains no rows")
    return HadamardMatrix(tuple(rows))


def hadamard_to_json(h: HadamardMatrix) -> list[list[int]]:
    return [list(row) for row in h.rows]


def hadamard_from_json(data: Any) -> HadamardMatrix:
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise ParameterError("matrix JSON must be a list of rows of +1/-1 integers")
    return HadamardMatrix(tuple(tuple(row) for row in data))


@dataclass(frozen=True)
class Design:
    """2-(v,k,lambda) block design; blocks are bitmasks over points {1..v}.

    The constructor checks only shapes and ranges; the design axioms are
    the business of check_design / validate_design, so files can be
    loaded first and judged afterwards.
    """

    v: int
    k: int
    lam: int
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if self.v < 1:
            raise ParameterError(f"a design needs at least one point, got v={self.v}")
        if not 0 <= self.k <= self.v:
            raise ParameterError(f"block size k={self.k} outside 0..v={self.v}")
        if self.lam < 0:
            raise ParameterError(f"lambda={self.lam} must be nonnegative")
        full = (1 << self.v) - 1
        for idx, blk in enumerate(self.blocks):
            if blk < 0 or blk > full:
                raise ParameterError(f"block {idx + 1} has bits outside points 1..{self.v}")

    @property
    def b(self) -> int:
        return len(self.blocks)

    def block_points(self) -> list[tuple[int, ...]]:
        return [mask_to_points(blk) for blk in self.blocks]


def design_to_dict(design: Design) -> dict[str, Any]:
    return {
        "v": design.v,
        "k": design.k,
        "lambda": design.lam,
        "blocks": [list(pts) for pts in design.block_points()],
    }


def design_from_dict(data: Any) -> Design:
    if not isinstance(data, dict):
        raise ParameterError("design JSON must be an object")
    missing = {"v", "k", "lambda", "blocks"} - data.keys()
    if missing:
        raise ParameterError(f"design JSON is missing keys: {sorted(missing)}")
    v, k, lam, raw = data["v"], data["k"], data["lambda"], data["blocks"]
    for name, value in ("v", v), ("k", k), ("lambda", lam):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ParameterError(f'design JSON field "{name}" must be an integer')
    if not isinstance(raw, list):
        raise ParameterError('design JSON field "blocks" must be a list of point lists')
    blocks = []
    for item in raw:
        if not isinstance(item, list):
            raise ParameterError(f"block {item!r} is not a list of points")
        mask = points_to_mask(item, v if v >= 1 else 1)
        if mask.bit_count() != len(item):
            raise ParameterError(f"block {item!r} repeats a point")
        blocks.append(mask)
    return Design(v, k, lam, tuple(blocks))


@dataclass(frozen=True)
class DesignCheck:
    """Outcome of checking the 2-design axioms on a Design."""

    ok: bool
    symmetric: bool                 # b == v
    block_sizes_ok: bool
    pair_coverage_ok: bool
    intersections_ok: bool | None   # symmetric designs only, else None
    first_violation: str | None


def check_design(design: Design) -> DesignCheck:
    first: str | None = None
    sizes_ok = True
    for idx, blk in enumerate(design.blocks):
        got = blk.bit_count()
        if got != design.k:
            sizes_ok = False
            first = f"block {idx + 1} has size {got}, expected k={design.k}"
            break
    pairs_ok = True
    for p, q in itertools.combinations(range(design.v), 2):
        need = (1 << p) | (1 << q)
        cover = sum(1 for blk in design.blocks if blk & need == need)
        if cover != design.lam:
            pairs_ok = False
            if first is None:
                first = (
                    f"pair {{{p + 1},{q + 1}}} lies in {cover} blocks, "
                    f"expected lambda={design.lam}"
                )
            break
    symmetric = design.b == design.v
    inter_ok: bool | None = None
    if symmetric:
        inter_ok = True
        for (i, bi), (j, bj) in itertools.combinations(enumerate(design.blocks), 2):
            got = (bi & bj).bit_count()
            if got != design.lam:
                inter_ok = False
                if first is None:
                    first = (
                        f"blocks {i + 1} and {j + 1} meet in {got} points, "
                        f"expected lambda={design.lam}"
                    )
                break
    ok = sizes_ok and pairs_ok and inter_ok is not False
    return DesignCheck(ok, symmetric, sizes_ok, pairs_ok, inter_ok, first)


def validate_design(design: Design) -> bool:
    """True iff block sizes and pair coverage (and, for symmetric designs,
    pairwise block intersections) all match the declared parameters."""
    return check_design(design).ok


def hadamard_to_design(h: HadamardMatrix) -> Design:
    """Symmetric 2-(n-1, n/2-1, n/4-1) design from a Hadamard matrix of order n.

    Normalize, delete the first row and column, and read each remaining
    row's +1 positions as a block over the n-1 remaining columns.
    """
    n = h.order
    if n < 4 or n % 4 != 0:
        raise ParameterError(f"design extraction needs order >= 4 divisible by 4, got {n}")
    norm = normalize(h)
    blocks = []
    for i in range(1, n):
        mask = 0
        for j in range(1, n):
            if norm.rows[i][j] > 0:
                mask |= 1 << (j - 1)
        blocks.append(mask)
    design = Design(n - 1, n // 2 - 1, n // 4 - 1, tuple(blocks))
    report = check_design(design)
    assert report.ok and report.symmetric, "Hadamard-derived design failed its axioms"
    return design


def hadamard_family(h: HadamardMatrix) -> Family:
    """Maximum family of n pairwise-independent events on {1..n} from a
    Hadamard matrix of order n: each design block plus the point n, then
    the full space."""
    design = hadamard_to_design(h)
    n = h.order
    space = SampleSpace(n)  # orders above 63 exceed the bitmask limit
    top = 1 << (n - 1)
    events = [space.event_from_mask(blk | top) for blk in design.blocks]
    events.append(space.omega())
    family = Family(space, tuple(events))
    assert is_valid_g_family(family), "Hadamard family failed the independence check"
    return family


def projective_plane(q: int) -> Design:
    """Symmetric 2-(q^2+q+1, q+1, 1) design from the geometry of F_q^3, q prime.

    Points and lines are both indexed by normalized nonzero triples (first
    nonzero coordinate 1); point (x,y,z) lies on line [a,b,c] iff
    ax + by + cz = 0 mod q.
    """
    if not isinstance(q, int) or isinstance(q, bool) or not _is_prime(q):
        raise ParameterError(f"q={q!r} is not prime (prime powers are not supported)")
    v = q * q + q + 1
    if v > 63:
        raise CapacityError(f"plane of order {q} has {v} points, above the 63-point limit")
    triples = (
        [(1, y, z) for y in range(q) for z in range(q)]
        + [(0, 1, z) for z in range(q)]
        + [(0, 0, 1)]
    )
    blocks = []
    for a, b, c in triples:
        mask = 0
        for idx, (x, y, z) in enumerate(triples):
            if (a * x + b * y + c * z) % q == 0:
                mask |= 1 << idx
        blocks.append(mask)
    design = Design(v, q + 1, 1, tuple(blocks))
    report = check_design(design)
    assert report.ok and report.symmetric, "projective plane failed the design axioms"
    return design


def dualize_design(design: Design) -> Family:
    """Family of v+1 pairwise-independent events on {1..n}, n = r^2/lambda,
    from a 2-(v,k,lambda) design whose parameters admit such an n.

    Point p_i maps to the set of indices of blocks containing it; the
    dual events have size r and pairwise intersections lambda, and the
    design identities guarantee b <= n, so they fit inside {1..n}.
    """
    if not validate_design(design):
        report = check_design(design)
        raise ParameterError(f"not a valid 2-design: {report.first_violation}")
    if design.lam < 1:
        raise ParameterError(
            "dualization needs lambda >= 1 (with lambda=0 the target n = r^2/lambda "
            "is undefined)"
        )
    if design.k < 2:
        raise ParameterError(f"dualization needs block size k >= 2, got k={design.k}")
    r_num = design.lam * (design.v - 1)
    if r_num % (design.k - 1) != 0:
        raise ParameterError(
            f"replication number r = lambda(v-1)/(k-1) = {design.lam}*{design.v - 1}/"
            f"{design.k - 1} is not an integer"
        )
    r = r_num // (design.k - 1)
    if (r * r) % design.lam != 0:
        raise ParameterError(
            f"r^2/lambda = {r}^2/{design.lam} is not an integer; no sample-space size n "
            f"with lambda*n = r^2 exists"
        )
    n = r * r // design.lam
    space = SampleSpace(n)  # raises CapacityError above 63 points
    assert design.b <= n, "design identities guarantee at most n blocks"
    events = []
    for p in range(design.v):
        mask = 0
        for j, blk in enumerate(design.blocks):
            if blk >> p & 1:
                mask |= 1 << j
        events.append(space.event_from_mask(mask))
    events.append(space.omega())
    family = Family(space, tuple(events))
    assert all(ev.size == r for ev in family.events[:-1])
    assert is_valid_g_family(family), "dual family failed the independence check"
    return family
