"""Constructions built from 2x2 blocks with uniform line products.

The workhorse block family M^p over D_2l,

        r^(2p+1)    r^(-2p)*s
        r^(2p+1)*s  r^(2p)

has row product rs (left-to-right) and column product s (bottom-to-top)
for every p, and the l blocks p = 0..l-1 together cover D_2l exactly.
Tiling them yields linearly magic rectangle sets for all even m, n.
Squares with side divisible by 8 become fully magic by steering which
blocks sit on the two diagonals (the diagonal of M^p contributes the
rotation r^(4p+1), so index sets A and B with the right sums telescope
both diagonals to r^0).  A second block family with mixed rotation and
reflection diagonals handles squares of side n = 4k in the orderable
sense.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import dihedral
from .designs import Rectangle, RectangleSet
from .dihedral import DihedralElement
from .errors import PlanCollisionError


@dataclass(frozen=True, slots=True)
class BlockGrid:
    """Assignment of block indices to an m' x n' grid of 2x2 blocks."""

    rows: int
    cols: int
    assignment: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.assignment) != self.rows or any(
                len(r) != self.cols for r in self.assignment):
            raise ValueError("assignment shape does not match rows x cols")


def _tile(grid: BlockGrid, block_for) -> Rectangle:
    """Concatenate 2x2 blocks into one (2*rows) x (2*cols) rectangle."""
    rows: list[tuple[DihedralElement, ...]] = []
    for block_row in grid.assignment:
        blocks = [block_for(p) for p in block_row]
        rows.append(sum((b.cells[0] for b in blocks), ()))
        rows.append(sum((b.cells[1] for b in blocks), ()))
    return Rectangle(tuple(rows))


def lemma_block(p: int, l: int) -> Rectangle:
    """The 2x2 block M^p over D_2l (exponents reduced mod 2l)."""
    if not 0 <= p < l:
        raise ValueError(f"block index {p} out of range [0, {l})")
    modulus = 2 * l
    return Rectangle((
        (dihedral.rotation(2 * p + 1, modulus),
         dihedral.reflection(-2 * p, modulus)),
        (dihedral.reflection(2 * p + 1, modulus),
         dihedral.rotation(2 * p, modulus)),
    ))


def lmrs_2_2(l: int) -> RectangleSet:
    """Linearly magic set of l blocks M^0..M^(l-1) over D_2l: k = l arrays
    of shape 2x2 with row product rs and column product s."""
    if l <= 1:
        raise ValueError(f"the 2x2 block family needs l > 1, got {l}")
    dihedral.check_group_order(2 * l)
    return RectangleSet(2 * l, tuple(lemma_block(p, l) for p in range(l)))


def lmrs_even(m: int, n: int, k: int) -> RectangleSet:
    """Linearly magic rectangle set for even m and n, any k, over the
    dihedral group of order m*n*k.

    Each of the k arrays is an (m/2) x (n/2) grid of consecutive blocks
    M^p assigned row-major; rows multiply to (rs)^(n/2) and columns to
    s^(m/2).
    """
    if m < 2 or n < 2 or m % 2 or n % 2:
        raise ValueError(f"m and n must be even and >= 2, got {m}x{n}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    blocks = m * n * k // 4
    if blocks <= 1:
        raise ValueError("m*n*k must exceed 4 (the block family needs at "
                         "least two blocks)")
    m2, n2, per = m // 2, n // 2, (m // 2) * (n // 2)
    arrays = []
    for u in range(k):
        assignment = tuple(
            tuple(u * per + bi * n2 + bj for bj in range(n2))
            for bi in range(m2))
        grid = BlockGrid(m2, n2, assignment)
        arrays.append(_tile(grid, lambda p: lemma_block(p, blocks)))
    return RectangleSet(m * n * k // 2, tuple(arrays))


@dataclass(frozen=True, slots=True)
class DiagonalPlan:
    """Block index lists steering the two diagonals of an 8k x 8k square.

    main (A) wants |A| = 4k, A within [0, 8k^2) and sum(A) = -k mod 8k^2;
    back is always the shift B = {a + 8k^2}.  Those conditions make both
    diagonal products telescope to r^0.  `collisions` lists values the
    closed-form index formula duplicated; `repaired` marks a plan where
    the colliding pair was replaced by a nearby valid one.
    """

    k: int
    main: tuple[int, ...]
    back: tuple[int, ...]
    collisions: tuple[int, ...] = ()
    repaired: bool = False

    def problems(self) -> tuple[str, ...]:
        """Invariant diagnostics; empty means the plan is usable."""
        c = 8 * self.k * self.k
        out = []
        if len(set(self.main)) != 4 * self.k:
            dups = sorted(v for v in set(self.main)
                          if self.main.count(v) > 1)
            out.append(f"main diagonal indices collide: {dups} "
                       f"({len(set(self.main))} distinct, need {4 * self.k})")
        if any(not 0 <= a < c for a in self.main):
            out.append(f"main diagonal indices outside [0, {c})")
        if sum(self.main) % c != (-self.k) % c:
            out.append(f"main index sum {sum(self.main)} != -k mod {c}")
        if self.back != tuple(a + c for a in self.main):
            out.append("back diagonal indices are not the +8k^2 shift of "
                       "the main ones")
        if set(self.main) & set(self.back):
            out.append("main and back diagonal index sets overlap")
        return tuple(out)


def _closed_form_main(k: int) -> list[int]:
    if k == 1:
        return [0, 2, 6, 7]
    c = 8 * k * k
    out: list[int] = []
    for j in range(1, 2 * k):
        out += [j, c - j]
    out += [0, c - k]
    return out


def diagonal_plan(k: int, repair: bool = False) -> DiagonalPlan:
    """Diagonal index plan for an 8k x 8k square.

    The interleaved formula {1, 8k^2-1, 2, 8k^2-2, ..., 0, 8k^2-k}
    duplicates 8k^2-k for every k >= 2 (the pair j = k already supplies
    it); the duplicate is reported in `collisions`, never hidden.  With
    repair=True the colliding pair (k, 8k^2-k) is swapped for the first
    (j*, 8k^2-j*) with j* >= 2k that restores distinctness, keeping the
    size and the sum congruence.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    c = 8 * k * k
    main = _closed_form_main(k)
    collisions = tuple(sorted(v for v in set(main) if main.count(v) > 1))
    repaired = False
    if collisions and repair:
        pos = main.index(k)  # the pair (k, c-k) sits at (pos, pos+1)
        for j_star in range(2 * k, c):
            candidate = list(main)
            candidate[pos] = j_star
            candidate[pos + 1] = c - j_star
            if len(set(candidate)) == 4 * k:
                main = candidate
                repaired = True
                collisions = ()
                break
        else:
            raise PlanCollisionError(
                f"no replacement pair repairs the plan for k={k}")
    back = tuple(a + c for a in main)
    return DiagonalPlan(k, tuple(main), back, collisions, repaired)


def lsms(n: int, repair_plan: bool = True) -> RectangleSet:
    """Linearly semi-magic square of side n = 0 mod 4; fully magic in the
    fixed-diagonal sense when n = 0 mod 8.

    For n = 4 mod 8 this is the plain even tiling (rho = sigma = r^0
    because n/2 is even).  For n = 8k the blocks named by the diagonal
    plan are parked on the two diagonals (main gets A, backward gets B,
    each in list order) and the rest fill the remaining positions
    row-major in ascending index order; row and column products do not
    depend on placement, and the diagonals telescope to r^0.
    """
    if n < 4 or n % 4:
        raise ValueError(f"side must be >= 4 and divisible by 4, got {n}")
    if n % 8 == 4:
        return lmrs_even(n, n, 1)
    k = n // 8
    plan = diagonal_plan(k, repair=repair_plan)
    issues = plan.problems()
    if issues:
        raise PlanCollisionError(
            f"diagonal plan for k={k} is unusable: " + "; ".join(issues) +
            " (the closed-form index formula duplicates an entry; "
            "enable the repaired plan)")
    side = 4 * k
    blocks = n * n // 4
    assignment = [[-1] * side for _ in range(side)]
    for g in range(side):
        assignment[g][g] = plan.main[g]
        assignment[g][side - 1 - g] = plan.back[g]
    rest = iter(sorted(set(range(blocks)) - set(plan.main) - set(plan.back)))
    for bi in range(side):
        for bj in range(side):
            if assignment[bi][bj] < 0:
                assignment[bi][bj] = next(rest)
    grid = BlockGrid(side, side, tuple(tuple(r) for r in assignment))
    rect = _tile(grid, lambda p: lemma_block(p, blocks))
    return RectangleSet(n * n // 2, (rect,))


def ms_block(p: int, variant: str, l: int) -> Rectangle:
    """2x2 block of the orderable magic-square family over D_l, l = 8k^2.

    low  (p in [0, l/4)):   r^(2p-1)*s  r^(-2p)     high is the same pair
                            r^(2p-1)    r^(2p)*s    of rows swapped, used
    high (p in [l/4, l/2)): r^(2p-1)    r^(2p)*s    for the second half of
                            r^(2p-1)*s  r^(-2p)     the indices.

    Both variants have column product s (in the appropriate reading) and
    diagonal products {r, r^-1}, swapped between the variants, so stacking
    equal counts of each cancels the diagonals.
    """
    if l % 4:
        raise ValueError(f"ambient modulus must be divisible by 4, got {l}")
    if variant == "low":
        if not 0 <= p < l // 4:
            raise ValueError(f"low block index {p} out of range [0, {l // 4})")
        return Rectangle((
            (dihedral.reflection(2 * p - 1, l), dihedral.rotation(-2 * p, l)),
            (dihedral.rotation(2 * p - 1, l), dihedral.reflection(2 * p, l)),
        ))
    if variant == "high":
        if not l // 4 <= p < l // 2:
            raise ValueError(f"high block index {p} out of range "
                             f"[{l // 4}, {l // 2})")
        return Rectangle((
            (dihedral.rotation(2 * p - 1, l), dihedral.reflection(2 * p, l)),
            (dihedral.reflection(2 * p - 1, l), dihedral.rotation(-2 * p, l)),
        ))
    raise ValueError(f"unknown block variant {variant!r}")


def ms(n: int) -> RectangleSet:
    """Magic square of side n = 4k over the dihedral group of order n^2.

    A 2k x 2k grid of blocks: the first k block rows take the low variant
    (indices 0..2k^2-1 row-major), the last k the high variant
    (2k^2..4k^2-1).  Rows and columns reach r^0 in the orderable sense;
    the fixed-order diagonals (main read bottom-up, backward top-down)
    both equal r^0.
    """
    if n < 4 or n % 4:
        raise ValueError(f"side must be >= 4 and divisible by 4, got {n}")
    k = n // 4
    modulus = 8 * k * k
    side = 2 * k
    assignment = tuple(tuple(br * side + bc for bc in range(side))
                       for br in range(side))
    grid = BlockGrid(side, side, assignment)
    half = 2 * k * k

    def block_for(p: int) -> Rectangle:
        return ms_block(p, "low" if p < half else "high", modulus)

    return RectangleSet(modulus, (_tile(grid, block_for),))
