"""Independent brute-force oracles.

Tilings are counted two ways: a literal backtracking enumerator that
streams every tiling (pick the first uncovered cell, branch over its at
most three partners), and a memoised count that explores the identical
branch tree but shares subproblems keyed on the covered frontier.  Path
families are likewise enumerated by depth-first extension of all paths
column by column, and counted with the same transitions plus memoisation.
Nothing here touches the determinant machinery.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .regions import (RIGHT, RegionSpec, TriangularRegion, build_region,
                      neighbors, reflect_horizontal, reflect_vertical, validate)

DEFAULT_BUDGET = 10 ** 8

Tiling = frozenset  # of frozenset({cell, cell}) rhombi


class BudgetExceededError(RuntimeError):
    def __init__(self, nodes: int, partial):
        super().__init__(f"search budget exceeded after {nodes} branch nodes")
        self.nodes = nodes
        self.partial = partial


def _indexed(region: TriangularRegion):
    # slab-major order keeps the uncovered frontier inside ~one column
    def key(cell):
        c, h, o = cell
        return (2 * c + (1 if o == RIGHT else -1), h, o)

    cells = sorted(region.cells, key=key)
    index = {cell: i for i, cell in enumerate(cells)}
    partners = [
        sorted(index[nb] for nb in neighbors(cell) if nb in index)
        for cell in cells
    ]
    return cells, index, partners


def _enumerate_index_tilings(cells, partners, budget: int) -> Iterator[tuple]:
    total = len(cells)
    nodes = 0
    chosen: list[tuple[int, int]] = []

    def advance(covered: int, lo: int) -> Iterator[tuple]:
        nonlocal nodes
        while lo < total and covered >> lo & 1:
            lo += 1
        if lo == total:
            yield tuple(chosen)
            return
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(nodes, tuple(chosen))
        for j in partners[lo]:
            if covered >> j & 1:
                continue
            chosen.append((lo, j))
            yield from advance(covered | 1 << lo | 1 << j, lo + 1)
            chosen.pop()

    yield from advance(0, 0)


def enumerate_tilings(region: TriangularRegion, budget: int = DEFAULT_BUDGET) -> Iterator[Tiling]:
    """Stream every tiling of the region in a fixed canonical order."""
    cells, _, partners = _indexed(region)
    for pairs in _enumerate_index_tilings(cells, partners, budget):
        yield frozenset(frozenset((cells[i], cells[j])) for i, j in pairs)


def count_tilings(region: TriangularRegion) -> int:
    """Exact tiling count via the same branch tree with memoisation.

    States are (first uncovered cell, covered cells beyond it); with
    slab-major cell order the second component stays narrow, so hexagons
    far beyond enumeration range still count in milliseconds.
    """
    cells, _, partners = _indexed(region)
    total = len(cells)
    memo: dict = {}

    def count(covered: int, lo: int) -> int:
        while lo < total and covered >> lo & 1:
            lo += 1
        if lo == total:
            return 1
        key = (lo, covered >> lo)
        hit = memo.get(key)
        if hit is not None:
            return hit
        acc = 0
        for j in partners[lo]:
            if not covered >> j & 1:
                acc += count(covered | 1 << lo | 1 << j, lo + 1)
        memo[key] = acc
        return acc

    return count(0, 0)


def tiling_is_exact_cover(region: TriangularRegion, tiling) -> bool:
    seen = set()
    for rhombus in tiling:
        pair = tuple(rhombus)
        if len(pair) != 2 or pair[1] not in neighbors(pair[0]):
            return False
        for cell in pair:
            if cell in seen or cell not in region.cells:
                return False
            seen.add(cell)
    return len(seen) == len(region.cells)


def serialize_tiling(tiling) -> list:
    return sorted(sorted(tuple(r)) for r in tiling)


# ---------------------------------------------------------------------------
# symmetry-filtered counts

def count_symmetric(spec: RegionSpec, axis: str, budget: int = DEFAULT_BUDGET) -> int:
    """Tilings of the full holey hexagon invariant under a reflection."""
    if axis == "horizontal":
        reflect = reflect_horizontal
    elif axis == "vertical":
        if tuple(sorted(-x for x in spec.left)) != spec.right:
            raise ValueError("vertical symmetry needs R = -L")
        reflect = reflect_vertical
    else:
        raise ValueError(f"unknown axis {axis!r}")
    region = build_region(spec, "full")
    count = 0
    for tiling in enumerate_tilings(region, budget):
        if all(frozenset(reflect(cell) for cell in rhombus) in tiling for rhombus in tiling):
            count += 1
    return count


def count_free_boundary(n: int, m: int, left: Sequence[int], budget: int = DEFAULT_BUDGET) -> int:
    """Tilings of the left half hexagon against a vertical free boundary.

    Computed as the vertically symmetric tilings of the doubled region with
    R = -L, which avoids materialising protruding half rhombi.
    """
    spec = validate(n, m, left, [-x for x in left])
    return count_symmetric(spec, "vertical", budget)


# ---------------------------------------------------------------------------
# nonintersecting path families

CONSTRAINTS = ("none", "avoid_diagonal", "weighted_below")


def _family_transitions(starts, ends, constraint):
    """Shared column-sweep machinery for counting and enumeration.

    State entering column x: a tuple with, per path, the height at which it
    crossed into this column (None while unstarted and after finishing).
    Within a column each active path climbs from its entry height to an
    exit; vertex-disjointness forces the occupied intervals to be disjoint,
    which pins their order and bounds every exit by the next entry.
    """
    k = len(starts)
    if len(ends) != k:
        raise ValueError("starts and ends must pair up")
    if constraint not in CONSTRAINTS:
        raise ValueError(f"unknown constraint {constraint!r}")
    for (ax, ay), (ex, ey) in zip(starts, ends):
        if ex < ax or ey < ay:
            return None  # some path has no monotone route at all
    xmin = min(x for x, _ in starts)
    xmax = max(x for x, _ in ends)
    return k, xmin, xmax


def _column_options(x, actives, constraint):
    """Enumerate exit assignments for one column.

    ``actives``: list of (path index, entry y, end point).  Yields
    (weight, [(idx, exit, finished), ...]) for every admissible combination.
    """
    actives = sorted(actives, key=lambda item: item[1])
    for (_, y1, _), (_, y2, _) in zip(actives, actives[1:]):
        if y1 == y2:
            return  # two paths entering at one vertex

    def options(pos: int):
        if pos == len(actives):
            yield 1, []
            return
        idx, entry, (ex, ey) = actives[pos]
        cap = ey
        if pos + 1 < len(actives):
            cap = min(cap, actives[pos + 1][1] - 1)
        if constraint == "weighted_below":
            cap = min(cap, x)
        finishing = ex == x
        lo = hi = None
        if finishing:
            lo = hi = ey  # must climb exactly to its end and stop
            if ey > cap or ey < entry:
                return
        else:
            lo, hi = entry, cap
        for exit_y in range(lo, hi + 1):
            if constraint == "avoid_diagonal" and entry <= x <= exit_y:
                continue
            weight = 2 if (constraint == "weighted_below" and exit_y == x) else 1
            for rest_w, rest in options(pos + 1):
                yield weight * rest_w, [(idx, exit_y, finishing)] + rest

    yield from options(0)


def count_families(starts: Sequence, ends: Sequence, constraint: str = "none") -> int:
    """Weighted number of vertex-disjoint path families, start k to end k.

    Exhaustive column-by-column search with memoisation on the crossing
    profile; the identity assignment is the one counted.
    """
    prepared = _family_transitions(starts, ends, constraint)
    if prepared is None:
        return 0
    k, xmin, xmax = prepared
    memo: dict = {}

    def sweep(x: int, carry: tuple) -> int:
        if x > xmax:
            return 1 if all(c is None for c in carry) else 0
        key = (x, carry)
        hit = memo.get(key)
        if hit is not None:
            return hit
        actives = []
        ok = True
        for i in range(k):
            if starts[i][0] == x:
                if carry[i] is not None:
                    ok = False
                    break
                actives.append((i, starts[i][1], ends[i]))
            elif carry[i] is not None:
                actives.append((i, carry[i], ends[i]))
        total = 0
        if ok:
            for weight, moves in _column_options(x, actives, constraint):
                nxt = list(carry)
                for idx, exit_y, finished in moves:
                    nxt[idx] = None if finished else exit_y
                total += weight * sweep(x + 1, tuple(nxt))
        memo[key] = total
        return total

    return sweep(xmin, (None,) * k)


def enumerate_families(starts: Sequence, ends: Sequence, constraint: str = "none"):
    """Yield (paths, weight) for every vertex-disjoint family.

    Each path is the full tuple of lattice points it visits.  Same search
    as count_families without memoisation; intended for desk-scale checks.
    """
    prepared = _family_transitions(starts, ends, constraint)
    if prepared is None:
        return
    k, xmin, xmax = prepared

    def sweep(x: int, carry: tuple, trails: tuple):
        if x > xmax:
            if all(c is None for c in carry):
                yield trails, 1
            return
        actives = []
        for i in range(k):
            if starts[i][0] == x:
                if carry[i] is not None:
                    return
                actives.append((i, starts[i][1], ends[i]))
            elif carry[i] is not None:
                actives.append((i, carry[i], ends[i]))
        for weight, moves in _column_options(x, actives, constraint):
            nxt = list(carry)
            grown = list(trails)
            for idx, exit_y, finished in moves:
                entry = starts[idx][1] if starts[idx][0] == x else carry[idx]
                grown[idx] = grown[idx] + tuple((x, y) for y in range(entry, exit_y + 1))
                nxt[idx] = None if finished else exit_y
            for rest, w in sweep(x + 1, tuple(nxt), tuple(grown)):
                yield rest, weight * w

    yield from sweep(xmin, (None,) * k, ((),) * k)


def family_weight(paths, constraint: str) -> int:
    """Recompute a family's weight from the stored paths (post-hoc check)."""
    if constraint != "weighted_below":
        return 1
    touches = sum(1 for path in paths for (x, y) in path if x == y)
    return 2 ** touches


def noncrossing_endpoints(spec: RegionSpec, kind: str):
    """Half-region start/end lists reordered to the realizable assignment.

    When every right hole sits right of every left hole the canonical order
    already pairs start k with end k; otherwise the single non-crossing
    assignment routes some hole points to the boundary.  It is found by
    parenthesis matching along the region boundary: starts entering from
    the southwest staircase, then the diagonal points by position, then the
    northeast ends.  Returns None when no assignment exists at all (more
    right-hole ends than reachable starts), in which case the region has no
    tilings.
    """
    from .regions import lgv_points

    starts, ends = lgv_points(spec, kind)
    m = spec.m
    sequence = []  # (is_start, index into starts/ends)
    for i in range(m - 1, -1, -1):
        sequence.append((True, i))
    diagonal = [(starts[m + k][0], True, m + k) for k in range(len(spec.left))]
    diagonal += [(ends[m + k][0], False, m + k) for k in range(len(spec.right))]
    for _, is_start, idx in sorted(diagonal):
        sequence.append((is_start, idx))
    for j in range(m):
        sequence.append((False, j))
    stack = []
    assigned = {}
    for is_start, idx in sequence:
        if is_start:
            stack.append(idx)
        elif stack:
            assigned[stack.pop()] = idx
        else:
            return None
    return starts, [ends[assigned[i]] for i in range(len(starts))]
