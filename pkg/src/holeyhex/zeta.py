"""The hole-transmission map from holey to unholed half-region tilings.

Holes are consumed in pairs of opposite orientation.  For each pair a
propagation path is built through the tiling: either directly between the
two vertical hole edges (when the left hole of the pair points left), or
via two boundary-bound paths that share exactly one rhombus (when it points
right).  The leading hole is then transmitted along the ribbon of rhombi by
repeated triangle/rhombus interchanges until it sits edge-to-edge with its
partner, and the merged pair is covered by a fresh rhombus.

Cells outside the ribbons are never touched, so the map is local; whether
it is injective is checked exhaustively by verify_injection rather than
assumed.
"""

from __future__ import annotations

from typing import Iterable

from .regions import (LEFT, RIGHT, RegionSpec, TriangularRegion, build_region,
                      neighbors)
from .oracle import enumerate_tilings, serialize_tiling, tiling_is_exact_cover

DEFAULT_BUDGET = 10 ** 8


class TransmissionError(RuntimeError):
    """A propagation path did not behave as the construction requires."""


def pair_holes(right: Iterable[int], left: Iterable[int]) -> list[tuple]:
    """Order the holes into opposite-orientation pairs.

    Sort all positions; repeatedly take the first adjacent pair of
    differing orientations, remove it, and continue on what remains.  Each
    pair is ((pos1, orient1), (pos2, orient2)) with pos1 < pos2.
    """
    items = sorted([(x, RIGHT) for x in right] + [(x, LEFT) for x in left])
    if len(set(x for x, _ in items)) != len(items):
        raise ValueError("hole positions must be distinct")
    pairs = []
    while items:
        for k in range(len(items) - 1):
            if items[k][1] != items[k + 1][1]:
                pairs.append((items[k], items[k + 1]))
                del items[k:k + 2]
                break
        else:
            raise ValueError("orientations cannot be paired off")
    return pairs


def _partner_map(tiling) -> dict:
    partner = {}
    for rhombus in tiling:
        a, b = tuple(rhombus)
        partner[a] = b
        partner[b] = a
    return partner


def _vertical_edge_walk(partner, region, start_edge, goal_edge):
    """Case (i): follow the path across rhombi between two vertical edges.

    From edge (c, k) the path enters the right-pointing cell R(c, k); its
    rhombus partner is a left-pointing cell in column c+1 whose vertical
    edge is the exit.  Terminating anywhere but the goal edge breaks the
    construction and raises.
    """
    ribbon = []
    c, k = start_edge
    goal_c = goal_edge[0]
    while (c, k) != goal_edge:
        if c >= goal_c:
            raise TransmissionError("walk passed the target hole")
        cell = (c, k, RIGHT)
        if cell not in region.cells:
            raise TransmissionError("walk left the region")
        mate = partner.get(cell)
        if mate is None:
            raise TransmissionError("walk hit an uncovered cell")
        mc, mk, mo = mate
        if mo != LEFT or mc != c + 1:
            raise TransmissionError("unexpected rhombus orientation on walk")
        ribbon.append(frozenset((cell, mate)))
        c, k = mc, mk
    return ribbon


_SLANT_STEPS = {
    # direction: (orientation of the chain cells,
    #             {partner offset -> next chain cell offset})
    "se": (LEFT, {(0, 0, RIGHT): (1, -1), (-1, -1, RIGHT): (0, -2)}),
    "sw": (RIGHT, {(0, 0, LEFT): (-1, -1), (1, -1, LEFT): (0, -2)}),
    "ne": (LEFT, {(0, 0, RIGHT): (1, 1), (-1, 1, RIGHT): (0, 2)}),
    "nw": (RIGHT, {(0, 0, LEFT): (-1, 1), (1, 1, LEFT): (0, 2)}),
}


def _slant_walk(partner, region, first_cell, direction):
    """Follow a path across rhombi through parallel slanted edges.

    The chain alternates between a fixed-orientation cell and its rhombus
    partner; it ends when the next chain cell falls outside the region
    (i.e. the exit edge lies on the boundary).
    """
    orient, table = _SLANT_STEPS[direction]
    ribbon = []
    cell = first_cell
    while cell in region.cells:
        if cell[2] != orient:
            raise TransmissionError("slant walk lost its orientation")
        mate = partner.get(cell)
        if mate is None:
            raise TransmissionError("slant walk hit an uncovered cell")
        offset = (mate[0] - cell[0], mate[1] - cell[1], mate[2])
        step = table.get(offset)
        if step is None:
            raise TransmissionError("slant walk entered a rhombus backwards")
        ribbon.append(frozenset((cell, mate)))
        cell = (cell[0] + step[0], cell[1] + step[1], orient)
        if cell in region.hole_cells:
            raise TransmissionError("slant walk ran into a hole")
    return ribbon


def propagation_path(tiling, region: TriangularRegion, pair) -> list:
    """The ordered ribbon of rhombi between a pair of unit holes."""
    (pos1, orient1), (pos2, orient2) = pair
    if pos1 >= pos2 or orient1 == orient2:
        raise ValueError("pair must be two positions of differing orientation")
    partner = _partner_map(tiling)
    cell1 = region.holes_by_position[pos1]
    cell2 = region.holes_by_position[pos2]
    if cell2 in neighbors(cell1):
        return []  # contiguous holes already share an edge
    if orient1 == LEFT:
        # case (i): walk from the left-pointing hole's vertical edge
        start = (cell1[0], cell1[1])
        goal = (cell2[0], cell2[1])
        return _vertical_edge_walk(partner, region, start, goal)
    # case (ii): two boundary-bound paths meeting in exactly one rhombus.
    # In the lower region they leave through the southeast/southwest zig-zag
    # below; in the upper region the mirror routes climb over the top.
    if region.kind == "lower":
        first1 = (cell1[0] + 1, cell1[1] - 1, LEFT)
        first2 = (cell2[0] - 1, cell2[1] - 1, RIGHT)
        path1 = _slant_walk(partner, region, first1, "se")
        path2 = _slant_walk(partner, region, first2, "sw")
    else:
        first1 = (cell1[0] + 1, cell1[1] + 1, LEFT)
        first2 = (cell2[0] - 1, cell2[1] + 1, RIGHT)
        path1 = _slant_walk(partner, region, first1, "ne")
        path2 = _slant_walk(partner, region, first2, "nw")
    common = set(path1) & set(path2)
    if len(common) != 1:
        raise TransmissionError(
            f"boundary paths share {len(common)} rhombi instead of exactly one")
    turn = common.pop()
    i1 = path1.index(turn)
    i2 = path2.index(turn)
    return path1[:i1 + 1] + list(reversed(path2[:i2]))


def transmit(tiling, ribbon, hole_cell):
    """Slide a unit hole along a ribbon by triangle/rhombus interchanges.

    Returns (tiles, final_hole_cell).  Each step swaps the hole with the
    adjacent cell of the next rhombus, so only ribbon rhombi are altered.
    """
    tiles = set(tiling)
    hole = hole_cell
    for rhombus in ribbon:
        if rhombus not in tiles:
            raise TransmissionError("ribbon rhombus missing from tiling")
        a, b = tuple(rhombus)
        near = a if a[2] != hole[2] else b
        far = b if near is a else a
        if near not in neighbors(hole):
            raise TransmissionError("ribbon rhombus not adjacent to the hole")
        tiles.remove(rhombus)
        tiles.add(frozenset((hole, near)))
        hole = far
    return tiles, hole


def zeta(tiling, spec: RegionSpec, kind: str = "lower", with_ribbons: bool = False):
    """Map a tiling of the holey half region to one of the unholed region.

    Pairs are consumed in extraction order; after each transmission the two
    unit holes of the pair sit edge to edge and are covered by one new
    rhombus.
    """
    if kind == "upper" and any(r + 2 in spec.left for r in spec.right):
        raise ValueError(
            "upper-region transmission is undefined for toward-pointing holes "
            "at spacing two (the pair fuses into a hexagonal hole)")
    region = build_region(spec, kind)
    tiles = set(tiling)
    ribbons = []
    for pair in pair_holes(spec.right, spec.left):
        ribbon = propagation_path(tiles, region, pair)
        ribbons.append(ribbon)
        (pos1, _), (pos2, _) = pair
        hole = region.holes_by_position[pos1]
        other = region.holes_by_position[pos2]
        tiles, hole = transmit(tiles, ribbon, hole)
        if other not in neighbors(hole):
            raise TransmissionError("transmitted hole did not reach its partner")
        tiles.add(frozenset((hole, other)))
    image = frozenset(tiles)
    if with_ribbons:
        return image, ribbons
    return image


def upper_weight(region: TriangularRegion, tiling) -> int:
    """Weight of an upper-region tiling: 2 per crossed axis-level edge.

    A straddling column contributes a factor 2 exactly when its two h = 0
    cells are covered by slanted rhombi instead of pairing with each other.
    """
    weight = 1
    columns = sorted({c for (c, h, o) in region.cells if h == 0})
    for c in columns:
        lcell, rcell = (c, 0, LEFT), (c, 0, RIGHT)
        if lcell in region.cells and rcell in region.cells:
            if frozenset((lcell, rcell)) not in tiling:
                weight *= 2
    return weight


def verify_injection(spec: RegionSpec, kind: str = "lower",
                     budget: int = DEFAULT_BUDGET) -> dict:
    """Exhaustively map every tiling and check validity and distinctness.

    For the upper region the report also states whether the weight never
    decreases under the map.
    """
    region = build_region(spec, kind)
    target = build_region(spec.unholed(), kind)
    images = set()
    tilings = 0
    valid = True
    weight_monotone = True
    for tiling in enumerate_tilings(region, budget):
        tilings += 1
        image = zeta(tiling, spec, kind)
        if not tiling_is_exact_cover(target, image):
            valid = False
        if kind == "upper":
            if upper_weight(region, tiling) > upper_weight(target, image):
                weight_monotone = False
        images.add(tuple(map(tuple, serialize_tiling(image))))
    report = {
        "spec": spec.to_text(),
        "kind": kind,
        "tilings": tilings,
        "distinct_images": len(images),
        "valid_images": valid,
        "ok": valid and len(images) == tilings,
    }
    if kind == "upper":
        report["weight_monotone"] = weight_monotone
        report["ok"] = report["ok"] and weight_monotone
    return report
