"""Square tiles whose three-armed decorations join into a Hilbert polygon.

Geometry is on the tile grid: tile (x, y) covers [3x, 3x+3] x [3y, 3y+3].
A quadruple is an aligned 2x2 block of tiles and a cell (16-tuple) an
aligned 4x4 block, so cell corners sit on multiples of 12 length units.

The tile path is a Hilbert curve at quadruple resolution whose quadruples
are each traversed as a U.  Which U and which of the eight orientations
every tile takes is read off a table keyed by the quadruple's parity and
the two sides through which the path leaves it; the table is derived once
by a small constraint search over the local contexts of a sample region.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .exactgeom import CycloNumber, Isometry
from .prototile import SQ_ORDER, SQ_SIDE, _g, hilbert_tile
from .rules import link_graph
from .tiling import Placement, TilingState

TILES_PER_CELL = 4
CELL_UNITS = SQ_SIDE * TILES_PER_CELL
DISTANCE_CLASSES = frozenset({1, 2, 4, 5})

# sides: 0 bottom, 1 right, 2 top, 3 left
STEP = {0: (0, -1), 1: (1, 0), 2: (0, 1), 3: (-1, 0)}
SIDE_OF = {v: k for k, v in STEP.items()}
OPP = {0: 2, 1: 3, 2: 0, 3: 1}
SLOTS = ((0, 0), (1, 0), (0, 1), (1, 1))
# the 4-cycle of a quadruple, as pairs of slot indices
QUAD_EDGES = ((0, 1), (1, 3), (3, 2), (2, 0))

# (orientation of the next curve, quadrant holding the previous region)
GROWTH = ((0, 1), (1, 0), (1, 2), (0, 3))


# Hilbert curves ---------------------------------------------------------------

def _dihedral(g: int, x: int, y: int, s: int) -> tuple[int, int]:
    m = s - 1
    return [(x, y), (m - y, x), (m - x, m - y), (y, m - x),
            (m - x, y), (y, x), (x, m - y), (m - y, m - x)][g]


@lru_cache(maxsize=None)
def _curve(k: int) -> tuple:
    # order-k curve from (0, 0) to (2^k - 1, 0), built by substitution
    if k == 0:
        return ((0, 0),)
    prev = _curve(k - 1)
    s = 1 << (k - 1)
    out = [(y, x) for x, y in prev]
    out += [(x, y + s) for x, y in prev]
    out += [(x + s, y + s) for x, y in prev]
    out += [(2 * s - 1 - y, s - 1 - x) for x, y in prev]
    return tuple(out)


def hilbert_path(k: int, g: int = 0) -> list[tuple[int, int]]:
    """Cells of the order-k Hilbert curve on a 2^k grid under dihedral map g."""
    s = 1 << k
    return [_dihedral(g, x, y, s) for x, y in _curve(k)]


@lru_cache(maxsize=None)
def region_cells(level: int) -> tuple:
    """Quadruple coordinates of region `level`, in path order.

    Region 0 is the order-2 curve on quadruples (64 tiles).  Region L+1 is
    the order-(L+3) curve in the orientation listed in GROWTH, translated so
    that the quadrant listed there is region L.  Middle quadrants extend
    the path at both ends, end quadrants at one; cycling through both
    kinds pushes the boundary away from region 0 on every side.
    """
    if level < 0:
        raise ValueError("level must be non-negative")
    if level == 0:
        return tuple(hilbert_path(2))
    prev = region_cells(level - 1)
    g, q = GROWTH[(level - 1) % len(GROWTH)]
    k = level + 2
    path = hilbert_path(k, g)
    n = 1 << (2 * (k - 1))
    quad = path[q * n:(q + 1) * n]
    dx = min(x for x, _ in prev) - min(x for x, _ in quad)
    dy = min(y for _, y in prev) - min(y for _, y in quad)
    out = [(x + dx, y + dy) for x, y in path]
    part = out[q * n:(q + 1) * n]
    if part == list(prev)[::-1]:
        # keep the direction of travel of the smaller region
        out.reverse()
    elif part != list(prev):
        raise AssertionError("growth step does not contain the previous region")
    return tuple(out)


def _outer_neighbours(level: int):
    """Quadruples just before and after region `level` in the eventual path."""
    own = region_cells(level)
    inside = set(own)
    found = {}
    for up in range(level + 1, level + 8):
        big = region_cells(up)
        pos = {c: i for i, c in enumerate(big)}
        for end in (own[0], own[-1]):
            if end in found:
                continue
            i = pos[end]
            for j in (i - 1, i + 1):
                if 0 <= j < len(big) and big[j] not in inside:
                    found[end] = big[j]
        if len(found) == 2:
            return found[own[0]], found[own[-1]]
    raise AssertionError("region ends never continue")


def _side(a, b) -> int:
    return SIDE_OF[(b[0] - a[0], b[1] - a[1])]


@dataclass(frozen=True)
class QuadContext:
    cell: tuple
    key: tuple          # (x mod 2, y mod 2, side to previous, side to next)


def quadruple_contexts(level: int) -> list[QuadContext]:
    cells = region_cells(level)
    before, after = _outer_neighbours(level)
    out = []
    for i, c in enumerate(cells):
        p = cells[i - 1] if i else before
        n = cells[i + 1] if i + 1 < len(cells) else after
        out.append(QuadContext(c, (c[0] % 2, c[1] % 2, _side(c, p), _side(c, n))))
    return out


# tile orientations ------------------------------------------------------------

@lru_cache(maxsize=None)
def orientations() -> tuple:
    """The eight (rot, reflect) pairs with the connectors each puts on the
    sides of a grid square: side -> offset (1 or 2) along the x axis for
    horizontal sides, the y axis for vertical ones."""
    proto = hilbert_tile()
    out = []
    for rot in range(4):
        for reflect in (False, True):
            iso = _iso_at(rot, reflect, 0, 0)
            conns = {}
            for c in proto.decoration.connectors:
                z = iso.apply(c.position).approx
                x, y = round(z.real), round(z.imag)
                if y == 0:
                    conns[0] = x
                elif x == SQ_SIDE:
                    conns[1] = y
                elif y == SQ_SIDE:
                    conns[2] = x
                else:
                    conns[3] = y
            out.append(((rot, reflect), conns))
    return tuple(out)


def _iso_at(rot: int, reflect: bool, x: int, y: int) -> Isometry:
    lin = Isometry(rot, reflect, CycloNumber.zero(SQ_ORDER))
    imgs = [lin.apply(_g(a, b)).approx for a, b in ((0, 0), (SQ_SIDE, 0), (SQ_SIDE, SQ_SIDE), (0, SQ_SIDE))]
    mx = round(min(z.real for z in imgs))
    my = round(min(z.imag for z in imgs))
    return Isometry(rot, reflect, _g(SQ_SIDE * x - mx, SQ_SIDE * y - my))


# triangle colouring -------------------------------------------------------------

def triangle_colour(x: int, y: int, side: int) -> int:
    """Colour (0 gray, 1 white) of the half of tile (x, y) containing `side`.

    Each tile is cut by one diagonal, '/' when x + y is even; all the cuts
    lie on the lines x +- y = 2k (tile units), so together with the grid the
    halves are the faces of a line arrangement and the parity below is a
    proper two-colouring.
    """
    if (x + y) % 2 == 0:
        cx, cy = (x + 2 / 3, y + 1 / 3) if side in (0, 1) else (x + 1 / 3, y + 2 / 3)
    else:
        cx, cy = (x + 1 / 3, y + 1 / 3) if side in (0, 3) else (x + 2 / 3, y + 2 / 3)
    return (math.floor(cx) + math.floor(cy) + math.floor((cx + cy) / 2)
            + math.floor((cx - cy) / 2)) % 2


GRAY, WHITE = 0, 1


def boundary_offset(x: int, y: int, side: int, u: int):
    """Offset (0..12) along the cell side of a connector on a cell boundary,
    or None when the tile side is interior to its cell."""
    t = TILES_PER_CELL
    if side == 0 and y % t == 0 or side == 2 and y % t == t - 1:
        return (x % t) * SQ_SIDE + u
    if side == 1 and x % t == t - 1 or side == 3 and x % t == 0:
        return (y % t) * SQ_SIDE + u
    return None


def corner_distance(offset: int) -> int:
    return min(offset, CELL_UNITS - offset)


def _stub_ok(x, y, side, u) -> bool:
    off = boundary_offset(x, y, side, u)
    if off is None:
        return True
    d = corner_distance(off)
    return (d == 1) == (triangle_colour(x, y, side) == GRAY)


# decoration table ---------------------------------------------------------------

def _values(key) -> list:
    """Admissible (omitted edge, external slots, orientations) for a key,
    judged on the quadruple alone."""
    px, py, s1, s2 = key
    ors = orientations()
    vals = []
    for omit in range(4):
        a, b = QUAD_EDGES[omit]
        for ends in ((a, b), (b, a)):
            side_ok = True
            for slot, s in zip(ends, (s1, s2)):
                i, j = SLOTS[slot]
                if (s == 1 and i != 1) or (s == 3 and i != 0) or (s == 2 and j != 1) or (s == 0 and j != 0):
                    side_ok = False
            if not side_ok:
                continue
            need = [set() for _ in SLOTS]
            for e, (u, v) in enumerate(QUAD_EDGES):
                if e == omit:
                    continue
                su = _side(SLOTS[u], SLOTS[v])
                need[u].add(su)
                need[v].add(OPP[su])
            need[ends[0]].add(s1)
            need[ends[1]].add(s2)
            per = []
            for slot, (i, j) in enumerate(SLOTS):
                x, y = 2 * px + i, 2 * py + j
                opts = []
                for oi, (_, c) in enumerate(ors):
                    if not need[slot] <= set(c):
                        continue
                    if all(_stub_ok(x, y, s, u) for s, u in c.items() if s not in need[slot]):
                        opts.append(oi)
                per.append(opts)
            for combo in _product(per):
                if _internal_ok(combo, omit):
                    vals.append((omit, ends, combo))
    return vals


def _product(lists):
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for rest in _product(lists[1:]):
            yield (head,) + rest


def _internal_ok(combo, omit) -> bool:
    ors = orientations()
    for e, (u, v) in enumerate(QUAD_EDGES):
        su = _side(SLOTS[u], SLOTS[v])
        cu = ors[combo[u]][1].get(su)
        cv = ors[combo[v]][1].get(OPP[su])
        if e == omit:
            if cu is not None and cv is not None and cu == cv:
                return False
        elif cu is None or cv is None or cu != cv:
            return False
    return True


def _facing(d: int):
    # slot pairs (in q, in the neighbour) across side d of q
    if d == 1:
        return ((1, 0), (3, 2))
    if d == 2:
        return ((2, 0), (3, 1))
    raise ValueError(d)


def _pair_ok(va, vb, ka, kb, d, linked) -> bool:
    ors = orientations()
    _, ends_a, oa = va
    _, ends_b, ob = vb
    for sa, sb in _facing(d):
        ca = ors[oa[sa]][1].get(d)
        cb = ors[ob[sb]][1].get(OPP[d])
        joined = False
        if linked:
            ext_a = ends_a[(ka[2], ka[3]).index(d)]
            ext_b = ends_b[(kb[2], kb[3]).index(OPP[d])]
            joined = (ext_a == sa) or (ext_b == sb)
            if joined and not (ext_a == sa and ext_b == sb):
                return False
        if joined:
            if ca is None or cb is None or ca != cb:
                return False
        elif ca is not None and cb is not None and ca == cb:
            return False
    return True


TABLE_SAMPLE_LEVEL = 3


class TableError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def decoration_table(sample_level: int = TABLE_SAMPLE_LEVEL) -> dict:
    """Key -> (omitted edge, external slots, orientation per slot).

    Found by backtracking over the keys with forward checking, on every
    pair of edge-adjacent quadruples of the sample region.  Values are tried
    in a fixed order, so the table is deterministic.
    """
    ctxs = quadruple_contexts(sample_level)
    at = {c.cell: c for c in ctxs}
    order = {c.cell: i for i, c in enumerate(ctxs)}
    keys = sorted({c.key for c in ctxs})
    pairs = set()
    for c in ctxs:
        for d in (1, 2):
            dx, dy = STEP[d]
            n = at.get((c.cell[0] + dx, c.cell[1] + dy))
            if n is not None:
                linked = abs(order[c.cell] - order[n.cell]) == 1
                pairs.add((c.key, n.key, d, linked))
    dom = {k: _values(k) for k in keys}
    nbrs = {k: [] for k in keys}
    for ka, kb, d, linked in sorted(pairs):
        nbrs[ka].append((kb, d, linked, True))
        nbrs[kb].append((ka, d, linked, False))

    def ok(k, v, other, w, d, linked, first):
        if first:
            return _pair_ok(v, w, k, other, d, linked)
        return _pair_ok(w, v, other, k, d, linked)

    assign: dict = {}

    def consistent(k, v):
        for other, d, linked, first in nbrs[k]:
            if other == k:
                if not _pair_ok(v, v, k, k, d, linked):
                    return False
            elif other in assign and not ok(k, v, other, assign[other], d, linked, first):
                return False
        return True

    def go(live):
        if len(assign) == len(keys):
            return True
        k = min((x for x in keys if x not in assign), key=lambda x: (len(live[x]), x))
        for v in live[k]:
            if not consistent(k, v):
                continue
            assign[k] = v
            nxt = dict(live)
            dead = False
            for other, d, linked, first in nbrs[k]:
                if other in assign:
                    continue
                nxt[other] = [w for w in nxt[other] if ok(k, v, other, w, d, linked, first)]
                if not nxt[other]:
                    dead = True
                    break
            if not dead and go(nxt):
                return True
            del assign[k]
        return False

    live = {k: [v for v in dom[k] if consistent_self(k, v, nbrs)] for k in keys}
    if not go(live):
        raise TableError("no decoration table fits the sample region")
    return dict(assign)


def consistent_self(k, v, nbrs) -> bool:
    return all(_pair_ok(v, v, k, k, d, linked) for other, d, linked, _ in nbrs[k] if other == k)


# construction -------------------------------------------------------------------

def _quad_tiles(cell, value, reverse=False) -> list[Placement]:
    """Placements of one quadruple in the order the path visits them."""
    omit, ends, combo = value
    ors = orientations()
    adj = {s: [] for s in range(4)}
    for e, (u, v) in enumerate(QUAD_EDGES):
        if e != omit:
            adj[u].append(v)
            adj[v].append(u)
    walk = [ends[0]]
    while len(walk) < 4:
        walk.append(next(w for w in adj[walk[-1]] if w not in walk))
    if walk[-1] != ends[1]:
        raise AssertionError("quadruple walk does not end at its exit")
    if reverse:
        walk.reverse()
    out = []
    for slot in walk:
        i, j = SLOTS[slot]
        rot, ref = ors[combo[slot]][0]
        out.append(Placement("hilbert", _iso_at(rot, ref, 2 * cell[0] + i, 2 * cell[1] + j)))
    return out


def region_sequence(level: int) -> list[Placement]:
    """Placements of region `level` in growth order.

    Region 0 is laid in path order; each later region first continues
    forward from the old path end, then backward from the old start.
    """
    table = decoration_table()
    ctx = {c.cell: c.key for c in quadruple_contexts(level)}
    try:
        vals = {cell: table[key] for cell, key in ctx.items()}
    except KeyError as exc:
        raise TableError(f"no table entry for context {exc.args[0]}") from None
    cells = region_cells(level)
    pos = {c: i for i, c in enumerate(cells)}
    seq = []
    for c in region_cells(0):
        seq += _quad_tiles(c, vals[c])
    for lev in range(1, level + 1):
        inner = region_cells(lev - 1)
        outer = region_cells(lev)
        a = outer.index(inner[0])
        b = a + len(inner)
        for c in outer[b:]:
            seq += _quad_tiles(c, vals[c])
        for c in reversed(outer[:a]):
            seq += _quad_tiles(c, vals[c], reverse=True)
    if len(seq) != 4 * len(pos):
        raise AssertionError("growth order lost quadruples")
    return seq


def hilbert_region(level: int) -> TilingState:
    """Patch of region `level`: 64 * 4^level tiles around the origin."""
    state = TilingState(SQ_ORDER)
    for p in region_sequence(level):
        state.place(p, check=False)
    return state


QUAD_KINDS = {
    # sides through which the path enters and leaves, before rotation
    "interior": (3, 1),
    "entry_variant": (0, 1),
    "exit_variant": (3, 0),
}


def quadruple(kind: str, orientation: int = 0) -> list[Placement]:
    """The four placements of one U-section, in path order.

    The block sits at quadruple (0, 0) or a neighbour of it, whichever has
    the parity for which the table holds this entry/exit pair.
    """
    if kind not in QUAD_KINDS:
        raise ValueError(f"unknown quadruple kind {kind!r}")
    a, b = QUAD_KINDS[kind]
    r = orientation % 4
    key_sides = ((a + r) % 4, (b + r) % 4)
    table = decoration_table()
    for px, py in ((0, 0), (1, 0), (0, 1), (1, 1)):
        value = table.get((px, py) + key_sides)
        if value is not None:
            return _quad_tiles((px, py), value)
    raise ValueError(f"{kind} quadruple has no orientation {orientation}")


# verification -------------------------------------------------------------------

def tile_coords(tile) -> tuple[int, int]:
    x = min(z.real for z in tile.fpts)
    y = min(z.imag for z in tile.fpts)
    return round(x / SQ_SIDE), round(y / SQ_SIDE)


@dataclass
class DeadEnd:
    point: tuple
    tile: int
    side: int
    offset: int | None      # along the cell side; None inside a cell
    distance: int | None    # to the nearest cell corner
    colour: int | None

    @property
    def interior(self) -> bool:
        return self.offset is None


@dataclass
class HilbertReport:
    single_path: bool
    acyclic: bool
    covers_all_tiles: bool
    dead_ends_isolated: bool
    coloring_ok: bool
    cell_period_ok: bool
    distance_classes: set = field(default_factory=set)
    dead_ends: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    # unmatched connectors of the two path-end tiles facing out of the patch
    open_ends: list = field(default_factory=list)

    CLAUSES = ("single_path", "acyclic", "covers_all_tiles", "dead_ends_isolated",
               "coloring_ok", "cell_period_ok")

    @property
    def ok(self) -> bool:
        return all(getattr(self, c) for c in self.CLAUSES)

    def to_dict(self) -> dict:
        out = {c: getattr(self, c) for c in self.CLAUSES}
        out["distance_classes"] = sorted(self.distance_classes)
        out["dead_ends"] = len(self.dead_ends)
        out["interior_dead_ends"] = sum(d.interior for d in self.dead_ends)
        out["open_ends"] = len(self.open_ends)
        out["failures"] = list(self.failures)
        return out


def _connector_side(tile, q) -> tuple[int, int]:
    x, y = tile_coords(tile)
    z = q.approx
    lx, ly = round(z.real - SQ_SIDE * x), round(z.imag - SQ_SIDE * y)
    if ly == 0:
        return 0, lx
    if lx == SQ_SIDE:
        return 1, ly
    if ly == SQ_SIDE:
        return 2, lx
    return 3, ly


def link_adjacency(state: TilingState):
    edges, dead, over = link_graph(state)
    adj = {i: [] for i in range(len(state.tiles))}
    for a, b, _ in edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj, edges, dead, over


def path_order(state: TilingState) -> list[int]:
    """Tile indices along the link path, from the end with the smaller index.

    Only meaningful when the links form a single path.
    """
    adj, *_ = link_adjacency(state)
    ends = sorted(i for i, v in adj.items() if len(v) <= 1)
    if not ends:
        return []
    out = [ends[0]]
    seen = {ends[0]}
    while True:
        nxt = [j for j in adj[out[-1]] if j not in seen]
        if not nxt:
            return out
        out.append(nxt[0])
        seen.add(nxt[0])


def cell_visit_order(state: TilingState) -> list[tuple[int, int]]:
    """16-tuple cells in the order the path first enters them."""
    out = []
    for i in path_order(state):
        x, y = tile_coords(state.tiles[i])
        c = (x // TILES_PER_CELL, y // TILES_PER_CELL)
        if not out or out[-1] != c:
            out.append(c)
    return out


def verify_hilbert(state: TilingState) -> HilbertReport:
    """Check the link path, the dead ends and the colouring argument.

    Every clause is evaluated on its own.  Dead ends on a cell boundary
    are classified by their distance along the boundary to the nearest
    cell corner and by the colour of the half-tile holding them; those
    strictly inside a cell form the separate interior class.
    """
    n = len(state.tiles)
    fails = []
    if n == 0:
        return HilbertReport(False, True, False, True, True, True, failures=["empty patch"])
    adj, edges, dead, over = link_adjacency(state)

    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    acyclic = True
    for a, b, _ in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            acyclic = False
        parent[ra] = rb
    comps = len({find(i) for i in range(n)})
    degs = [len(adj[i]) for i in range(n)]
    single = comps == 1 and max(degs) <= 2 and len(edges) == n - 1
    covers = n == 1 or min(degs) >= 1
    to_owner = {}
    for t in state.tiles:
        for q, _, _ in t.connectors:
            to_owner.setdefault(q, []).append(t.index)
    busy = [i for i in range(n) if degs[i] > 2]
    isolated = not over and not busy and all(len(to_owner[q]) == 1 for q in dead)
    if over:
        fails.append(f"{len(over)} connector points shared by three or more tiles")
    if busy:
        fails.append(f"{len(busy)} tiles with all connectors linked")
    if not acyclic:
        fails.append("link graph has a cycle")
    if not single:
        fails.append(f"link graph is not one path ({comps} components)")
    if not covers:
        fails.append("some tile has no link")

    census = []
    open_ends = []
    colour_ok = True
    classes = set()
    occupied = {tile_coords(t) for t in state.tiles}
    for q in dead:
        i = to_owner[q][0]
        t = state.tiles[i]
        side, u = _connector_side(t, q)
        x, y = tile_coords(t)
        dx, dy = STEP[side]
        if degs[i] <= 1 and (x + dx, y + dy) not in occupied:
            # where the curve leaves the patch
            open_ends.append(_pt(q))
            continue
        off = boundary_offset(x, y, side, u)
        if off is None:
            census.append(DeadEnd(_pt(q), i, side, None, None, None))
            continue
        d = corner_distance(off)
        col = triangle_colour(x, y, side)
        classes.add(d)
        census.append(DeadEnd(_pt(q), i, side, off, d, col))
        if d not in DISTANCE_CLASSES:
            colour_ok = False
            fails.append(f"dead end at distance {d} from a cell corner")
        elif (d == 1) != (col == GRAY):
            colour_ok = False
            fails.append(f"distance-{d} dead end in a {'gray' if col == GRAY else 'white'} triangle")
    if not _colouring_proper(state):
        colour_ok = False
        fails.append("triangle colouring is not proper or not quarter-turn invariant")
    period_ok = _markers_periodic(state)
    if not period_ok:
        fails.append("cell corners do not repeat every 12 units")
    return HilbertReport(single, acyclic, covers, isolated, colour_ok, period_ok,
                         classes, census, fails, open_ends)


def _pt(q):
    z = q.approx
    return (round(z.real, 9), round(z.imag, 9))


def _colouring_proper(state) -> bool:
    coords = {tile_coords(t) for t in state.tiles}
    for x, y in coords:
        # the two halves of a tile, and halves across each tile side
        halves = {triangle_colour(x, y, k) for k in range(4)}
        if halves != {GRAY, WHITE}:
            return False
        for k in range(4):
            dx, dy = STEP[k]
            if triangle_colour(x, y, k) == triangle_colour(x + dx, y + dy, OPP[k]):
                return False
            # quarter turn about the origin: tile (x, y) goes to (-y-1, x)
            if triangle_colour(x, y, k) != triangle_colour(-y - 1, x, (k + 1) % 4):
                return False
    return True


def _markers_periodic(state) -> bool:
    """Corners where four tiles meet with both coordinates divisible by 12
    must form the lattice 12Z^2 restricted to the patch."""
    corners = {}
    for t in state.tiles:
        for z in t.fpts:
            key = (round(z.real), round(z.imag))
            corners[key] = corners.get(key, 0) + 1
    full = {p for p, c in corners.items() if c == 4}
    marks = {p for p in full if p[0] % CELL_UNITS == 0 and p[1] % CELL_UNITS == 0}
    if not marks:
        return len(state.tiles) < TILES_PER_CELL ** 2
    for x, y in full:
        if x % CELL_UNITS or y % CELL_UNITS:
            continue
        for dx, dy in ((CELL_UNITS, 0), (0, CELL_UNITS), (-CELL_UNITS, 0), (0, -CELL_UNITS)):
            p = (x + dx, y + dy)
            if p in full and p not in marks:
                return False
    return True
