"""Constructive builders: the fourteen-sector spiral, the periodic columns
counterexample and the triangle spiral."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactgeom import CycloNumber, Isometry
from .prototile import T_ARC, T_MIRROR, T_ORDER, versatile_T
from .tiling import Placement, TilingState

# sectors whose first row has three tiles instead of the single leading tile
B_SECTORS = (8, 10, 12)
SECTORS = 14


@dataclass(frozen=True)
class SectorSpec:
    kind: str          # "A": rows 1, 3, 5, ...   "B": rows 3, 5, 7, ...
    rotation: int      # sector direction, in units of pi/7
    rows: int

    def row_sizes(self) -> list[int]:
        first = 1 if self.kind == "A" else 3
        return [first + 2 * i for i in range(self.rows)]

    def tile_count(self) -> int:
        return sum(self.row_sizes())


def sector_specs(rows: int) -> list[SectorSpec]:
    return [SectorSpec("B" if s in B_SECTORS else "A", s, rows) for s in range(SECTORS)]


def spiral_tile_count(rows: int) -> int:
    return sum(s.tile_count() for s in sector_specs(rows))


@lru_cache(maxsize=None)
def t_mirror() -> Isometry:
    """The reflection symmetry of the undecorated tile T."""
    T = versatile_T()
    v = T.vertices
    for k in range(T_ORDER):
        cand = Isometry(k, True, v[T_MIRROR[0]] - v[0].conj().rotate(k))
        if all(cand.apply(v[i]) == v[T_MIRROR[i]] for i in range(7)):
            return cand
    raise AssertionError("tile T lost its mirror symmetry")


def _z(k: int) -> CycloNumber:
    return CycloNumber.zeta(k, T_ORDER)


def _spiral_geometry(rows: int) -> list[tuple[Isometry, int, int]]:
    """Undecorated spiral tiles as (isometry, sector, row) in sector order.

    Sector s advances along u_s = zeta^s (zeta B - B), the base edge of the
    leading tile.  A row of length 2m+1 holds m+1 upward copies of the sector
    tile translated along u_s and m downward copies, each the sector tile
    rotated by -pi/7 and shifted one step further along u_s.
    """
    T = versatile_T()
    B = T.vertices[3]
    zero = CycloNumber.zero(T_ORDER)
    out = []
    p = zero
    for r in range(rows):
        for s in range(SECTORS):
            m = r + (1 if s in B_SECTORS else 0)
            u = (B.rotate(1) - B).rotate(s)
            for a in range(m + 1):
                out.append((Isometry(s, False, p + u.scale(a)), s, r))
            for a in range(m):
                out.append((Isometry(s - 1, False, p + u.scale(a + 1)), s, r))
            p = p + u.scale(m)
    return out


def _arc_points(iso: Isometry, flipped: bool) -> tuple[CycloNumber, CycloNumber]:
    T = versatile_T()
    a, b = T_ARC
    g = iso @ t_mirror() if flipped else iso
    return g.apply(T.vertices[a]), g.apply(T.vertices[b])


def chain_order(isos: list[Isometry]) -> list[tuple[int, bool]] | None:
    """Order the undecorated tiles along a single marked-arc chain.

    Starting from tile 0 unflipped, each step takes the unique unused tile
    that has an arc endpoint (in one of its two decorations) at the current
    chain end.  Returns (tile, flipped) pairs, or None if no chain covering
    every tile exists from either end of tile 0.
    """
    ends = {}
    for i, g in enumerate(isos):
        for f in (False, True):
            pa, pb = _arc_points(g, f)
            ends.setdefault(pa, []).append((i, f, pb))
            ends.setdefault(pb, []).append((i, f, pa))
    n = len(isos)
    for flip0 in (False, True):
        pa, pb = _arc_points(isos[0], flip0)
        for start_end in (pb, pa):
            # depth-first with explicit stack; branching only occurs where
            # both decorations of a tile share the chain end
            order = [(0, flip0)]
            used = {0}
            stack = [(start_end, iter(ends.get(start_end, ())))]
            while stack:
                if len(order) == n:
                    return order
                cur, it = stack[-1]
                for i, f, o in it:
                    if i not in used:
                        used.add(i)
                        order.append((i, f))
                        stack.append((o, iter(ends.get(o, ()))))
                        break
                else:
                    stack.pop()
                    if stack:
                        i, _ = order.pop()
                        used.discard(i)
            if len(order) == n:
                return order
    return None


def spiral(rows: int) -> TilingState:
    """The one-armed spiral of tile T with `rows` rows in every sector.

    Tiles are placed in the order of the marked-arc chain, starting at the
    centre, so replaying the sequence obeys rule R1.
    """
    if rows < 1:
        raise ValueError("rows must be >= 1")
    geo = _spiral_geometry(rows)
    isos = [g for g, _, _ in geo]
    order = chain_order(isos)
    if order is None:
        raise AssertionError("spiral geometry does not carry a single arc chain")
    state = TilingState(T_ORDER)
    for i, f in order:
        iso = isos[i] @ t_mirror() if f else isos[i]
        state.place(Placement("T", iso))
    return state


def spiral_sectors(rows: int) -> dict:
    """Placement keys of each sector's tiles, keyed by (sector, row)."""
    out = {}
    for g, s, r in _spiral_geometry(rows):
        out.setdefault((s, r), []).append(g)
    return out


# periodic columns -----------------------------------------------------------

def _strip(m: int, start: CycloNumber) -> list[Isometry]:
    """One straight row of 2m+1 tiles along the base direction of T."""
    B = versatile_T().vertices[3]
    u = B.rotate(1) - B
    ups = [Isometry(0, False, start + u.scale(a)) for a in range(m + 1)]
    downs = [Isometry(-1, False, start + u.scale(a + 1)) for a in range(m)]
    return ups + downs


def periodic_columns(cols: int, rows: int) -> TilingState:
    """Straight rows of T stacked by the leg vector, each with its own arc chain.

    Every column is a translate of the first one, so the patch has two
    independent periods; the arcs of different columns never meet.
    Placements are listed column by column in chain order.
    """
    if cols < 2 or rows < 2:
        raise ValueError("cols and rows must be >= 2")
    B = versatile_T().vertices[3]
    base = _strip(rows, CycloNumber.zero(T_ORDER))
    order = chain_order(base)
    if order is None:
        raise AssertionError("row of T does not carry an arc chain")
    state = TilingState(T_ORDER)
    for c in range(cols):
        shift = Isometry(0, False, B.scale(c))
        for i, f in order:
            iso = shift @ (base[i] @ t_mirror() if f else base[i])
            state.place(Placement("T", iso))
    return state


# triangle spiral ----------------------------------------------------------------

TRI_CENTRE_FAN = 13        # apexes meeting at the centre; two base angles close it
TRI_LOOKAHEAD_DEPTH = 10
TRI_LOOKAHEAD_RADIUS = 2.2


def _arc_ends(tile):
    c = tile.curves[0]
    return c[0], c[-1]


def triangle_spiral(n: int) -> TilingState:
    """Greedy R1 growth of the pi/12 triangle around a fixed centre.

    The centre is a fan of TRI_CENTRE_FAN apexes closed by the first two
    tiles with a base vertex there.  After that the arc chain is extended at
    one of its two loose ends; among the tiles that continue it, the one
    sharing the most edges with the patch is taken (ties: nearer to the
    centre, then smaller real part of the centroid), provided every open
    vertex within TRI_LOOKAHEAD_RADIUS of it can still be filled by a
    further TRI_LOOKAHEAD_DEPTH tiles.
    """
    from .prover import _Counter, candidate_tiles, consistent
    from .prototile import TRI_ORDER
    from .rules import validate_r1

    if n < 1:
        raise ValueError("n must be >= 1")
    zero = CycloNumber.zero(TRI_ORDER)
    state = TilingState(TRI_ORDER)
    for k in range(min(n, TRI_CENTRE_FAN)):
        state.place(Placement("triangle", Isometry(k, False, zero)))
    if len(state) < n:
        _close_centre(state, zero, validate_r1, candidate_tiles)
    while len(state) > n:
        state.undo()

    deg: dict = {}
    for t in state.tiles:
        for e in _arc_ends(t):
            deg[e] = deg.get(e, 0) + 1

    while len(state) < n:
        cands = []
        seen = set()
        for e, d in deg.items():
            if d != 1:
                continue
            for q in _leg_through(state, e):
                for c in candidate_tiles(state, q, "triangle"):
                    key = frozenset(c.vertices)
                    if key in seen or e not in _arc_ends(c):
                        continue
                    seen.add(key)
                    if validate_r1(state, c.placement).accepted:
                        cands.append(c)
        ranked = sorted(cands, key=lambda c: _hug_key(state, c))
        for c in ranked:
            state.place_tile(c)
            if consistent(state, c.centroid, TRI_LOOKAHEAD_RADIUS, TRI_LOOKAHEAD_DEPTH,
                          _Counter(10 ** 6), "triangle"):
                break
            state.undo()
        else:
            raise AssertionError(f"triangle spiral stuck at {len(state)} tiles")
        for e in _arc_ends(state.tiles[-1]):
            deg[e] = deg.get(e, 0) + 1
    return state


def _close_centre(state, zero, validate_r1, candidate_tiles):
    from .rules import replay_r1
    for c1 in candidate_tiles(state, zero, "triangle"):
        state.place_tile(c1)
        for c2 in candidate_tiles(state, zero, "triangle"):
            state.place_tile(c2)
            if state.gap_units(zero) == 0 and all(v.accepted for v in replay_r1(state.placements)):
                return
            state.undo()
        state.undo()
    raise AssertionError("no R1 closure of the triangle centre")


def _leg_through(state, e):
    """Endpoints of the patch edge whose midpoint is e."""
    for i in state.tiles_at(e):
        v = state.tiles[i].vertices
        for j in range(len(v)):
            a, b = v[j], v[(j + 1) % len(v)]
            if a + b == e.scale(2):
                return (a, b)
    return ()


def _hug_key(state, c):
    state.place_tile(c)
    try:
        shared = len(state.contacts(len(state) - 1)[0])
    finally:
        state.undo()
    z = c.centroid
    return (-shared, round(abs(z), 9), round(z.real, 9))
