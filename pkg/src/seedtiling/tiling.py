"""Growing patches of placed prototiles.

A TilingState is append-only with an undo stack.  Placement checks for
interior overlap exactly; a coarse float grid keyed on tile centroids only
narrows the candidates.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exactgeom import (
    CycloNumber,
    IntersectionKind,
    Isometry,
    OrderMismatch,
    SimplePolygon,
    _locate,
    _seg_kind,
    compare_real,
    decode,
    encode,
    in_segment_interior,
    polygons_overlap,
)
from .prototile import Prototile, get_prototile

JSON_VERSION = 1


class Overlap(ValueError):
    def __init__(self, existing_id: int):
        super().__init__(f"placement overlaps tile {existing_id}")
        self.existing_id = existing_id


@dataclass(frozen=True)
class Placement:
    prototile_id: str
    iso: Isometry
    sequence_index: int = -1

    def key(self) -> tuple:
        return (self.prototile_id,) + self.iso.key()


class PlacedTile:
    """Exact geometry of one placement, in counterclockwise order.

    Directions and angles are also kept as integers in units of pi/order,
    which is what the vertex bookkeeping runs on.
    """

    __slots__ = ("index", "placement", "proto", "polygon", "angles", "proto_index",
                 "connectors", "curves", "junctions", "centroid", "radius",
                 "edge_dirs", "angle_units", "fpts")

    def __init__(self, index: int, placement: Placement, proto: Prototile):
        iso = placement.iso
        self.index = index
        self.placement = placement
        self.proto = proto
        pts = [iso.apply(v) for v in proto.vertices]
        n = len(pts)
        idx = list(range(n))
        full = 2 * proto.order
        if iso.reflect:
            pts.reverse()
            idx.reverse()
            # placed edge j reverses the mirrored prototile edge n-2-j
            pd = proto.edge_dirs
            self.edge_dirs = tuple((proto.order - pd[(n - 2 - j) % n] + 2 * iso.rot) % full
                                   for j in range(n))
        else:
            self.edge_dirs = tuple((d + 2 * iso.rot) % full for d in proto.edge_dirs)
        self.polygon = SimplePolygon(pts, check=False)
        self.proto_index = tuple(idx)
        self.angles = tuple(proto.angles[i] for i in idx)
        self.angle_units = tuple(proto.angle_units[i] for i in idx)
        dec = proto.decoration
        self.connectors = tuple((iso.apply(c.position), c.kind, c.label) for c in dec.connectors)
        self.curves = tuple(tuple(iso.apply(p) for p in curve) for curve in dec.curves)
        self.junctions = tuple(iso.apply(p) for p in dec.junctions)
        fl = [p.approx for p in pts]
        self.fpts = fl
        self.centroid = sum(fl) / len(fl)
        self.radius = max(abs(f - self.centroid) for f in fl)

    @property
    def vertices(self):
        return self.polygon.vertices

    def vertex_of(self, proto_vertex: int) -> CycloNumber:
        return self.placement.iso.apply(self.proto.vertices[proto_vertex])

    def angle_at(self, p: CycloNumber) -> Fraction:
        kind, i = _locate(p, self.polygon)
        if kind == "vertex":
            return self.angles[i]
        if kind == "edge":
            return Fraction(1)
        return Fraction(0)


@dataclass(frozen=True)
class Incidence:
    """A tile touching a point: at its vertex j, or inside its edge j.

    start and size give the tile's interior wedge at the point, ccw, in
    units of pi/order.
    """
    tile: int
    kind: str      # "vertex" or "edge"
    j: int
    start: int
    size: int


def _near_segment(p: complex, a: complex, b: complex, tol: float = 1e-7) -> bool:
    d = b - a
    L2 = d.real * d.real + d.imag * d.imag
    t = ((p - a).real * d.real + (p - a).imag * d.imag) / L2
    if t < -tol or t > 1 + tol:
        return False
    q = a + t * d
    return abs(p - q) < tol


class TilingState:
    def __init__(self, order: int):
        self.order = order
        self.full = 2 * order          # a full turn in units of pi/order
        self.tiles: list[PlacedTile] = []
        self._cells: dict[tuple[int, int], list[int]] = {}
        self._cell = None
        self._incid: dict[CycloNumber, list[Incidence]] = {}
        self._cover: dict[CycloNumber, int] = {}
        self._open: dict[CycloNumber, None] = {}     # points with a positive gap
        self._keys: dict[tuple, int] = {}
        self._log: list[list] = []
        self.undo_stack: list[int] = []

    # basics -------------------------------------------------------------
    def __len__(self):
        return len(self.tiles)

    @property
    def placements(self) -> list[Placement]:
        return [t.placement for t in self.tiles]

    def placement_set(self) -> set:
        return {t.placement.key() for t in self.tiles}

    def polygon_set(self) -> set:
        """Tiles as vertex sets; placements differing by a tile symmetry agree."""
        return {frozenset(t.vertices) for t in self.tiles}

    def copy(self) -> "TilingState":
        out = TilingState(self.order)
        for t in self.tiles:
            out.place(t.placement, check=False)
        return out

    def _cell_of(self, c: complex) -> tuple[int, int]:
        return (math.floor(c.real / self._cell), math.floor(c.imag / self._cell))

    def nearby(self, c: complex, reach: float = 0.0) -> list[int]:
        """Ids of tiles that may lie within `reach` of the float point c."""
        if self._cell is None:
            return []
        cx, cy = self._cell_of(c)
        rng = 1 + int(reach // self._cell)
        out = []
        cells = self._cells
        for dx in range(-rng, rng + 1):
            for dy in range(-rng, rng + 1):
                lst = cells.get((cx + dx, cy + dy))
                if lst:
                    out.extend(lst)
        return out

    def tiles_at(self, p: CycloNumber) -> list[int]:
        """Tiles whose closed boundary contains p."""
        inc = self._incid.get(p)
        if inc is not None:
            return sorted({e.tile for e in inc})
        out = []
        for i in self.nearby(p.approx):
            t = self.tiles[i]
            if abs(p.approx - t.centroid) > t.radius + 1e-9:
                continue
            if _locate(p, t.polygon)[0] in ("vertex", "edge"):
                out.append(i)
        return out

    # placement -----------------------------------------------------------
    def make_tile(self, placement: Placement) -> PlacedTile:
        if placement.iso.order != self.order:
            raise OrderMismatch("placement order differs from the tiling family")
        proto = get_prototile(placement.prototile_id)
        if proto.order != self.order:
            raise OrderMismatch("prototile order differs from the tiling family")
        return PlacedTile(len(self.tiles), placement, proto)

    def conflicts(self, tile: PlacedTile, first_only: bool = True) -> list[int]:
        """Existing tiles whose interiors meet the candidate's interior."""
        hits = []
        if self._cell is None:
            return hits
        key = tile.placement.key()
        if key in self._keys:
            return [self._keys[key]]
        for i in self.nearby(tile.centroid):
            other = self.tiles[i]
            if abs(other.centroid - tile.centroid) > other.radius + tile.radius + 1e-9:
                continue
            if polygons_overlap(tile.polygon, other.polygon):
                hits.append(i)
                if first_only:
                    break
        return hits

    def fits(self, placement: Placement) -> bool:
        return not self.conflicts(self.make_tile(placement))

    def place(self, placement: Placement, check: bool = True) -> PlacedTile:
        tile = self.make_tile(placement)
        if check:
            bad = self.conflicts(tile)
            if bad:
                raise Overlap(bad[0])
        return self._commit(tile)

    def place_tile(self, tile: PlacedTile) -> PlacedTile:
        """Commit a tile built by make_tile whose overlap check already passed."""
        tile.index = len(self.tiles)
        return self._commit(tile)

    def _touch(self, p, entry, log):
        lst = self._incid.get(p)
        if lst is None:
            lst = self._incid[p] = []
            self._cover[p] = 0
            log.append((p, None))
        lst.append(entry)
        self._cover[p] += entry.size
        log.append((p, entry))
        if self._cover[p] < self.full:
            self._open[p] = None
        else:
            self._open.pop(p, None)

    def _commit(self, tile: PlacedTile) -> PlacedTile:
        idx = len(self.tiles)
        p = tile.placement
        if p.sequence_index != idx:
            p = Placement(p.prototile_id, p.iso, idx)
            tile.placement = p
        if self._cell is None:
            self._cell = max(2.0 * tile.proto.radius, 1.0)
        near = [self.tiles[i] for i in self.nearby(tile.centroid)
                if abs(self.tiles[i].centroid - tile.centroid)
                <= self.tiles[i].radius + tile.radius + 1e-9]
        self.tiles.append(tile)
        self._cells.setdefault(self._cell_of(tile.centroid), []).append(idx)
        log = []
        order = self.order
        verts = tile.vertices
        n = len(verts)
        for j, v in enumerate(verts):
            if v not in self._incid:
                # a fresh point may sit inside an edge of an older tile
                for o in near:
                    ov, of = o.vertices, o.fpts
                    m = len(ov)
                    for k in range(m):
                        if _near_segment(tile.fpts[j], of[k], of[(k + 1) % m]) and \
                                in_segment_interior(v, ov[k], ov[(k + 1) % m]):
                            self._touch(v, Incidence(o.index, "edge", k, o.edge_dirs[k], order), log)
            self._touch(v, Incidence(idx, "vertex", j, tile.edge_dirs[j], tile.angle_units[j]), log)
        own = set(verts)
        seen = set()
        for o in near:
            for w, fw in zip(o.vertices, o.fpts):
                if w in own or w in seen:
                    continue
                for k in range(n):
                    if _near_segment(fw, tile.fpts[k], tile.fpts[(k + 1) % n]) and \
                            in_segment_interior(w, verts[k], verts[(k + 1) % n]):
                        seen.add(w)
                        self._touch(w, Incidence(idx, "edge", k, tile.edge_dirs[k], order), log)
                        break
        self._log.append(log)
        self._keys[p.key()] = idx
        self.undo_stack.append(idx)
        return tile

    def undo(self) -> Placement:
        if not self.undo_stack:
            raise IndexError("nothing to undo")
        idx = self.undo_stack.pop()
        tile = self.tiles.pop()
        cell = self._cells[self._cell_of(tile.centroid)]
        cell.remove(idx)
        for p, entry in reversed(self._log.pop()):
            if entry is None:
                del self._incid[p]
                del self._cover[p]
                self._open.pop(p, None)
                continue
            self._incid[p].remove(entry)
            self._cover[p] -= entry.size
            if self._cover[p] < self.full:
                self._open[p] = None
        del self._keys[tile.placement.key()]
        return tile.placement

    def contacts(self, idx: int) -> tuple[set[int], set[int]]:
        """(edge-sharing neighbours, point-only contacts) of tile idx."""
        tile = self.tiles[idx]
        edge, point = set(), set()
        for i in self.nearby(tile.centroid):
            if i == idx:
                continue
            other = self.tiles[i]
            if abs(other.centroid - tile.centroid) > other.radius + tile.radius + 1e-9:
                continue
            rel = _contact(tile.polygon, other.polygon)
            if rel == "edge":
                edge.add(i)
            elif rel == "point":
                point.add(i)
        return edge, point

    @property
    def adjacency(self) -> dict[int, set[int]]:
        """Edge-sharing graph over all tiles (segments of positive length)."""
        return {i: self.contacts(i)[0] for i in range(len(self.tiles))}

    # local angle accounting -------------------------------------------------
    def cover_units(self, p: CycloNumber) -> int:
        """Covered angle at p in units of pi/order."""
        c = self._cover.get(p)
        if c is not None:
            return c
        total = 0
        for i in self.tiles_at(p):
            total += int(self.tiles[i].angle_at(p) * self.order)
        return total

    def angle_sum_at(self, p: CycloNumber) -> Fraction:
        return Fraction(self.cover_units(p), self.order)

    def gap_at(self, p: CycloNumber) -> Fraction:
        """Uncovered angle at p, as a multiple of pi."""
        return 2 - self.angle_sum_at(p)

    def gap_units(self, p: CycloNumber) -> int:
        return self.full - self.cover_units(p)

    def incidences(self, p: CycloNumber) -> list[Incidence]:
        return list(self._incid.get(p, ()))

    def free_arcs_at(self, p: CycloNumber) -> list[tuple[int, int]]:
        """Uncovered sectors at p as (start, size) in units of pi/order, ccw.

        start is where an existing tile's wedge ends, so a tile filling the
        sector flush against that tile begins its own wedge there.
        """
        inc = self._incid.get(p)
        if not inc:
            return []
        full = self.full
        ws = sorted(((e.start % full, e.size) for e in inc))
        arcs = []
        for i, (s, size) in enumerate(ws):
            end = s + size
            nxt, _ = ws[(i + 1) % len(ws)]
            if i + 1 == len(ws):
                nxt += full
            if nxt > end:
                arcs.append((end % full, nxt - end))
        return arcs

    def vertices(self) -> Iterable[CycloNumber]:
        return self._incid.keys()

    def vertex_incidence(self, p: CycloNumber) -> list[tuple[int, int]]:
        return [(e.tile, e.j) for e in self._incid.get(p, ()) if e.kind == "vertex"]

    def frontier(self) -> list[CycloNumber]:
        """Points of the patch with a positive uncovered angle."""
        return list(self._open)


def _contact(p: SimplePolygon, q: SimplePolygon) -> str | None:
    """'edge' if boundaries share a segment, 'point' if only points, else None."""
    touch = False
    for a, b in p.edges():
        for c, d in q.edges():
            k = _seg_kind(a, b, c, d)
            if k is IntersectionKind.collinear_overlap:
                return "edge"
            if k is IntersectionKind.endpoint_touch:
                touch = True
    return "point" if touch else None


# free boundary ------------------------------------------------------------

@dataclass
class BoundaryChain:
    vertices: list          # CycloNumbers in boundary order (tiles on the left)
    gaps: list              # uncovered angle at each vertex, as a Fraction of pi

    @property
    def interior_angles(self) -> list:
        return [2 - g for g in self.gaps]


def _split_edge(state: TilingState, a: CycloNumber, b: CycloNumber, owner: int) -> list:
    """Points of the patch lying strictly inside segment ab, sorted from a."""
    mid = (a.approx + b.approx) / 2
    reach = abs(b.approx - a.approx) / 2
    pts = []
    seen = set()
    for i in state.nearby(mid, reach):
        if i == owner:
            continue
        t = state.tiles[i]
        if abs(t.centroid - mid) > t.radius + reach + 1e-9:
            continue
        for v in t.vertices:
            if v in seen or v == a or v == b:
                continue
            if in_segment_interior(v, a, b):
                seen.add(v)
                pts.append(v)
    u = b - a

    def cmp(x, y):
        return compare_real(u.conj() * (x - a), u.conj() * (y - a))

    pts.sort(key=functools.cmp_to_key(cmp))
    return pts


def boundary_edges(state: TilingState) -> list[tuple[CycloNumber, CycloNumber]]:
    """Directed unit pieces of tile edges not cancelled by a neighbour."""
    half = {}
    for t in state.tiles:
        for a, b in t.polygon.edges():
            pts = [a] + _split_edge(state, a, b, t.index) + [b]
            for x, y in zip(pts, pts[1:]):
                half[(x, y)] = half.get((x, y), 0) + 1
    out = []
    for (x, y), n in half.items():
        if (y, x) not in half:
            out.append((x, y))
    return out


def free_boundary(state: TilingState) -> list[BoundaryChain]:
    if not state.tiles:
        raise ValueError("empty tiling has no boundary")
    edges = boundary_edges(state)
    out_of: dict[CycloNumber, list] = {}
    for x, y in edges:
        out_of.setdefault(x, []).append(y)
    used = set()
    chains = []
    for x0, y0 in edges:
        if (x0, y0) in used:
            continue
        verts = []
        x, y = x0, y0
        while (x, y) not in used:
            used.add((x, y))
            verts.append(x)
            nxt = [z for z in out_of.get(y, []) if (y, z) not in used]
            if not nxt:
                break
            x, y = y, nxt[0]
        chains.append(BoundaryChain(verts, [state.gap_at(v) for v in verts]))
    return chains


# decoration graph ---------------------------------------------------------

class DecorationGraph:
    """Connector points merged by exact equality, curves as edges."""

    def __init__(self):
        self.nodes: list[CycloNumber] = []
        self.node_kind: list[str] = []
        self.index: dict = {}
        self.edges: list[tuple[int, int, int, int]] = []   # (u, v, tile, curve)
        self.adj: dict[int, list[int]] = {}
        self.tile_edges: dict[int, list[int]] = {}
        self.open_ports: dict[int, set] = {}

    def node(self, p: CycloNumber, key=None, kind="connector") -> int:
        k = key if key is not None else p
        if k not in self.index:
            self.index[k] = len(self.nodes)
            self.nodes.append(p)
            self.node_kind.append(kind)
            self.adj[self.index[k]] = []
        return self.index[k]

    def add_edge(self, u: int, v: int, tile: int, curve: int):
        e = len(self.edges)
        self.edges.append((u, v, tile, curve))
        self.adj[u].append(e)
        self.adj[v].append(e)
        self.tile_edges.setdefault(tile, []).append(e)

    def degree(self, n: int) -> int:
        return len(self.adj[n])

    def degrees(self) -> list[int]:
        return [len(self.adj[i]) for i in range(len(self.nodes))]

    def other(self, e: int, n: int) -> int:
        u, v = self.edges[e][:2]
        return v if u == n else u

    def components(self) -> list[set[int]]:
        seen = set()
        comps = []
        for s in range(len(self.nodes)):
            if s in seen:
                continue
            stack = [s]
            comp = set()
            seen.add(s)
            while stack:
                n = stack.pop()
                comp.add(n)
                for e in self.adj[n]:
                    m = self.other(e, n)
                    if m not in seen:
                        seen.add(m)
                        stack.append(m)
            comps.append(comp)
        return comps

    def has_cycle(self) -> bool:
        comps = self.components()
        n_edges = len(self.edges)
        return n_edges > len(self.nodes) - len(comps)


def add_tile_to_graph(g: DecorationGraph, tile: PlacedTile):
    junction_nodes = {}
    for j in tile.junctions:
        junction_nodes[j] = g.node(j, key=("junction", tile.index, j), kind="junction")
    for ci, curve in enumerate(tile.curves):
        a, b = curve[0], curve[-1]
        u = junction_nodes.get(a)
        if u is None:
            u = g.node(a)
        v = junction_nodes.get(b)
        if v is None:
            v = g.node(b)
        g.add_edge(u, v, tile.index, ci)


def decoration_graph(state: TilingState) -> DecorationGraph:
    g = DecorationGraph()
    for t in state.tiles:
        add_tile_to_graph(g, t)
    return g


# persistence --------------------------------------------------------------

def to_json(state: TilingState) -> dict:
    ids = sorted({t.placement.prototile_id for t in state.tiles})
    return {
        "version": JSON_VERSION,
        "family_order": state.order,
        "prototiles": ids,
        "placements": [_placement_doc(t.placement) for t in state.tiles],
    }


def _placement_doc(p: Placement) -> dict:
    return {
        "proto": p.prototile_id,
        "rot": p.iso.rot,
        "reflect": p.iso.reflect,
        "tx": encode(p.iso.translation),
    }


class SchemaError(ValueError):
    pass


def from_json(doc: dict) -> TilingState:
    try:
        if doc["version"] != JSON_VERSION:
            raise SchemaError(f"unsupported version {doc['version']!r}")
        order = doc["family_order"]
        ids = set(doc["prototiles"])
        rows = doc["placements"]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"missing field: {exc}") from exc
    if not isinstance(order, int):
        raise SchemaError("family_order must be an integer")
    state = TilingState(order)
    for row in rows:
        try:
            pid = row["proto"]
            rot = row["rot"]
            refl = row["reflect"]
            tx = decode(row["tx"])
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"bad placement row: {exc}") from exc
        if pid not in ids:
            raise SchemaError(f"placement uses undeclared prototile {pid!r}")
        if not isinstance(rot, int) or not isinstance(refl, bool):
            raise SchemaError("rot must be an integer and reflect a boolean")
        if tx.order != order:
            raise OrderMismatch("translation order differs from family_order")
        state.place(Placement(pid, Isometry(rot, refl, tx)))
    return state
