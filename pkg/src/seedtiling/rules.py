"""Sequential matching rules R1 and R2, plus global checks of the curve of
decorations and of finite-patch translational symmetry."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .exactgeom import CycloNumber, _float_seg_dist2, _float_winding, point_in_polygon
from .prototile import OPEN_LINK
from .tiling import Placement, TilingState, decoration_graph

REASONS = ("ok", "not_connected", "creates_branch", "closes_loop", "overlap", "starves_tile")


@dataclass(frozen=True)
class RuleVerdict:
    accepted: bool
    reason: str

    def __post_init__(self):
        if self.reason not in REASONS:
            raise ValueError(f"unknown reason {self.reason!r}")
        if self.accepted != (self.reason == "ok"):
            raise ValueError("reason must be ok exactly when accepted")


OK = RuleVerdict(True, "ok")


def _reject(reason: str) -> RuleVerdict:
    return RuleVerdict(False, reason)


class _Curve:
    """Arc endpoints of an R1 patch with degrees and union-find components."""

    def __init__(self, state: TilingState):
        self.deg: Counter = Counter()
        self.parent: dict = {}
        for t in state.tiles:
            for a, b in _arcs(t):
                self.add(a, b)

    def find(self, x):
        root = x
        while self.parent.setdefault(root, root) != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def add(self, a, b):
        self.deg[a] += 1
        self.deg[b] += 1
        self.parent[self.find(a)] = self.find(b)


def _arcs(tile):
    for c in tile.curves:
        yield c[0], c[-1]


def validate_r1(state: TilingState, p: Placement) -> RuleVerdict:
    """Rule R1: the new arc must continue the curve at one of its loose ends."""
    tile = state.make_tile(p)
    if not state.tiles:
        return OK
    if state.conflicts(tile):
        return _reject("overlap")
    return _r1_verdict(_Curve(state), tile)


def _r1_verdict(curve: _Curve, tile) -> RuleVerdict:
    ends = [e for arc in _arcs(tile) for e in arc]
    degs = [curve.deg.get(e, 0) for e in ends]
    if any(d >= 2 for d in degs):
        return _reject("creates_branch")
    if not any(d == 1 for d in degs):
        return _reject("not_connected")
    touched = [curve.find(e) for e, d in zip(ends, degs) if d == 1]
    if len(touched) != len(set(touched)):
        return _reject("closes_loop")
    return OK


def replay_r1(placements) -> list[RuleVerdict]:
    """Verdicts for placing the sequence one by one; rejected tiles are
    still placed so later verdicts refer to the full prefix."""
    out = []
    state = None
    curve = None
    for p in placements:
        if state is None:
            state = TilingState(p.iso.order)
            curve = _Curve(state)
        tile = state.make_tile(p)
        if not state.tiles:
            v = OK
        elif state.conflicts(tile):
            v = _reject("overlap")
        else:
            v = _r1_verdict(curve, tile)
        out.append(v)
        if v.reason != "overlap":
            state.place_tile(tile)
            for a, b in _arcs(tile):
                curve.add(a, b)
    return out


def _links(tile):
    return [pos for pos, kind, _ in tile.connectors if kind == OPEN_LINK]


def _link_counts(state: TilingState) -> Counter:
    c = Counter()
    for t in state.tiles:
        c.update(_links(t))
    return c


def validate_r2(state: TilingState, p: Placement) -> RuleVerdict:
    """Rule R2: join an open connection, and leave every tile one open.

    The new tile is held to the same standard as the placed ones.
    """
    tile = state.make_tile(p)
    if not state.tiles:
        return OK
    if state.conflicts(tile):
        return _reject("overlap")
    return _r2_verdict(state, _link_counts(state), tile)


def _r2_verdict(state, counts: Counter, tile) -> RuleVerdict:
    mine = _links(tile)
    if any(counts.get(q, 0) >= 2 for q in mine):
        return _reject("creates_branch")
    if not any(counts.get(q, 0) == 1 for q in mine):
        return _reject("not_connected")
    after = counts.copy()
    after.update(mine)
    if all(after[q] >= 2 for q in mine):
        return _reject("starves_tile")
    hit = {q for q in mine if counts.get(q, 0) == 1}
    for t in _owners(state, hit):
        if all(after[q] >= 2 for q in _links(t)):
            return _reject("starves_tile")
    return OK


def _owners(state, points):
    seen = set()
    for q in points:
        for i in state.tiles_at(q):
            if i not in seen:
                seen.add(i)
                yield state.tiles[i]


def replay_r2(placements) -> list[RuleVerdict]:
    out = []
    state = None
    counts: Counter = Counter()
    for p in placements:
        if state is None:
            state = TilingState(p.iso.order)
        tile = state.make_tile(p)
        if not state.tiles:
            v = OK
        elif state.conflicts(tile):
            v = _reject("overlap")
        else:
            v = _r2_verdict(state, counts, tile)
        out.append(v)
        if v.reason != "overlap":
            state.place_tile(tile)
            counts.update(_links(tile))
    return out


# curve verification ---------------------------------------------------------

@dataclass
class CurveReport:
    connected: bool
    self_avoiding: bool
    covers_all_tiles: bool
    endpoints: list
    component_count: int
    dead_ends: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.connected and self.self_avoiding and self.covers_all_tiles

    def to_dict(self) -> dict:
        return {
            "connected": self.connected,
            "self_avoiding": self.self_avoiding,
            "covers_all_tiles": self.covers_all_tiles,
            "component_count": self.component_count,
            "endpoints": [_pt(q) for q in self.endpoints],
            "dead_ends": [_pt(q) for q in self.dead_ends],
        }


def _pt(q):
    if isinstance(q, CycloNumber):
        z = q.approx
        return [round(z.real, 9), round(z.imag, 9)]
    return q


def verify_curve(state: TilingState) -> CurveReport:
    """Check that the decorations join into one simple open curve.

    Patches of arc tiles are judged on the arc graph itself.  Patches of
    tree tiles are judged on the tile link graph, with unmatched connectors
    listed as dead ends and left out of the path check.
    """
    if not state.tiles:
        return CurveReport(False, True, True, [], 0)
    kinds = {k for t in state.tiles for _, k, _ in t.connectors}
    if OPEN_LINK in kinds:
        return _verify_links(state)
    g = decoration_graph(state)
    comps = g.components()
    degs = g.degrees()
    simple = max(degs, default=0) <= 2 and not g.has_cycle()
    covered = {tile for _, _, tile, _ in g.edges}
    covers = all(t.index in covered for t in state.tiles)
    ends = [g.nodes[i] for i, d in enumerate(degs) if d == 1]
    return CurveReport(len(comps) == 1, simple, covers, ends, len(comps))


def link_graph(state: TilingState):
    """Tile adjacency through coinciding connectors.

    Returns (edges, dead_ends, overfull) where a connector point shared by
    more than two tiles is reported as overfull.
    """
    at: dict = {}
    for t in state.tiles:
        for q in _links(t):
            at.setdefault(q, []).append(t.index)
    edges, dead, over = [], [], []
    for q, owners in at.items():
        if len(owners) == 1:
            dead.append(q)
        elif len(owners) == 2:
            edges.append((owners[0], owners[1], q))
        else:
            over.append(q)
    return edges, dead, over


def _verify_links(state: TilingState) -> CurveReport:
    n = len(state.tiles)
    edges, dead, over = link_graph(state)
    adj = {i: [] for i in range(n)}
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cycle = False
    for a, b, _ in edges:
        adj[a].append(b)
        adj[b].append(a)
        ra, rb = find(a), find(b)
        if ra == rb:
            cycle = True
        parent[ra] = rb
    comps = len({find(i) for i in range(n)})
    simple = not over and not cycle and all(len(v) <= 2 for v in adj.values())
    ends = [state.tiles[i].centroid for i, v in adj.items() if len(v) <= 1]
    ends = [[round(z.real, 9), round(z.imag, 9)] for z in ends]
    return CurveReport(comps == 1, simple, True, ends, comps, dead_ends=dead)


# translations -----------------------------------------------------------------

def _klass(p: Placement):
    return (p.prototile_id, p.iso.rot, p.iso.reflect)


def find_translations(state: TilingState, max_multiplier: int = 1,
                      min_support: int = 1) -> list[CycloNumber]:
    """Nonzero translations under which the patch agrees with itself.

    A vector t qualifies when every tile whose image under t lies inside
    the patch (each image vertex in the interior of the union, or on its
    outline only where tiles meet with no gap) is itself a placed tile with
    the same decorated placement, at least min_support tiles are tested
    that way, and the same holds for -t.  Candidates are differences of
    translation parts of placements with equal linear part, and their
    integer multiples up to max_multiplier patch diameters.
    """
    tiles = state.tiles
    if len(tiles) < 2:
        return []
    keys = {t.placement.key() for t in tiles}
    centre = sum(t.centroid for t in tiles) / len(tiles)
    diam = 2 * max(abs(t.centroid - centre) + t.radius for t in tiles)
    order = sorted(tiles, key=lambda t: abs(t.centroid - centre))

    classes: dict = {}
    for t in tiles:
        classes.setdefault(_klass(t.placement), []).append(t.placement.iso.translation)
    base: dict = {}
    for group in classes.values():
        for a in group:
            for b in group:
                if a != b:
                    base.setdefault(b - a, None)
    cands: dict = {}
    for d in base:
        length = abs(d.approx)
        k = 1
        while k * length <= max_multiplier * diam + 1e-9:
            cands.setdefault(d.scale(k), None)
            k += 1

    inside = _Interior(state)
    verdict: dict = {}

    def holds(tau):
        if tau in verdict:
            return verdict[tau]
        tf = tau.approx
        support = 0
        ok = True
        for t in order:
            # float pass first: an image point clearly outside ends the test
            if any(inside.rough(f + tf) is False for f in t.fpts):
                continue
            img = [v + tau for v in t.vertices]
            if not all(inside(q) for q in img):
                continue
            p = t.placement
            moved = Placement(p.prototile_id, type(p.iso)(p.iso.rot, p.iso.reflect,
                                                        p.iso.translation + tau))
            if moved.key() not in keys:
                ok = False
                break
            support += 1
        verdict[tau] = ok and support >= min_support
        return verdict[tau]

    out = [tau for tau in cands if not tau.is_zero() and holds(tau) and holds(-tau)]
    out.sort(key=lambda z: (round(abs(z.approx), 9), z.key()))
    return out


class _Interior:
    """Membership of points in the patch minus its free outline."""

    EPS = 1e-7

    def __init__(self, state: TilingState):
        self.state = state
        self.memo: dict = {}

    def rough(self, z: complex):
        """True or False when floats decide it, None when near an edge."""
        near = False
        for i in self.state.nearby(z):
            t = self.state.tiles[i]
            if abs(z - t.centroid) > t.radius + self.EPS:
                continue
            pts = t.fpts
            d = min(_float_seg_dist2(z, pts[j], pts[(j + 1) % len(pts)])
                    for j in range(len(pts)))
            if d <= self.EPS * self.EPS:
                near = True
            elif _float_winding(z, pts):
                return True
        return None if near else False

    def __call__(self, q: CycloNumber) -> bool:
        hit = self.memo.get(q)
        if hit is not None:
            return hit
        st = self.state
        if q in st._incid:
            ans = st.gap_units(q) == 0
        else:
            r = self.rough(q.approx)
            if r is not None:
                ans = r
            else:
                touching = 0
                ans = False
                for i in st.nearby(q.approx):
                    kind = point_in_polygon(q, st.tiles[i].polygon)
                    if kind == "inside":
                        ans = True
                        break
                    touching += kind == "boundary"
                ans = ans or touching >= 2
        self.memo[q] = ans
        return ans
