"""Exhaustive placement enumeration for single-prototile wedge filling."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .exactgeom import AngleUnit, CycloNumber, Isometry, in_segment_interior
from .prototile import get_prototile
from .tiling import Placement, PlacedTile, TilingState

MODEL = ("each new tile has a vertex at the active point, or passes an edge "
         "through it while a vertex of the tile rests on a patch vertex; the "
         "tile's wedge at the point starts where an existing wedge ends")


class BudgetExhausted(RuntimeError):
    pass


class AmbiguousStep(RuntimeError):
    def __init__(self, point, count: int):
        super().__init__(f"{count} continuations at {point!r}")
        self.point = point
        self.count = count


def _rot_for(target: int, d: int, order: int):
    diff = (target - d) % (2 * order)
    if diff % 2:
        return None
    return diff // 2


def candidate_tiles(state: TilingState, p: CycloNumber, proto_id: str = "T",
                    arc=None, edge_contacts: bool = True) -> list[PlacedTile]:
    """Overlap-free tiles that cover the free sector at p next to an existing wedge.

    Any tile covering the directions just after the end of an existing wedge
    at p must start its own wedge exactly there, so one arc suffices and the
    list is complete relative to MODEL.
    """
    arcs = state.free_arcs_at(p)
    if not arcs:
        if p not in state._incid:
            raise ValueError("point is not on the patch")
        return []
    s, size = arc if arc is not None else arcs[0]
    proto = get_prototile(proto_id)
    order = proto.order
    pd, au = proto.edge_dirs, proto.angle_units
    V = proto.vertices
    n = len(V)
    out, seen = [], set()

    def consider(iso):
        tile = state.make_tile(Placement(proto_id, iso))
        key = frozenset(tile.vertices)
        if key in seen:
            return
        seen.add(key)
        if not state.conflicts(tile):
            out.append(tile)

    for reflect in (False, True):
        for i in range(n):
            if au[i] > size:
                continue
            # wedge start at prototile vertex i, after the isometry
            d = order - pd[(i - 1) % n] if reflect else pd[i]
            r = _rot_for(s, d, order)
            if r is None:
                continue
            lin = Isometry(r, reflect, CycloNumber.zero(order))
            consider(Isometry(r, reflect, p - lin.apply(V[i])))
    if edge_contacts and size >= order:
        reach = 2 * proto.radius + 1e-9
        pf = p.approx
        anchors = [w for w in _points_near(state, pf, reach) if w != p]
        for reflect in (False, True):
            for k in range(n):
                d = order - pd[k] if reflect else pd[k]
                r = _rot_for(s, d, order)
                if r is None:
                    continue
                lin = Isometry(r, reflect, CycloNumber.zero(order))
                # p must fall strictly inside prototile edge k after undoing lin
                a, b = V[k].approx, V[(k + 1) % n].approx
                images = [lin.apply(v) for v in V]
                for w in anchors:
                    wf = w.approx
                    for i in range(n):
                        q = _inv_float(lin, pf - wf + images[i].approx)
                        if not _inside_float(q, a, b):
                            continue
                        iso = Isometry(r, reflect, w - images[i])
                        pv = [iso.apply(v) for v in V]
                        if any(in_segment_interior(p, pv[j], pv[(j + 1) % n]) for j in range(n)):
                            consider(iso)
    return out


def _inv_float(lin: Isometry, z: complex) -> complex:
    ang = -math.pi * lin.rot / (lin.order // 2)
    z = z * complex(math.cos(ang), math.sin(ang))
    return z.conjugate() if lin.reflect else z


def _inside_float(q: complex, a: complex, b: complex, tol: float = 1e-9) -> bool:
    d = b - a
    L2 = abs(d) ** 2
    t = ((q - a) * d.conjugate()).real / L2
    if t <= tol or t >= 1 - tol:
        return False
    return abs((q - a) - t * d) < 1e-7


def _points_near(state: TilingState, c: complex, reach: float) -> list:
    out = {}
    for i in state.nearby(c, reach):
        t = state.tiles[i]
        for v, f in zip(t.vertices, t.fpts):
            if abs(f - c) <= reach:
                out[v] = None
    return list(out)


class _Counter:
    def __init__(self, budget: int):
        self.nodes = 0
        self.budget = budget

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(f"more than {self.budget} search nodes")


def _open_near(state: TilingState, focus: complex, radius: float) -> list:
    pts = [q for q in state.frontier() if abs(q.approx - focus) <= radius]
    pts.sort(key=lambda q: (state.gap_units(q), abs(q.approx - focus)))
    return pts


def consistent(state: TilingState, focus: complex, radius: float, depth: int,
               counter: _Counter, proto_id: str = "T", scan: int = 6) -> bool:
    """False only if no choice of depth further tiles keeps the open points
    within radius of focus fillable.

    The branching point is the most constrained of the `scan` open points
    with the smallest gaps; a point without candidates refutes the state.
    """
    if depth == 0:
        return True
    pts = _open_near(state, focus, radius)
    if not pts:
        return True
    best = None
    for q in pts[:scan]:
        cands = candidate_tiles(state, q, proto_id)
        if not cands:
            return False
        if best is None or len(cands) < len(best):
            best = cands
            if len(cands) == 1:
                break
    for tile in best:
        counter.tick()
        state.place_tile(tile)
        try:
            ok = consistent(state, focus, radius, depth - 1, counter, proto_id, scan)
        finally:
            state.undo()
        if ok:
            return True
    return False


def candidate_placements(state: TilingState, p: CycloNumber, proto_id: str = "T") -> list[Placement]:
    return [t.placement for t in candidate_tiles(state, p, proto_id)]


def state_symmetries(state: TilingState, fix=None) -> list[Isometry]:
    """Isometries mapping the patch onto itself (as a set of polygons).

    Anchored on tile 0: any symmetry sends it onto some tile, so trying each
    tile and each of its congruent vertex labellings is exhaustive.
    """
    if not state.tiles:
        return []
    polys = state.polygon_set()
    t0 = state.tiles[0]
    V = list(t0.vertices)
    order = state.order
    zero = CycloNumber.zero(order)
    out = []
    for t in state.tiles:
        target = frozenset(t.vertices)
        for rot in range(order):
            for ref in (False, True):
                lin = Isometry(rot, ref, zero)
                for a in t.vertices:
                    g = Isometry(rot, ref, a - lin.apply(V[0]))
                    if frozenset(g.apply(v) for v in V) != target:
                        continue
                    if fix is not None and g.apply(fix) != fix:
                        continue
                    if all(frozenset(g.apply(v) for v in u.vertices) in polys for u in state.tiles):
                        out.append(g)
    return out


@dataclass
class WedgeTask:
    state: TilingState
    p: CycloNumber
    gap: AngleUnit
    # open points within this distance of p must close as well
    region: float = 0.0
    depth: int = 16
    budget: int = 200_000
    proto_id: str = "T"

    def __post_init__(self):
        want = self.state.gap_units(self.p)
        if self.gap.order != self.state.order or self.gap.k != want or want == 0:
            raise ValueError(f"gap at p is {want} units, task says {self.gap.k}")


VERDICTS = ("unique", "impossible", "multiple", "budget_exhausted")


@dataclass
class ProofReport:
    statement: str
    completions: list
    nodes_explored: int
    verdict: str
    model: str = MODEL
    log: list = field(default_factory=list)
    seconds: float = 0.0
    # fillings of the gap at p whose surroundings could not be closed
    rejected: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)

    @property
    def tiles(self):
        return len(self.completions[0]) if len(self.completions) == 1 else None

    def to_dict(self) -> dict:
        from .tiling import _placement_doc
        return {
            "statement": self.statement,
            "verdict": self.verdict,
            "tiles": self.tiles,
            "completions": [[_placement_doc(q) for q in c] for c in self.completions],
            "nodes_explored": self.nodes_explored,
            "model": self.model,
            "log": list(self.log),
            "seconds": round(self.seconds, 3),
            "checks": dict(self.checks),
        }


def _verdict(n: int) -> str:
    return "impossible" if n == 0 else "unique" if n == 1 else "multiple"


def _open_targets(state, p, region):
    pts = []
    for q in state.frontier():
        if q == p or (region and abs(q.approx - p.approx) <= region + 1e-9):
            pts.append(q)
    return pts


def enumerate_fillings(task: WedgeTask, statement: str = "wedge") -> ProofReport:
    """All ways to close the gap at task.p that leave the region fillable.

    First every set of tiles closing the gap at p is enumerated.  A filling
    survives if the open points within task.region of p can then all be
    closed by further tiles (an existence search, so only the tiles at p
    define a completion).  Fillings related by a symmetry of the start
    patch fixing p are merged.
    """
    t0 = time.perf_counter()
    state = task.state
    base = len(state)
    counter = _Counter(task.budget)
    fills: dict = {}
    log: list = []

    def at_p(level):
        if state.gap_units(task.p) == 0:
            new = state.tiles[base:]
            key = frozenset(frozenset(t.vertices) for t in new)
            if key in fills:
                return
            ok, why = _extendable(state, task, counter)
            log.append(f"{'  ' * level}closed p with {len(new)} tiles: "
                       + ("region fillable" if ok else f"region fails ({why})"))
            fills[key] = ([t.placement for t in new], ok)
            return
        if level >= task.depth:
            raise BudgetExhausted(f"depth {task.depth} reached")
        cands = candidate_tiles(state, task.p, task.proto_id)
        gap = state.gap_units(task.p)
        if not cands:
            log.append(f"{'  ' * level}dead: gap {gap} at p has no tile")
            return
        for tile in cands:
            counter.tick()
            state.place_tile(tile)
            log.append(f"{'  ' * level}try {_describe(state, tile, task.p)} at p (gap {gap})")
            try:
                at_p(level + 1)
            finally:
                state.undo()

    try:
        at_p(0)
    except BudgetExhausted as exc:
        log.append(f"budget exhausted: {exc}")
        return ProofReport(statement, [], counter.nodes, "budget_exhausted", log=log,
                           seconds=time.perf_counter() - t0)
    good = [c for c, ok in fills.values() if ok]
    bad = [c for c, ok in fills.values() if not ok]
    comps = _merge_symmetric(state, task.p, good)
    return ProofReport(statement, comps, counter.nodes, _verdict(len(comps)), log=log,
                       seconds=time.perf_counter() - t0, rejected=bad)


def _extendable(state: TilingState, task: WedgeTask, counter: _Counter):
    """Whether every open point near p can be closed; on failure also the
    gap (in units) of the point where the search ran dry."""
    if not task.region:
        return True, None
    worst = []

    def go(level):
        pts = _open_targets(state, task.p, task.region)
        if not pts:
            return True
        if level >= task.depth:
            raise BudgetExhausted(f"depth {task.depth} reached")
        best = None
        for q in sorted(pts, key=lambda z: (state.gap_units(z), z.key())):
            cands = candidate_tiles(state, q, task.proto_id)
            if not cands:
                worst.append(state.gap_units(q))
                return False
            if best is None or len(cands) < len(best):
                best = cands
                if len(cands) == 1:
                    break
        for tile in best:
            counter.tick()
            state.place_tile(tile)
            try:
                if go(level + 1):
                    return True
            finally:
                state.undo()
        return False

    ok = go(0)
    return ok, (None if ok else (worst[-1] if worst else None))


def _fmt(q: CycloNumber) -> str:
    z = q.approx
    return f"({z.real:.4f},{z.imag:.4f})"


def _describe(state, tile, q) -> str:
    proto = get_prototile(tile.placement.prototile_id)
    for i, v in enumerate(tile.vertices):
        if v == q:
            k = tile.proto_index[i]
            return f"tile {tile.index} vertex V{k} (angle {proto.angle_units[k]})"
    return f"tile {tile.index} edge"


def _merge_symmetric(state, p, comps):
    if len(comps) < 2:
        return comps
    syms = state_symmetries(state, fix=p)
    keys = []
    out = []
    for c in comps:
        polys = {frozenset(state.make_tile(q).vertices) for q in c}
        if any(frozenset(frozenset(g.apply(v) for v in P) for P in polys) in keys for g in syms):
            continue
        keys.append(frozenset(polys))
        out.append(c)
    return out


# constellations ---------------------------------------------------------------

@dataclass(frozen=True)
class Constellation:
    """Start patch of a local statement, in the frame of a black tile.

    The black tile is T under the identity placement and p is its vertex
    `black_vertex`.  The white tile is the first candidate (in
    candidate_tiles order) that puts its own vertex `white_vertex` at the
    black vertex `white_at`; when white_at differs from black_vertex the
    white tile must also avoid p.
    """
    name: str
    black_vertex: int
    white_vertex: int
    white_at: int
    region: float
    note: str = ""

    def build(self) -> tuple[TilingState, CycloNumber]:
        proto = get_prototile("T")
        state = TilingState(proto.order)
        state.place(Placement("T", Isometry.identity(proto.order)))
        p = proto.vertices[self.black_vertex]
        q = proto.vertices[self.white_at]
        for arc in state.free_arcs_at(q):
            for c in candidate_tiles(state, q, "T", arc=arc):
                k = c.vertices.index(q) if q in c.vertices else None
                if k is None or c.proto_index[k] != self.white_vertex:
                    continue
                if q != p and p in c.vertices:
                    continue
                state.place_tile(c)
                return state, p
        raise ValueError(f"constellation {self.name} cannot be built")

    def tiles(self) -> list[list[CycloNumber]]:
        state, _ = self.build()
        return [list(t.vertices) for t in state.tiles]


FIXTURES = {
    "lemma2": Constellation("lemma2", 1, 1, 1, 1.5,
                            "convex vertex V1 of both tiles at p; the tiles share the edge "
                            "V1V2 of the black one and leave 4pi/7 open"),
    "lemma3_a": Constellation("lemma3_a", 4, 6, 4, 1.5,
                              "black tip V4 and white concave vertex V6 at p, gap 4pi/7"),
    "lemma3_b": Constellation("lemma3_b", 5, 4, 1, 1.5,
                              "black concave vertex V5 at p and the white tip V4 on the black "
                              "vertex V1, clear of p; gap 5pi/7"),
    "lemma3_c": Constellation("lemma3_c", 0, 3, 0, 1.5,
                              "black tip V0 and white convex vertex V3 at p, gap 8pi/7"),
    "lemma3_d": Constellation("lemma3_d", 3, 1, 3, 1.5,
                              "black convex vertex V3 and white convex vertex V1 at p, gap 4pi/7"),
}

# constellations a filling of a later case may reduce to
REDUCES_TO = {
    "lemma3_a": (),
    "lemma3_b": ("lemma3_a",),
    "lemma3_c": ("lemma3_a", "lemma3_b"),
    "lemma3_d": ("lemma3_a", "lemma3_b", "lemma3_c"),
    "prop2_edge_e": ("lemma3_a", "lemma3_b", "lemma3_c", "lemma3_d"),
}


def find_constellation(state: TilingState, fixture: Constellation) -> list[CycloNumber]:
    """Open points q of the patch around which a congruent copy of the
    fixture sits, with q in the role of p."""
    polys = state.polygon_set()
    ref = fixture.tiles()
    base = ref[0]
    _, p0 = fixture.build()
    order = state.order
    zero = CycloNumber.zero(order)
    hits = []
    for t in state.tiles:
        target = frozenset(t.vertices)
        for rot in range(order):
            for ref_ in (False, True):
                lin = Isometry(rot, ref_, zero)
                for a in t.vertices:
                    g = Isometry(rot, ref_, a - lin.apply(base[0]))
                    if g.apply(base[1]) not in target:
                        continue
                    if frozenset(g.apply(v) for v in base) != target:
                        continue
                    if all(frozenset(g.apply(v) for v in poly) in polys for poly in ref[1:]):
                        q = g.apply(p0)
                        if state.gap_units(q) > 0 and q not in hits:
                            hits.append(q)
    return hits


# the central patch and forced growth -------------------------------------------

SEED_ROTATIONS = (0, 5, 10)
CENTRE = CycloNumber.zero(14)


def seed_three() -> TilingState:
    """Three copies of T with their tips V0 at the origin, leaving gaps of
    8, 8 and 6 units between them."""
    state = TilingState(14)
    for k in SEED_ROTATIONS:
        state.place(Placement("T", Isometry(k, False, CENTRE)))
    return state


def _tip_rotations(state: TilingState) -> set[int]:
    rots = set()
    for t in state.tiles:
        iso = t.placement.iso
        if t.placement.prototile_id != "T" or iso.reflect or not iso.translation.is_zero():
            raise ValueError("state is not a set of T tips at the origin")
        rots.add(iso.rot % iso.order)
    return rots


def fill_to_patch_P(state: TilingState) -> TilingState:
    """Close the gaps at the common tip vertex with further tips, giving
    the 14-tile patch P.  The input is left untouched."""
    if not state.tiles:
        raise ValueError("fill_to_patch_P needs a non-empty tip seed")
    have = _tip_rotations(state)
    out = TilingState(state.order)
    for t in state.tiles:
        out.place(t.placement)
    for k in range(get_prototile("T").order):
        if k not in have:
            out.place(Placement("T", Isometry(k, False, CENTRE)))
    assert len(out) == 14 and out.gap_units(CENTRE) == 0
    return out


def patch_P() -> TilingState:
    return fill_to_patch_P(seed_three())


def _growth_key(q: CycloNumber, centre: complex):
    z = q.approx - centre
    ang = math.atan2(z.imag, z.real) % (2 * math.pi)
    return (round(abs(z), 9), round(ang, 9), q.key())


def next_point(state: TilingState, centre: complex = 0j) -> CycloNumber:
    """Open boundary point nearest the centre, ties broken by polar angle."""
    return min(state.frontier(), key=lambda q: _growth_key(q, centre))


def grow_forced(state: TilingState, n: int, region: float = 1.5,
                budget: int = 200_000) -> TilingState:
    """Add forced tiles until the patch has n of them.

    At each step the innermost open point must have exactly one filling
    that leaves its neighbourhood closable; otherwise AmbiguousStep is
    raised carrying that point and the number of survivors.
    """
    out = TilingState(state.order)
    for t in state.tiles:
        out.place(t.placement)
    while len(out) < n:
        p = next_point(out)
        task = WedgeTask(out, p, AngleUnit(out.gap_units(p), out.order),
                         region=region, budget=budget)
        rep = enumerate_fillings(task, "grow")
        if rep.verdict != "unique":
            raise AmbiguousStep(p, len(rep.completions))
        for q in rep.completions[0]:
            out.place(q)
    return out


# machine checks ---------------------------------------------------------------

STATEMENTS = ("lemma2", "lemma3_a", "lemma3_b", "lemma3_c", "lemma3_d", "prop2_edge_e")
EXPECTED = {
    "lemma2": ("unique", 4),
    "lemma3_a": ("impossible", None),
    "lemma3_b": ("impossible", None),
    "lemma3_c": ("impossible", None),
    "lemma3_d": ("impossible", None),
    "prop2_edge_e": ("unique", None),
}


def statement_start(statement: str) -> tuple[TilingState, CycloNumber]:
    if statement == "prop2_edge_e":
        # V4 of the tip at rotation 0 is V3 of the next one
        return patch_P(), get_prototile("T").vertices[4]
    if statement not in FIXTURES:
        raise ValueError(f"unknown statement {statement!r}; choose from {STATEMENTS}")
    return FIXTURES[statement].build()


def machine_check(statement: str, region: float | None = None,
                  budget: int = 200_000) -> ProofReport:
    """Decide a local statement by enumeration and cross-check it.

    The verdict is that of the direct enumeration.  For lemma2 the second
    route repeats the enumeration from each proper prefix of the forced
    filling.  For the others it lists the fillings of the gap at p without
    any region search and looks in each for a copy of an earlier refuted
    constellation.
    """
    state, p = statement_start(statement)
    if region is None:
        region = FIXTURES[statement].region if statement in FIXTURES else 1.5
    task = WedgeTask(state, p, AngleUnit(state.gap_units(p), state.order),
                     region=region, budget=budget)
    rep = enumerate_fillings(task, statement)
    if rep.verdict == "budget_exhausted":
        return rep
    t0 = time.perf_counter()
    if statement == "lemma2":
        rep.checks = _prefix_route(state, p, rep, region, budget)
    else:
        rep.checks = _reduction_route(state, p, statement, task, rep)
    rep.seconds += time.perf_counter() - t0
    return rep


def _prefix_route(state, p, rep, region, budget) -> dict:
    if rep.verdict != "unique":
        return {"routes_agree": False}
    # completions list their tiles in the order they were laid around p
    fill = list(rep.completions[0])
    out = []
    for k in range(1, len(fill)):
        for q in fill[:k]:
            state.place(q)
        try:
            gap = state.gap_units(p)
            sub = enumerate_fillings(WedgeTask(state, p, AngleUnit(gap, state.order),
                                               region=region, budget=budget))
            same = (sub.verdict == "unique" and
                    {frozenset(state.make_tile(q).vertices) for q in sub.completions[0]}
                    == {frozenset(state.make_tile(q).vertices) for q in fill[k:]})
        finally:
            for _ in range(k):
                state.undo()
        rep.log.append(f"prefix of {k} tiles: gap {gap} -> {sub.verdict} "
                       f"with {sub.tiles} tiles" + ("" if same else " (differs)"))
        out.append({"placed": k, "gap": gap, "verdict": sub.verdict,
                    "tiles": sub.tiles, "matches": same})
    return {"routes_agree": all(a["matches"] for a in out), "prefixes": out}


def _reduction_route(state, p, statement, task, rep) -> dict:
    earlier = REDUCES_TO[statement]
    raw = enumerate_fillings(WedgeTask(state, p, task.gap, region=0.0, budget=task.budget),
                             statement)
    fills = raw.completions if raw.verdict != "impossible" else []
    # completions of the raw run are merged by symmetry, which is harmless here
    reduced, direct = 0, 0
    survivors = {frozenset(frozenset(state.make_tile(q).vertices) for q in c)
                 for c in rep.completions}
    rows = []
    for i, c in enumerate(fills):
        for q in c:
            state.place(q)
        try:
            found = {name: find_constellation(state, FIXTURES[name]) for name in earlier}
            key = frozenset(frozenset(t.vertices) for t in state.tiles[len(state) - len(c):])
        finally:
            for _ in c:
                state.undo()
        names = [n for n, hits in found.items() if hits]
        if names:
            reduced += 1
            where = "; ".join(f"{n} at {_fmt(found[n][0])}" for n in names)
            rep.log.append(f"filling {i} ({len(c)} tiles) contains {where}")
        else:
            direct += 1
            status = "survives" if key in survivors else "refuted by region search only"
            rep.log.append(f"filling {i} ({len(c)} tiles) contains no earlier case: {status}")
        rows.append({"tiles": len(c), "contains": names})
    if not fills:
        rep.log.append("no tile configuration closes the gap at p")
    verdict = "impossible" if direct == 0 else None
    return {"fillings": len(fills), "reduced": reduced, "not_reduced": direct,
            "reduction_verdict": verdict,
            "routes_agree": verdict == rep.verdict if verdict else rep.verdict != "impossible",
            "rows": rows}
