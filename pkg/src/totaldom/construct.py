"""Whisker construction of unmixed balanced height-3 trees and its inverse.

Every unmixed balanced height-3 tree arises from the 7-vertex path by
repeatedly attaching a whisker at a vertex of height 1, 2, or 3 (a pendant
path of length 1, 4, or 3 respectively). ``generate`` drives seeded random
whisker sequences, ``deconstruct`` peels an arbitrary such tree back to the
base path, and ``replay`` rebuilds a tree from the recorded trace.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import MixedTreeError, TheoremViolation
from .graphs import (
    Graph,
    Tree,
    _graph_of,
    branch,
    classify_vertices,
    heights,
    is_isomorphic,
    path_graph,
)
from .treegen import Lcg64
from .unmixed import characterize_balanced_unmixed

KIND_LEAF = "height1-leaf"
KIND_WHISKER4 = "height2-whisker4"
KIND_WHISKER3 = "height3-whisker3"

_KIND_BY_HEIGHT = {1: KIND_LEAF, 2: KIND_WHISKER4, 3: KIND_WHISKER3}
_NEW_VERTICES = {KIND_LEAF: 1, KIND_WHISKER4: 4, KIND_WHISKER3: 3}


@dataclass(frozen=True)
class TraceStep:
    attach: str
    kind: str


@dataclass(frozen=True)
class ConstructionTrace:
    """Whisker replay log over the canonical base path (labels "0".."6")."""

    steps: tuple[TraceStep, ...]

    def __len__(self):
        return len(self.steps)

    def to_json(self) -> str:
        payload = {
            "base": "P6",
            "steps": [{"attach_label": s.attach, "kind": s.kind} for s in self.steps],
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ConstructionTrace:
        payload = json.loads(text)
        if payload.get("base") != "P6":
            raise ValueError(f"unsupported trace base {payload.get('base')!r}")
        steps = tuple(
            TraceStep(attach=s["attach_label"], kind=s["kind"])
            for s in payload["steps"]
        )
        for s in steps:
            if s.kind not in _NEW_VERTICES:
                raise ValueError(f"unknown step kind {s.kind!r}")
        return cls(steps=steps)


def fresh_labels(existing, count: int) -> list[str]:
    """Next labels from the "w<n>" namespace, skipping any already taken."""
    taken = set(existing)
    out = []
    n = 1
    while len(out) < count:
        cand = f"w{n}"
        if cand not in taken:
            out.append(cand)
            taken.add(cand)
        n += 1
    return out


def apply_o(t: Tree, v: str) -> Tree:
    """Attach the whisker dictated by height(v): lengths 1, 4, 3 at heights
    1, 2, 3. Heights of existing vertices are unchanged."""
    h = heights(t)[v]
    if h not in _KIND_BY_HEIGHT:
        raise ValueError(f"whisker attachment needs height 1..3, got height {h} at {v!r}")
    kind = _KIND_BY_HEIGHT[h]
    fresh = fresh_labels(t.graph.labels, _NEW_VERTICES[kind])
    edges = list(t.graph.edges())
    chain = [v] + fresh
    edges += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    return Tree.from_edges(edges)


def base_tree() -> Tree:
    return path_graph(6)


def replay(trace: ConstructionTrace) -> Tree:
    """Rebuild the tree from the base path, drawing fresh labels in order."""
    t = base_tree()
    for step in trace.steps:
        h = heights(t)[step.attach]
        if _KIND_BY_HEIGHT.get(h) != step.kind:
            raise ValueError(
                f"step kind {step.kind} does not match height {h} of {step.attach!r}"
            )
        t = apply_o(t, step.attach)
    return t


def generate(seed: int, steps: int) -> tuple[Tree, ConstructionTrace]:
    """Seeded random whisker sequence from the base path.

    Every non-leaf vertex of the current tree is eligible; the choice is
    uniform under the pinned LCG, so a (seed, steps) pair fully determines
    the output and replaying the returned trace reproduces it bit-exactly.
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    rng = Lcg64(seed)
    t = base_tree()
    recorded = []
    for _ in range(steps):
        hmap = heights(t)
        eligible = [v for v in t.graph.labels if hmap[v] in _KIND_BY_HEIGHT]
        v = eligible[rng.randrange(len(eligible))]
        recorded.append(TraceStep(attach=v, kind=_KIND_BY_HEIGHT[hmap[v]]))
        t = apply_o(t, v)
    return t, ConstructionTrace(steps=tuple(recorded))


# ---------------------------------------------------------------------------
# Leaf normalization and deconstruction
# ---------------------------------------------------------------------------

def leaf_normalize(t: Tree) -> tuple[Tree, dict[str, int]]:
    """Keep exactly one leaf per support (the smallest label); count removals."""
    cls = classify_vertices(t)
    if not cls.leaves:
        raise ValueError("leaf normalization needs at least one leaf")
    g = t.graph
    leaves = set(cls.leaves)
    removed: dict[str, int] = {}
    drop: set[str] = set()
    for s in cls.supports:
        mine = sorted(v for v in g.neighbors(s) if v in leaves and v not in drop)
        if len(mine) > 1:
            removed[s] = len(mine) - 1
            drop.update(mine[1:])
    if not drop:
        return t, {}
    keep = [v for v in g.labels if v not in drop]
    return Tree(g.induced(keep)), removed


def _peel_once(current: Tree):
    """One deconstruction round.

    Returns (attach, kind, chain, remainder) or None at the base path. The
    chain lists the removed vertices from the attachment point outward.
    """
    hmap = heights(current)
    v3 = set(hmap.level(3))
    g = current.graph
    pick = None
    for u in hmap.level(2):
        ups = [w for w in g.neighbors(u) if w in v3]
        if len(ups) == 1:
            pick = (u, ups[0])
            break
    if pick is None:
        raise TheoremViolation(
            "no height-2 vertex with a unique height-3 neighbor exists"
        )
    u, r = pick
    if g.degree(r) > 2:
        cut = branch(current, r, u)
        attach, kind, want = r, KIND_WHISKER3, 3
    elif len(v3) > 1:
        u_other = next(w for w in g.neighbors(r) if w != u)
        cut = branch(current, u_other, r)
        attach, kind, want = u_other, KIND_WHISKER4, 4
    else:
        if not is_isomorphic(current, base_tree()):
            raise TheoremViolation(
                "terminal deconstruction case reached away from the base path"
            )
        return None
    if len(cut) != want:
        raise TheoremViolation(
            f"peeled branch has {len(cut)} vertices, expected {want}"
        )
    dist = g.distances_from(attach)
    chain = tuple(sorted(cut, key=lambda v: dist[v]))
    keep = [v for v in g.labels if v not in set(cut)]
    return attach, kind, chain, Tree(g.induced(keep))


def deconstruct(t: Tree) -> ConstructionTrace:
    """Peel an unmixed balanced height-3 tree back to the base path.

    Each round picks the smallest-label height-2 vertex u with a unique
    height-3 neighbor r (such a u must exist); if deg(r) > 2 the branch
    beyond u is a 3-vertex whisker recorded at r, otherwise (with more than
    one height-3 vertex) the branch beyond r's other neighbor u' is a
    4-vertex whisker recorded at u'. Extra leaves removed up front are
    recorded as height-1 steps at the end of the trace. Replaying the trace
    yields a tree isomorphic to the input.
    """
    cert = characterize_balanced_unmixed(t)
    if not cert.unmixed:
        raise MixedTreeError("deconstruction requires an unmixed balanced tree")
    if heights(t).graph_height() != 3:
        raise ValueError("deconstruction requires height exactly 3")

    core, extra_leaves = leaf_normalize(t)
    peeled = []  # (attach, kind, chain) in peel order, original labels
    current = core
    while True:
        round_ = _peel_once(current)
        if round_ is None:
            break
        attach, kind, chain, current = round_
        peeled.append((attach, kind, chain))

    # translate original labels into the replay namespace: base path becomes
    # "0".."6" (orientation with the lexicographically smaller label tuple),
    # re-attached chains take "w1", "w2", ... in replay order
    base_order = _path_order(current)
    if tuple(reversed(base_order)) < base_order:
        base_order = tuple(reversed(base_order))
    rename = {orig: str(i) for i, orig in enumerate(base_order)}
    counter = 0
    steps: list[TraceStep] = []
    for attach, kind, chain in reversed(peeled):
        steps.append(TraceStep(attach=rename[attach], kind=kind))
        for orig in chain:
            counter += 1
            rename[orig] = f"w{counter}"
    for s in sorted(extra_leaves):
        steps.extend(
            TraceStep(attach=rename[s], kind=KIND_LEAF)
            for _ in range(extra_leaves[s])
        )
    return ConstructionTrace(steps=tuple(steps))


def _path_order(t: Tree) -> tuple[str, ...]:
    """Vertex labels of a path graph in path order."""
    g = t.graph
    if g.n == 1:
        return g.labels
    ends = [v for v in g.labels if g.degree(v) == 1]
    start = min(ends)
    order = [start]
    prev = None
    cur = start
    while len(order) < g.n:
        nxt = next(w for w in g.neighbors(cur) if w != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


# ---------------------------------------------------------------------------
# Suspension and complete edge subdivision
# ---------------------------------------------------------------------------

def suspension(t: Tree) -> Tree:
    """Attach one fresh leaf to every vertex."""
    g = t.graph
    fresh = fresh_labels(g.labels, g.n)
    edges = list(g.edges()) + list(zip(g.labels, fresh))
    return Tree.from_edges(edges)


def edge_subdivision(g) -> Graph:
    """Insert one fresh vertex in the middle of every edge."""
    g = _graph_of(g)
    edges = g.edges()
    fresh = fresh_labels(g.labels, len(edges))
    out = []
    for (a, b), m in zip(edges, fresh):
        out.append((a, m))
        out.append((m, b))
    return Graph.from_edges(out, extra_vertices=g.labels)
