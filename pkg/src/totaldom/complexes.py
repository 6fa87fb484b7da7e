"""Simplicial complexes: stable complexes, joins, Stanley-Reisner, shellings.

Facets live over an explicit ground set. The stable complex of a graph has
the complements of its minimal TD-sets as facets; for a balanced tree the
even-stable complex plays the same role with the odd-height vertices as the
domination target. Shellings are verified against both forms of the
codimension-one condition, and a backtracking search provides the
shellability oracle for small complexes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .domination import minimal_s_td_sets, minimal_td_sets, minimal_transversal_masks
from .errors import (
    EnumerationCapExceeded,
    MixedTreeError,
    NotBalancedError,
    TheoremViolation,
)
from .graphs import Forest, Tree, VertexSet, _graph_of, heights, vset
from .ideals import Monomial, MonomialIdeal
from .unmixed import (
    characterize_balanced_unmixed,
    interior_graphs,
    is_balanced,
    is_unmixed_fast,
)


@dataclass(frozen=True)
class SimplicialComplex:
    """Ground set plus the pairwise-incomparable facet list.

    The void complex (no facets) and the complex whose only facet is the
    empty set are distinct values.
    """

    ground: tuple[str, ...]
    facets: tuple[VertexSet, ...]

    @classmethod
    def from_facets(cls, ground, facets) -> SimplicialComplex:
        ground = vset(ground)
        gset = set(ground)
        cleaned = sorted({vset(f) for f in facets})
        for f in cleaned:
            stray = [v for v in f if v not in gset]
            if stray:
                raise ValueError(f"facet uses vertices outside the ground set: {stray}")
        maximal = [
            f for f in cleaned
            if not any(f != g and set(f) <= set(g) for g in cleaned)
        ]
        return cls(ground=ground, facets=tuple(maximal))

    @classmethod
    def void(cls, ground) -> SimplicialComplex:
        return cls(ground=vset(ground), facets=())

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Dimension; the void complex reports -2 by convention."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def facet_masks(self) -> list[int]:
        pos = {v: i for i, v in enumerate(self.ground)}
        return [sum(1 << pos[v] for v in f) for f in self.facets]

    def has_face(self, face) -> bool:
        fs = set(face)
        return any(fs <= set(f) for f in self.facets)

    def render(self) -> str:
        lines = [" ".join(self.ground)]
        lines += [" ".join(f) if f else "-" for f in self.facets]
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"SimplicialComplex({len(self.ground)} vertices, {len(self.facets)} facets)"


def stable_complex(g, cap: int | None = None) -> SimplicialComplex:
    """Facets are the complements of the minimal TD-sets; void if none exist."""
    g = _graph_of(g)
    family = minimal_td_sets(g, cap=cap)
    verts = set(g.labels)
    facets = [vset(verts - set(d)) for d in family]
    return SimplicialComplex.from_facets(g.labels, facets)


def even_stable_complex(t: Forest, cap: int | None = None) -> SimplicialComplex:
    """Complements of the minimal odd-TD-sets inside the even-height vertices."""
    if not is_balanced(t):
        raise NotBalancedError("even-stable complex requires a balanced tree/forest")
    hmap = heights(t)
    even = hmap.even()
    family = minimal_s_td_sets(t, hmap.odd(), cap=cap)
    facets = [vset(set(even) - set(d)) for d in family]
    return SimplicialComplex.from_facets(even, facets)


def join(d1: SimplicialComplex, d2: SimplicialComplex) -> SimplicialComplex:
    if set(d1.ground) & set(d2.ground):
        raise ValueError("join requires disjoint ground sets")
    ground = vset(d1.ground + d2.ground)
    facets = [vset(a + b) for a in d1.facets for b in d2.facets]
    return SimplicialComplex.from_facets(ground, facets)


# ---------------------------------------------------------------------------
# Stanley-Reisner translation
# ---------------------------------------------------------------------------

def stanley_reisner_ideal(d: SimplicialComplex) -> MonomialIdeal:
    """Generated by the minimal non-faces (size at most dim+2)."""
    if d.is_void:
        return MonomialIdeal.unit(d.ground)
    gens = []
    for k in range(1, d.dim + 3):
        for sub in combinations(d.ground, k):
            if d.has_face(sub):
                continue
            if all(d.has_face(sub[:i] + sub[i + 1:]) for i in range(k)):
                gens.append(Monomial.of(*sub))
    return MonomialIdeal.from_gens(d.ground, gens)


def stanley_reisner_complex(i: MonomialIdeal) -> SimplicialComplex:
    """Faces are the subsets whose monomial avoids the ideal.

    The maximal ones are the complements of the minimal transversals of the
    generator supports, so the transversal engine applies directly.
    """
    from .errors import NotSquareFreeError

    if not i.is_squarefree:
        raise NotSquareFreeError(f"not square-free: {i.render()}")
    ground = i.variables
    pos = {v: k for k, v in enumerate(ground)}
    edges = [sum(1 << pos[v] for v in m.support) for m in i.gens]
    full = (1 << len(ground)) - 1
    facets = []
    for tmask in minimal_transversal_masks(edges):
        comp = full & ~tmask
        facets.append(tuple(v for v in ground if comp >> pos[v] & 1))
    return SimplicialComplex.from_facets(ground, facets)


# ---------------------------------------------------------------------------
# Shelling verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShellingWitness:
    """For facet pair (i, j): the earlier index k with F_j minus F_k = {v}."""

    i: int
    j: int
    k: int
    v: str

    def to_json_dict(self) -> dict:
        return {"i": self.i, "j": self.j, "k": self.k, "v": self.v}


@dataclass(frozen=True)
class ShellingCheck:
    ok: bool
    pure: bool
    reformulation_agrees: bool
    witnesses: tuple[ShellingWitness, ...]
    failure_pair: tuple[int, int] | None = None

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "pure": self.pure,
            "reformulation_agrees": self.reformulation_agrees,
            "witness_count": len(self.witnesses),
            "failure_pair": list(self.failure_pair) if self.failure_pair else None,
        }


def verify_shelling(d: SimplicialComplex, order) -> ShellingCheck:
    """Check a facet order under condition (ii) and its intersection form.

    Condition (ii): for i < j there are v in F_j - F_i and k < j with
    F_j - F_k = {v}. The reformulation asks, whenever |F_i & F_j| < dim, for
    some k < j with F_i & F_j inside F_k & F_j of full codimension-1 size.
    Both are evaluated and must agree.
    """
    order = [vset(f) for f in order]
    if sorted(order) != sorted(d.facets):
        raise ValueError("order is not a permutation of the facets")
    if not d.is_pure:
        return ShellingCheck(ok=False, pure=False, reformulation_agrees=True, witnesses=())
    if len(order) <= 1:
        return ShellingCheck(ok=True, pure=True, reformulation_agrees=True, witnesses=())
    pos = {v: k for k, v in enumerate(d.ground)}
    masks = [sum(1 << pos[v] for v in f) for f in order]
    size = len(order[0])
    witnesses = []
    for j in range(1, len(masks)):
        fj = masks[j]
        good = [k for k in range(j) if bin(masks[k] & fj).count("1") == size - 1]
        for i in range(j):
            fi = masks[i]
            hit = None
            for k in good:
                vbit = fj & ~masks[k]
                if vbit & ~fi:
                    hit = (k, vbit)
                    break
            inter = fi & fj
            reform_ok = (
                bin(inter).count("1") == size - 1
                or any(inter & ~masks[k] == 0 for k in good)
            )
            if (hit is not None) != reform_ok:
                raise TheoremViolation(
                    "shelling condition (ii) and its reformulation disagree"
                )
            if hit is None:
                return ShellingCheck(
                    ok=False,
                    pure=True,
                    reformulation_agrees=True,
                    witnesses=(),
                    failure_pair=(i, j),
                )
            k, vbit = hit
            witnesses.append(
                ShellingWitness(i=i, j=j, k=k, v=d.ground[vbit.bit_length() - 1])
            )
    return ShellingCheck(
        ok=True, pure=True, reformulation_agrees=True, witnesses=tuple(witnesses)
    )


def brute_force_shellable(d: SimplicialComplex, max_facets: int = 12):
    """Backtracking search for any shelling order; None when none exists.

    Whether a facet can extend a prefix depends only on the prefix as a set,
    so dead prefix sets are memoized.
    """
    if len(d.facets) > max_facets:
        raise EnumerationCapExceeded(
            f"{len(d.facets)} facets exceeds the search cap {max_facets}"
        )
    if not d.is_pure:
        return None
    m = len(d.facets)
    if m <= 1:
        return tuple(d.facets)
    masks = d.facet_masks()
    size = len(d.facets[0])
    full = (1 << m) - 1
    dead: set[int] = set()
    order: list[int] = []

    def can_append(used: list[int], f: int) -> bool:
        good = [masks[k] for k in used if bin(masks[k] & f).count("1") == size - 1]
        for i in used:
            fi = masks[i]
            if not any((f & ~gk) & ~fi for gk in good):
                return False
        return True

    def dfs(used_bits: int) -> bool:
        if used_bits == full:
            return True
        if used_bits in dead:
            return False
        for idx in range(m):
            if used_bits >> idx & 1:
                continue
            if can_append(order, masks[idx]):
                order.append(idx)
                if dfs(used_bits | 1 << idx):
                    return True
                order.pop()
        dead.add(used_bits)
        return False

    if dfs(0):
        return tuple(d.facets[i] for i in order)
    return None


# ---------------------------------------------------------------------------
# Facet vectors and the explicit shelling order
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FacetLabeling:
    """Support-indexed labeling of a height-3 unmixed balanced tree.

    ``rows[i]`` lists the admissible partners of support i: first its unique
    height-2 neighbor, then its leaves in label order; row lengths are the
    neighborhood sizes k_i.
    """

    supports: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    @property
    def bounds(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)


def facet_labeling(t: Tree) -> FacetLabeling:
    cert = characterize_balanced_unmixed(t)
    if not cert.unmixed:
        raise MixedTreeError("facet vectors require an unmixed balanced tree")
    hmap = heights(t)
    if hmap.graph_height() != 3:
        raise ValueError("facet vectors are defined for height-3 trees")
    g = t.graph
    v0 = set(hmap.level(0))
    v2 = set(hmap.level(2))
    supports = hmap.level(1)
    rows = []
    for s in supports:
        partners = [w for w in g.neighbors(s) if w in v2]
        if len(partners) != 1:
            raise TheoremViolation(f"support {s!r} has {len(partners)} height-2 partners")
        leaves = sorted(w for w in g.neighbors(s) if w in v0)
        rows.append(tuple(partners + leaves))
    return FacetLabeling(supports=supports, rows=tuple(rows))


def facet_vector(labeling: FacetLabeling, even: VertexSet, facet) -> tuple[int, ...]:
    """The tuple (a_1..a_p) with D = V_even - facet meeting row i at entry a_i."""
    d = set(even) - set(facet)
    vec = []
    for row in labeling.rows:
        picks = [a for a, u in enumerate(row, start=1) if u in d]
        if len(picks) != 1:
            raise TheoremViolation(
                f"facet complement meets a support row {len(picks)} times"
            )
        vec.append(picks[0])
    return tuple(vec)


def vector_facet(labeling: FacetLabeling, even: VertexSet, vec) -> VertexSet:
    dropped = {labeling.rows[i][a - 1] for i, a in enumerate(vec)}
    return vset(set(even) - dropped)


def ones_count(vec) -> int:
    return sum(1 for a in vec if a == 1)


def shelling_sort_key(vec):
    """More 1-entries first, then ascending lexicographic."""
    return (-ones_count(vec), vec)


@dataclass(frozen=True)
class ShellingOrder:
    ground: tuple[str, ...]
    facets: tuple[VertexSet, ...]
    vectors: tuple[tuple[int, ...], ...] | None
    check: ShellingCheck

    def complex(self) -> SimplicialComplex:
        return SimplicialComplex.from_facets(self.ground, self.facets)

    def to_json_dict(self) -> dict:
        return {
            "ground": list(self.ground),
            "facets": [list(f) for f in self.facets],
            "vectors": [list(v) for v in self.vectors] if self.vectors else None,
            "check": self.check.to_json_dict(),
            "witnesses": [w.to_json_dict() for w in self.check.witnesses],
        }


def shelling_order(t: Tree, cap: int | None = None) -> ShellingOrder:
    """The facet-vector order on the even-stable complex of a height-3 tree."""
    labeling = facet_labeling(t)
    complex_ = even_stable_complex(t, cap=cap)
    even = complex_.ground
    tagged = sorted(
        ((facet_vector(labeling, even, f), f) for f in complex_.facets),
        key=lambda pair: shelling_sort_key(pair[0]),
    )
    facets = tuple(f for _, f in tagged)
    vectors = tuple(v for v, _ in tagged)
    check = verify_shelling(complex_, facets)
    if not check.ok:
        raise TheoremViolation("the facet-vector order failed shelling verification")
    return ShellingOrder(ground=even, facets=facets, vectors=vectors, check=check)


def _component_order(t: Tree, cap: int | None = None) -> tuple[tuple[str, ...], list[VertexSet]]:
    """Ordered even-stable facets of one unmixed balanced component."""
    h = heights(t).graph_height()
    if h <= 1:
        comp = even_stable_complex(t, cap=cap)
        return comp.ground, sorted(comp.facets)
    if h == 3:
        order = shelling_order(t, cap=cap)
        return order.ground, list(order.facets)
    raise MixedTreeError(f"balanced component of height {h} cannot be unmixed")


def _composed_order(components, cap: int | None = None) -> ShellingOrder:
    grounds: list[str] = []
    orders = []
    for t in components:
        ground, facets = _component_order(t, cap=cap)
        grounds.extend(ground)
        orders.append(facets)
    facets = [vset(sum(parts, ())) for parts in product(*orders)]
    complex_ = SimplicialComplex.from_facets(grounds, facets)
    check = verify_shelling(complex_, facets)
    if not check.ok:
        raise TheoremViolation("composed join order failed shelling verification")
    return ShellingOrder(
        ground=vset(grounds), facets=tuple(facets), vectors=None, check=check
    )


def even_stable_shelling(f: Forest, cap: int | None = None) -> ShellingOrder:
    """Shelling of the even-stable complex of an unmixed balanced forest."""
    components = f.component_trees()
    for t in components:
        cert = characterize_balanced_unmixed(t)
        if not cert.unmixed:
            raise MixedTreeError("even-stable shelling requires an unmixed forest")
    return _composed_order(components, cap=cap)


def stable_shelling(t: Tree, cap: int | None = None) -> ShellingOrder:
    """Shelling of the stable complex of an unmixed tree.

    Composes the interior forests' component orders across the join; the
    resulting facet family equals the facets of the stable complex, which is
    asserted before returning.
    """
    cert = is_unmixed_fast(t)
    if not cert.unmixed:
        raise MixedTreeError("stable-complex shelling requires an unmixed tree")
    interiors = interior_graphs(t)
    components = interiors.blue.component_trees() + interiors.red.component_trees()
    order = _composed_order(components, cap=cap)
    direct = stable_complex(t, cap=cap)
    if set(order.facets) != set(direct.facets):
        raise TheoremViolation(
            "join of interior even-stable complexes does not match the stable complex"
        )
    return order
