"""Artinian reductions of odd neighborhood ideals and the Cohen-Macaulay type.

For an unmixed balanced height-3 tree the regular sequence identifies each
leaf with the height-2 partner of its support, collapsing the odd
neighborhood ideal to an ideal in one variable per support that contains the
pure powers u_i^{|N(s_i)|}. Its socle dimension equals the number of minimal
V3-TD-sets, which multiplies across components and across the two interior
forests to give the type of the full tree's open neighborhood ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .domination import MinimalSetFamily, minimal_s_td_sets
from .errors import EnumerationCapExceeded, MixedTreeError, TheoremViolation
from .graphs import Forest, Tree, VertexSet, heights, vset
from .ideals import (
    Monomial,
    MonomialIdeal,
    PrimeDecomposition,
    open_neighborhood_ideal,
)
from .unmixed import characterize_balanced_unmixed, interior_graphs, is_unmixed_fast

SOCLE_BOX_CAP = 10**7


def odd_open_neighborhood_ideal(f: Forest, *, variables=None) -> MonomialIdeal:
    """Neighborhood ideal targeted at the odd-height vertices.

    Ambient defaults to the even-height vertices, matching the quotient ring
    the reduction lives in; pass ``variables`` to embed elsewhere.
    """
    hmap = heights(f)
    ambient = hmap.even() if variables is None else variables
    return open_neighborhood_ideal(f.graph, hmap.odd(), variables=ambient)


@dataclass(frozen=True)
class ArtinianReduction:
    """Result of quotienting by the leaf-identification regular sequence."""

    height: int
    variables: tuple[str, ...]
    ideal: MonomialIdeal  # contains a pure power of every variable
    pure_powers: MonomialIdeal
    substitution: tuple[tuple[str, str], ...]  # even vertex -> surviving variable

    def substitution_map(self) -> dict[str, str]:
        return dict(self.substitution)


def artinian_reduction(t: Tree) -> ArtinianReduction:
    """Reduce the odd neighborhood ideal of an unmixed balanced tree."""
    cert = characterize_balanced_unmixed(t)
    if not cert.unmixed:
        raise MixedTreeError("reduction requires an unmixed balanced tree")
    hmap = heights(t)
    h = hmap.graph_height()
    g = t.graph

    if h == 0:
        v = t.graph.labels[0]
        ideal = MonomialIdeal.from_gens((v,), [Monomial.of(v)])
        return ArtinianReduction(
            height=0,
            variables=(v,),
            ideal=ideal,
            pure_powers=ideal,
            substitution=((v, v),),
        )

    if h == 1:
        leaves = hmap.level(0)
        rep = leaves[0]
        n0 = len(leaves)
        ideal = MonomialIdeal.from_gens((rep,), [Monomial.from_dict({rep: n0})])
        return ArtinianReduction(
            height=1,
            variables=(rep,),
            ideal=ideal,
            pure_powers=ideal,
            substitution=tuple((v, rep) for v in leaves),
        )

    if h != 3:
        raise TheoremViolation(f"unmixed balanced tree of height {h} should not exist")

    v0 = set(hmap.level(0))
    v2 = set(hmap.level(2))
    subst: dict[str, str] = {}
    powers: dict[str, int] = {}
    for s in hmap.level(1):
        partners = [w for w in g.neighbors(s) if w in v2]
        if len(partners) != 1:
            raise TheoremViolation("support without a unique height-2 partner")
        u = partners[0]
        subst[u] = u
        powers[u] = len(g.neighbors(s))
        for leaf in g.neighbors(s):
            if leaf in v0:
                subst[leaf] = u
    variables = vset(powers)
    gens = [Monomial.from_dict({u: k}) for u, k in powers.items()]
    pure = MonomialIdeal.from_gens(variables, gens)
    for r in hmap.level(3):
        gens.append(Monomial.of(*sorted({subst[w] for w in g.neighbors(r)})))
    ideal = MonomialIdeal.from_gens(variables, gens)
    return ArtinianReduction(
        height=3,
        variables=variables,
        ideal=ideal,
        pure_powers=pure,
        substitution=tuple(sorted(subst.items())),
    )


# ---------------------------------------------------------------------------
# Socle oracle
# ---------------------------------------------------------------------------

def _pure_power_bounds(i: MonomialIdeal) -> dict[str, int]:
    bounds: dict[str, int] = {}
    for m in i.gens:
        if len(m.exps) == 1:
            v, e = m.exps[0]
            bounds[v] = min(bounds.get(v, e), e)
    missing = [v for v in i.variables if v not in bounds]
    if missing:
        raise ValueError(
            f"no pure power of {missing} (quotient is not finite-dimensional)"
        )
    return bounds


def socle_dimension(a) -> int:
    """Count the monomials outside the ideal killed by every variable.

    Accepts an ArtinianReduction or a bare MonomialIdeal that contains a
    pure power of each variable; enumerates the finite exponent box.
    """
    ideal = a.ideal if isinstance(a, ArtinianReduction) else a
    bounds = _pure_power_bounds(ideal)
    variables = ideal.variables
    box = prod(bounds[v] for v in variables)
    if box > SOCLE_BOX_CAP:
        raise EnumerationCapExceeded(f"socle box of size {box} exceeds {SOCLE_BOX_CAP}")
    count = 0
    exps: list[int] = []

    def rec(i: int):
        nonlocal count
        if i == len(variables):
            m = Monomial.from_dict(dict(zip(variables, exps)))
            if not ideal.contains(m) and all(
                ideal.contains(m.times_var(v)) for v in variables
            ):
                count += 1
            return
        for e in range(bounds[variables[i]]):
            exps.append(e)
            rec(i + 1)
            exps.pop()

    rec(0)
    return count


# ---------------------------------------------------------------------------
# Parametric decomposition
# ---------------------------------------------------------------------------

def minimal_v3_td_sets(f: Forest, cap: int | None = None) -> MinimalSetFamily:
    """Minimal S-TD-sets with S the height-3 vertices of a balanced forest.

    With no height-3 vertices the empty set is the unique member; across
    components the family is the cross product of the component families.
    """
    from .unmixed import is_balanced

    if f.graph.n and not is_balanced(f):
        raise MixedTreeError("V3 domination targets are defined on balanced forests")
    hmap = heights(f)
    return minimal_s_td_sets(f, hmap.level(3), cap=cap)


def parametric_decomposition(a: ArtinianReduction, t: Tree | None = None) -> PrimeDecomposition:
    """Express the reduced ideal as an intersection over minimal V3-TD-sets.

    Components are the variable primes of the V3-TD-sets shifted by the
    shared pure-power ideal; equality with the reduced ideal is verified
    exactly, and a mismatch is surfaced as a theorem violation.
    """
    supports: tuple[VertexSet, ...]
    if a.height < 3:
        supports = ((),)
    elif t is not None:
        family = minimal_v3_td_sets(t)
        supports = tuple(vset(a.substitution_map()[v] for v in d) for d in family)
    else:
        from .domination import minimal_transversals

        non_pure = [m for m in a.ideal.gens if len(m.exps) > 1]
        supports = minimal_transversals([m.support for m in non_pure])
    dec = PrimeDecomposition(
        variables=a.variables, supports=tuple(sorted(supports)), pure_powers=a.pure_powers
    )
    if dec.to_ideal() != a.ideal:
        raise TheoremViolation("parametric decomposition does not re-expand to the ideal")
    return dec


# ---------------------------------------------------------------------------
# Type report
# ---------------------------------------------------------------------------

def _component_depth(t: Tree) -> int:
    hmap = heights(t)
    h = hmap.graph_height()
    n0 = len(hmap.level(0))
    if h == 0:
        return 1
    if h == 1:
        return n0 - 1
    return n0


@dataclass(frozen=True)
class TypeReport:
    cm_type: int
    m_blue: int
    m_red: int
    depth: int
    dim: int
    blue_family: MinimalSetFamily
    red_family: MinimalSetFamily
    socle_blue: int
    socle_red: int

    def to_json_dict(self) -> dict:
        return {
            "type": self.cm_type,
            "m_blue": self.m_blue,
            "m_red": self.m_red,
            "depth": self.depth,
            "dim": self.dim,
            "blue_v3_td_sets": [list(s) for s in self.blue_family.sets],
            "red_v3_td_sets": [list(s) for s in self.red_family.sets],
            "socle_blue": self.socle_blue,
            "socle_red": self.socle_red,
        }


def _forest_side(forest: Forest, cap: int | None):
    """(V3 family, socle product, depth sum) for one interior forest."""
    family = minimal_v3_td_sets(forest, cap=cap)
    socle = 1
    depth = 0
    for comp in forest.component_trees():
        socle *= socle_dimension(artinian_reduction(comp))
        depth += _component_depth(comp)
    return family, socle, depth


def cm_type(t: Tree, cap: int | None = None) -> TypeReport:
    """Cohen-Macaulay type of the open neighborhood ideal of an unmixed tree.

    The counting route (minimal V3-TD-sets of the interiors, multiplied) and
    the socle oracle (box enumeration per component, multiplied) must agree;
    disagreement is escalated rather than reported.
    """
    cert = is_unmixed_fast(t)
    if not cert.unmixed:
        raise MixedTreeError("type is defined for unmixed trees only")
    interiors = interior_graphs(t)
    blue_family, socle_blue, depth_blue = _forest_side(interiors.blue, cap)
    red_family, socle_red, depth_red = _forest_side(interiors.red, cap)
    m_blue, m_red = len(blue_family), len(red_family)
    if (m_blue, m_red) != (socle_blue, socle_red):
        raise TheoremViolation(
            f"V3-TD-set counts ({m_blue},{m_red}) disagree with socle "
            f"dimensions ({socle_blue},{socle_red})"
        )
    depth = depth_blue + depth_red
    return TypeReport(
        cm_type=m_blue * m_red,
        m_blue=m_blue,
        m_red=m_red,
        depth=depth,
        dim=depth,
        blue_family=blue_family,
        red_family=red_family,
        socle_blue=socle_blue,
        socle_red=socle_red,
    )
