"""Product spaces, value spaces and independence of arrows.

Two arrows ``f: X -> Z`` and ``g: Y -> Z`` are independent when the pairing
``q(z) = (f(z), g(z))`` is a measure-preserving arrow
``X_f (x) Y_g -> Z`` making both triangles through the projections commute.
:func:`are_independent` decides this by building ``q``; :func:`factorizes`
checks the product rule on atoms directly.  They must always agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .category import ProbArrow, compose, is_measure_preserving, split
from .errors import ProbCatError, SpaceMismatch
from .spaces import Partition, ProbabilitySpace, RandomVariable


@dataclass(frozen=True)
class ProductSpace:
    """``left (x) right`` on pairs, with projection arrows ``p1: left -> space``, ``p2: right -> space``."""

    space: ProbabilitySpace
    left: ProbabilitySpace
    right: ProbabilitySpace
    p1: ProbArrow
    p2: ProbArrow


def product(xs: ProbabilitySpace, ys: ProbabilitySpace) -> ProductSpace:
    nx, ny = len(xs.outcomes), len(ys.outcomes)
    outcomes = tuple((x, y) for x in xs.outcomes for y in ys.outcomes)
    atoms = []
    masses = {}
    for a, pa in zip(xs.sigma.atoms, xs.measure):
        for b, pb in zip(ys.sigma.atoms, ys.measure):
            atoms.append([i * ny + j for i in a for j in b])
            masses[a[0] * ny + b[0]] = pa * pb
    sigma = Partition(nx * ny, atoms)
    measure = tuple(masses[atom[0]] for atom in sigma.atoms)
    space = ProbabilitySpace(outcomes, sigma, measure, f"{xs.label}x{ys.label}")
    p1 = ProbArrow(xs, space, [k // ny for k in range(nx * ny)], "p1")
    p2 = ProbArrow(ys, space, [k % ny for k in range(nx * ny)], "p2")
    return ProductSpace(space, xs, ys, p1, p2)


@dataclass(frozen=True)
class ValueSpace:
    """The image of ``v`` with its distribution, and ``v`` itself as an arrow into ``v.space``."""

    space: ProbabilitySpace
    arrow: ProbArrow


def value_space(v: RandomVariable) -> ValueSpace:
    y = v.space
    values = sorted(set(v.values))
    pos = {val: i for i, val in enumerate(values)}
    mass = [Fraction(0)] * len(values)
    for atom, m in zip(y.sigma.atoms, y.measure):
        mass[pos[v.values[atom[0]]]] += m
    space = ProbabilitySpace(tuple(values), Partition.discrete(len(values)), tuple(mass), "R_v")
    arrow = ProbArrow(space, y, [pos[val] for val in v.values], "v")
    return ValueSpace(space, arrow)


def _check_common_cod(f, g):
    if f.cod != g.cod:
        raise SpaceMismatch("independence needs two arrows into the same space")


def factorizes(f: ProbArrow, g: ProbArrow) -> bool:
    """``P(f^{-1}A & g^{-1}B) == P(f^{-1}A) P(g^{-1}B)`` for all atoms ``A``, ``B``."""
    _check_common_cod(f, g)
    z = f.cod
    fa = f.dom.sigma.atom_of
    ga = g.dom.sigma.atom_of
    joint: dict[tuple[int, int], Fraction] = {}
    pf = [Fraction(0)] * len(f.dom.sigma)
    pg = [Fraction(0)] * len(g.dom.sigma)
    for atom, m in zip(z.sigma.atoms, z.measure):
        if not m:
            continue
        a = fa[f.map[atom[0]]]
        b = ga[g.map[atom[0]]]
        joint[a, b] = joint.get((a, b), Fraction(0)) + m
        pf[a] += m
        pg[b] += m
    return all(
        joint.get((a, b), Fraction(0)) == pf[a] * pg[b]
        for a in range(len(pf))
        for b in range(len(pg))
    )


def independence_witness(f: ProbArrow, g: ProbArrow) -> ProbArrow | None:
    """The measure-preserving pairing ``q: X_f (x) Y_g -> Z``, or None if there is none.

    ``q``'s underlying function is forced to ``z -> (f(z), g(z))`` by the two
    projection triangles, so no search is involved.
    """
    _check_common_cod(f, g)
    xf, f_tilde, _ = split(f)
    yg, g_tilde, _ = split(g)
    prod = product(xf, yg)
    ny = len(yg.outcomes)
    try:
        q = ProbArrow(prod.space, f.cod, [i * ny + j for i, j in zip(f.map, g.map)], "q")
    except ProbCatError:
        return None
    if not is_measure_preserving(q):
        return None
    if compose(q, prod.p1) != f_tilde or compose(q, prod.p2) != g_tilde:
        raise AssertionError("pairing arrow does not commute with the projections")
    return q


def are_independent(f: ProbArrow, g: ProbArrow) -> bool:
    return independence_witness(f, g) is not None


def is_independent_of(v: RandomVariable, f: ProbArrow) -> bool:
    """Whether ``v`` on ``f.cod`` is independent of the arrow ``f``."""
    if v.space != f.cod:
        raise SpaceMismatch("variable does not live on the arrow's codomain")
    return are_independent(f, value_space(v).arrow)
