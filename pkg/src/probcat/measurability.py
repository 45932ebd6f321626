"""Measurability of a random variable with respect to an arrow."""

from __future__ import annotations

from fractions import Fraction

from .category import ProbArrow, compose_rv
from .errors import SpaceMismatch
from .spaces import RandomVariable, ae_equal


def is_f_measurable(f: ProbArrow, v: RandomVariable) -> RandomVariable | None:
    """Return ``w`` on ``f.dom`` with ``v ~ w . f`` almost surely, or None.

    ``w`` is 0 on atoms whose preimage is null, where any value would do.
    """
    if v.space != f.cod:
        raise SpaceMismatch("variable does not live on the arrow's codomain")
    x, y = f.dom, f.cod
    seen: dict[int, Fraction] = {}
    x_atom_of = x.sigma.atom_of
    for atom, m in zip(y.sigma.atoms, y.measure):
        if m == 0:
            continue
        k = x_atom_of[f.map[atom[0]]]
        val = v.values[atom[0]]
        if seen.setdefault(k, val) != val:
            return None
    w = RandomVariable.from_atoms(x, [seen.get(k, Fraction(0)) for k in range(len(x.sigma))])
    if not ae_equal(v, compose_rv(w, f)):
        return None
    return w
