"""The completion functor.

On a finite space the completed sigma-algebra keeps every positive atom and
shatters each null atom into singletons of measure zero: a set is sandwiched
between measurable sets of equal measure exactly when it differs from a
union of atoms by part of a null atom.
"""

from __future__ import annotations

from .category import ProbArrow
from .errors import ProbCatError
from .spaces import Partition, ProbabilitySpace


def complete_space(x: ProbabilitySpace) -> ProbabilitySpace:
    if not x.null_atoms():
        return x
    atoms, masses = [], {}
    for atom, m in zip(x.sigma.atoms, x.measure):
        if m:
            atoms.append(atom)
            masses[atom[0]] = m
        else:
            for i in atom:
                atoms.append((i,))
                masses[i] = m
    sigma = Partition(x.sigma.n, atoms)
    measure = tuple(masses[a[0]] for a in sigma.atoms)
    label = x.label if x.label.endswith("*") else x.label + "*"
    return ProbabilitySpace(x.outcomes, sigma, measure, label)


def complete_arrow(f: ProbArrow) -> ProbArrow:
    """Same underlying function between the completed spaces."""
    try:
        return ProbArrow(complete_space(f.dom), complete_space(f.cod), f.map, f.name)
    except ProbCatError as exc:
        raise RuntimeError(f"completed arrow failed validation (bug): {exc}") from exc
