"""Conditional expectation along an arrow, and the two functors on a.e.-classes.

``L`` is covariant: an arrow ``f: X -> Y`` sends a class on X to the class of
``u . f`` on Y.  ``E`` is contravariant: it sends a class on Y to the
conditional expectation on X.  In general ``E`` lives on integrable classes
(L^1) and ``L`` on bounded ones (L^oo); on finite carriers every class is
both, so both functors act on :class:`AeClass`.

The Radon-Nikodym derivative is explicit here: on a positive atom ``A`` of X,
``E^f(v) = (integral of v over f^{-1}(A)) / P_X(A)``.  Null atoms get 0.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .category import ProbArrow, compose_rv, initial_arrow
from .errors import SpaceMismatch
from .spaces import AeClass, RandomVariable, ae_equal, expectation


def functor_L_map(f: ProbArrow, u: AeClass) -> AeClass:
    if u.space != f.dom:
        raise SpaceMismatch("class does not live on the arrow's domain")
    return AeClass(compose_rv(u.representative, f))


def cond_exp(f: ProbArrow, v: RandomVariable) -> RandomVariable:
    """Canonical version of the conditional expectation of ``v`` along ``f``."""
    if v.space != f.cod:
        raise SpaceMismatch("variable does not live on the arrow's codomain")
    x, y = f.dom, f.cod
    num = [Fraction(0)] * len(x.sigma)
    x_atom_of = x.sigma.atom_of
    for atom, m in zip(y.sigma.atoms, y.measure):
        if m:
            num[x_atom_of[f.map[atom[0]]]] += v.values[atom[0]] * m
    per_atom = [n / p if p else Fraction(0) for n, p in zip(num, x.measure)]
    return RandomVariable.from_atoms(x, per_atom)


def functor_E_map(f: ProbArrow, v: AeClass) -> AeClass:
    return AeClass(cond_exp(f, v.representative))


def unconditional(v: RandomVariable) -> Fraction:
    """Expectation along the initial arrow, read off at the single point."""
    value = cond_exp(initial_arrow(v.space), v).values[0]
    assert value == expectation(v), "unconditional expectation disagrees with the mean"
    return value


def stabilization_index(seq: Sequence[RandomVariable]) -> int:
    """Least ``n`` such that ``seq[n:]`` are all a.e.-equal to the last term."""
    if not seq:
        raise ValueError("empty sequence")
    last = seq[-1]
    n = len(seq) - 1
    while n > 0 and ae_equal(seq[n - 1], last):
        n -= 1
    return n
