"""Brute-force oracles kept apart from the code they check."""

from fractions import Fraction


def sandwich_completion(space):
    """Map each completed-measurable subset (bitmask) to its completed measure.

    Enumerates every pair of measurable ``A <= B`` with ``P(B - A) = 0`` and
    every ``F`` squeezed between them.
    """
    atoms = space.sigma.atoms
    masks = [sum(1 << i for i in a) for a in atoms]
    k = len(atoms)
    measurable = []
    for sel in range(1 << k):
        m, p = 0, Fraction(0)
        for j in range(k):
            if sel >> j & 1:
                m |= masks[j]
                p += space.measure[j]
        measurable.append((m, p))
    found = {}
    for a, pa in measurable:
        for b, pb in measurable:
            if a & ~b or pb - pa != 0:
                continue
            free = b & ~a
            sub = free
            while True:
                f = a | sub
                if found.setdefault(f, pa) != pa:
                    raise AssertionError("completed measure is not well defined")
                if sub == 0:
                    break
                sub = (sub - 1) & free
    return found


def partition_sets(space):
    """Bitmask -> measure for every union of atoms."""
    atoms = space.sigma.atoms
    out = {}
    for sel in range(1 << len(atoms)):
        m, p = 0, Fraction(0)
        for j, a in enumerate(atoms):
            if sel >> j & 1:
                m |= sum(1 << i for i in a)
                p += space.measure[j]
        out[m] = p
    return out
