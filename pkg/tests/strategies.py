"""Random generators for spaces, arrows and variables.

Plain ``random.Random`` builders so the acceptance suite can run fixed-seed
loops of a stated size; hypothesis strategies wrap the same builders.
"""

from fractions import Fraction
from random import Random

from hypothesis import strategies as st

from probcat import Partition, ProbabilitySpace, ProbArrow, RandomVariable


def random_measure(rng: Random, k: int, null_chance=0.25):
    while True:
        w = [0 if rng.random() < null_chance else rng.randint(1, 6) for _ in range(k)]
        if any(w):
            break
    total = sum(w)
    return [Fraction(x, total) for x in w]


def random_space(rng: Random, max_outcomes=6, null_chance=0.25, label=None, min_outcomes=1, min_atoms=1):
    n = rng.randint(max(min_outcomes, min_atoms), max_outcomes)
    blocks = rng.randint(min_atoms, n)
    labels = list(range(blocks)) + [rng.randrange(blocks) for _ in range(n - blocks)]
    rng.shuffle(labels)
    sigma = Partition.from_labels(labels)
    measure = random_measure(rng, len(sigma), null_chance)
    name = label or f"S{rng.randrange(10**6)}"
    return ProbabilitySpace(tuple(f"o{i}" for i in range(n)), sigma, tuple(measure), name)


def random_arrow(rng: Random, dom: ProbabilitySpace, cod: ProbabilitySpace, spread=False) -> ProbArrow:
    """A valid arrow ``dom -> cod``: each cod atom goes into one dom atom, positive ones to positive atoms.

    With ``spread`` the positive cod atoms hit distinct positive dom atoms
    while there are enough of them, so the pulled-back algebra is rarely trivial.
    """
    positive = dom.positive_atoms()
    every = list(range(len(dom.sigma)))
    fresh = rng.sample(positive, len(positive)) if spread else []
    idx = [0] * len(cod.outcomes)
    for atom, m in zip(cod.sigma.atoms, cod.measure):
        if m and fresh:
            target = dom.sigma.atoms[fresh.pop()]
        else:
            target = dom.sigma.atoms[rng.choice(positive if m else every)]
        for j in atom:
            idx[j] = rng.choice(target)
    return ProbArrow(dom, cod, idx)


def random_rv(rng: Random, space: ProbabilitySpace, lo=-5, hi=5, den=4):
    vals = [Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den)) for _ in space.sigma.atoms]
    return RandomVariable.from_atoms(space, vals)


def random_nonneg_rv(rng: Random, space):
    return random_rv(rng, space, 0, 5)


def random_rational(rng: Random, lo=-4, hi=4, den=6):
    return Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den))


def perturb_on_nulls(rng: Random, v: RandomVariable) -> RandomVariable:
    sp = v.space
    vals = list(v.atom_values())
    for k in sp.null_atoms():
        vals[k] += rng.randint(1, 9)
    return RandomVariable.from_atoms(sp, vals)


def random_chain(rng: Random, length: int, **kw):
    """Spaces ``S0..S_length`` and arrows ``S_i -> S_{i+1}``."""
    spaces = [random_space(rng, **kw) for _ in range(length + 1)]
    arrows = [random_arrow(rng, spaces[i], spaces[i + 1]) for i in range(length)]
    return spaces, arrows


def random_cospan(rng: Random, **kw):
    """Arrows ``f: X -> Z`` and ``g: Y -> Z`` with a common codomain.

    Half the time ``Z`` is a product of two spaces and ``f``, ``g`` factor
    through its projections, so independent pairs turn up often. Spaces
    have at least two atoms so that trivially independent pairs stay rare.
    """
    from probcat import compose, product

    kw.setdefault("min_atoms", 2)
    kw.setdefault("null_chance", 0.1)
    if rng.random() < 0.5:
        a, b = random_space(rng, 3, **kw), random_space(rng, 3, **kw)
        prod = product(a, b)
        x, y = random_space(rng, 3, **kw), random_space(rng, 3, **kw)
        f = compose(prod.p1, random_arrow(rng, x, a, spread=True))
        g = compose(prod.p2, random_arrow(rng, y, b, spread=True))
        return f, g
    z = random_space(rng, **kw)
    x, y = random_space(rng, 4, **kw), random_space(rng, 4, **kw)
    return random_arrow(rng, x, z, spread=True), random_arrow(rng, y, z, spread=True)


seeds = st.integers(0, 2**32 - 1).map(Random)
spaces = seeds.map(random_space)


@st.composite
def arrows(draw, max_outcomes=6):
    rng = draw(seeds)
    dom = random_space(rng, max_outcomes)
    cod = random_space(rng, max_outcomes)
    return random_arrow(rng, dom, cod)


@st.composite
def arrows_with_rv(draw):
    rng = draw(seeds)
    f = random_arrow(rng, random_space(rng), random_space(rng))
    return f, random_rv(rng, f.cod)
