"""Finite probability spaces with exact rational measures.

A sigma-algebra on a finite set is determined by its atoms, so it is stored as
a :class:`Partition`.  Measures live on atoms, random variables on outcomes
(constant on each atom).  All arithmetic uses :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence

from .errors import (
    InvalidGenerator,
    InvalidSpace,
    NotMeasurable,
    SpaceMismatch,
)

Rational = Fraction


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and exact strings ("1/3", "0.25") to Fraction.

    Floats are rejected: they would smuggle binary rounding into the core.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError(f"refusing float {x!r}; pass an int, Fraction or string")
    return Fraction(x)


class Partition:
    """Partition of ``range(n)`` into nonempty atoms, sorted by least member."""

    __slots__ = ("n", "atoms", "atom_of")

    def __init__(self, n: int, atoms: Iterable[Iterable[int]]):
        if n < 1:
            raise InvalidSpace("a partition needs at least one point")
        blocks = []
        seen = [False] * n
        for atom in atoms:
            block = tuple(sorted(set(atom)))
            if not block:
                raise InvalidSpace("empty atom")
            for i in block:
                if not 0 <= i < n:
                    raise InvalidSpace(f"index {i} out of range 0..{n - 1}")
                if seen[i]:
                    raise InvalidSpace(f"index {i} lies in two atoms")
                seen[i] = True
            blocks.append(block)
        if not all(seen):
            missing = [i for i, s in enumerate(seen) if not s]
            raise InvalidSpace(f"atoms do not cover indices {missing}")
        blocks.sort(key=lambda b: b[0])
        atom_of = [0] * n
        for k, block in enumerate(blocks):
            for i in block:
                atom_of[i] = k
        self.n = n
        self.atoms: tuple[tuple[int, ...], ...] = tuple(blocks)
        self.atom_of: tuple[int, ...] = tuple(atom_of)

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(n, ([i] for i in range(n)))

    @classmethod
    def trivial(cls, n: int) -> "Partition":
        return cls(n, [range(n)])

    @classmethod
    def from_labels(cls, labels: Sequence[Hashable]) -> "Partition":
        """Group indices that carry equal labels."""
        groups: dict = {}
        for i, lab in enumerate(labels):
            groups.setdefault(lab, []).append(i)
        return cls(len(labels), groups.values())

    def __len__(self):
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.n == other.n and self.atoms == other.atoms

    def __hash__(self):
        return hash((self.n, self.atoms))

    def __repr__(self):
        inner = ", ".join("{" + ",".join(map(str, a)) + "}" for a in self.atoms)
        return f"Partition({self.n}, [{inner}])"

    def refines(self, other: "Partition") -> bool:
        """True if every atom of ``self`` sits inside one atom of ``other``."""
        if self.n != other.n:
            return False
        return all(len({other.atom_of[i] for i in atom}) == 1 for atom in self.atoms)

    def atoms_covering(self, s: Iterable[int]) -> set[int] | None:
        """Atom indices whose union is ``s``, or None when ``s`` splits an atom."""
        s = set(s)
        hit = {self.atom_of[i] for i in s}
        if sum(len(self.atoms[k]) for k in hit) != len(s):
            return None
        return hit


def generate_sigma(outcome_count: int, generators: Iterable[Iterable[int]]) -> Partition:
    """Atoms of the sigma-algebra on ``range(outcome_count)`` generated by ``generators``.

    Two points share an atom exactly when no generator separates them.
    """
    if outcome_count < 1:
        raise InvalidGenerator("outcome_count must be positive")
    gens = []
    for g in generators:
        g = frozenset(g)
        bad = [i for i in g if not (isinstance(i, int) and 0 <= i < outcome_count)]
        if bad:
            raise InvalidGenerator(f"generator indices {sorted(bad)} out of range 0..{outcome_count - 1}")
        gens.append(g)
    signatures = [tuple(i in g for g in gens) for i in range(outcome_count)]
    return Partition.from_labels(signatures)


def is_measurable_set(sigma: Partition, s: Iterable[int]) -> bool:
    s = set(s)
    if any(not 0 <= i < sigma.n for i in s):
        raise InvalidGenerator(f"set {sorted(s)} not within 0..{sigma.n - 1}")
    return sigma.atoms_covering(s) is not None


@dataclass(frozen=True, eq=False)
class ProbabilitySpace:
    """``(outcomes, sigma, measure)`` with ``measure[k]`` the mass of atom ``k``.

    Equality is structural; the label is only for display.
    """

    outcomes: tuple
    sigma: Partition
    measure: tuple[Fraction, ...]
    label: str = field(default="")
    index: dict = field(init=False, repr=False)

    def __post_init__(self):
        outcomes = tuple(self.outcomes)
        object.__setattr__(self, "outcomes", outcomes)
        index = {}
        for i, o in enumerate(outcomes):
            if o in index:
                raise InvalidSpace(f"duplicate outcome {o!r} in space {self.label!r}")
            index[o] = i
        object.__setattr__(self, "index", index)
        if self.sigma.n != len(outcomes):
            raise InvalidSpace(
                f"space {self.label!r}: partition covers {self.sigma.n} points, "
                f"but there are {len(outcomes)} outcomes"
            )
        measure = tuple(as_rational(m) for m in self.measure)
        object.__setattr__(self, "measure", measure)
        if len(measure) != len(self.sigma):
            raise InvalidSpace(
                f"space {self.label!r}: {len(measure)} masses for {len(self.sigma)} atoms"
            )
        neg = [k for k, m in enumerate(measure) if m < 0]
        if neg:
            raise InvalidSpace(f"space {self.label!r}: negative mass on atoms {neg}")
        total = sum(measure, Fraction(0))
        if total != 1:
            raise InvalidSpace(f"space {self.label!r}: masses sum to {total}, not 1")

    @classmethod
    def build(cls, outcomes, measure, atoms=None, label=""):
        """Convenience constructor; ``atoms`` are lists of outcome labels (default singletons)."""
        outcomes = tuple(outcomes)
        if atoms is None:
            sigma = Partition.discrete(len(outcomes))
        else:
            pos = {o: i for i, o in enumerate(outcomes)}
            try:
                sigma = Partition(len(outcomes), ([pos[o] for o in atom] for atom in atoms))
            except KeyError as exc:
                raise InvalidSpace(f"unknown outcome {exc.args[0]!r} in atoms") from None
        if isinstance(measure, dict):
            measure = [measure[outcomes[a[0]]] for a in sigma.atoms]
        return cls(outcomes, sigma, tuple(measure), label)

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, ProbabilitySpace)
            and self.outcomes == other.outcomes
            and self.sigma == other.sigma
            and self.measure == other.measure
        )

    def __hash__(self):
        return hash((self.outcomes, self.sigma, self.measure))

    def __repr__(self):
        return f"ProbabilitySpace({self.label or '?'}: {len(self.outcomes)} outcomes, {len(self.sigma)} atoms)"

    def __len__(self):
        return len(self.outcomes)

    def with_measure(self, measure, label=None) -> "ProbabilitySpace":
        return ProbabilitySpace(self.outcomes, self.sigma, tuple(measure), label or self.label)

    def prob(self, s: Iterable[int]) -> Fraction:
        """Measure of a measurable index set."""
        hit = self.sigma.atoms_covering(s)
        if hit is None:
            raise NotMeasurable(f"{sorted(set(s))} is not a union of atoms of {self.label!r}")
        return sum((self.measure[k] for k in hit), Fraction(0))

    def null_atoms(self) -> list[int]:
        return [k for k, m in enumerate(self.measure) if m == 0]

    def positive_atoms(self) -> list[int]:
        return [k for k, m in enumerate(self.measure) if m > 0]

    def atom_label(self, k: int) -> str:
        atom = self.sigma.atoms[k]
        if len(atom) == 1:
            return str(self.outcomes[atom[0]])
        return "{" + ",".join(str(self.outcomes[i]) for i in atom) + "}"


class RandomVariable:
    """Rational-valued function on outcomes, constant on every atom."""

    __slots__ = ("space", "values")

    def __init__(self, space: ProbabilitySpace, values: Iterable):
        values = tuple(as_rational(v) for v in values)
        if len(values) != len(space.outcomes):
            raise InvalidSpace(
                f"{len(values)} values for {len(space.outcomes)} outcomes of {space.label!r}"
            )
        for atom in space.sigma.atoms:
            first = values[atom[0]]
            if any(values[i] != first for i in atom):
                raise NotMeasurable(
                    f"random variable is not constant on atom "
                    f"{[space.outcomes[i] for i in atom]} of {space.label!r}"
                )
        self.space = space
        self.values = values

    @classmethod
    def from_function(cls, space, fn: Callable) -> "RandomVariable":
        return cls(space, (fn(o) for o in space.outcomes))

    @classmethod
    def from_atoms(cls, space, atom_values: Sequence) -> "RandomVariable":
        vals = [atom_values[k] for k in space.sigma.atom_of]
        return cls(space, vals)

    @classmethod
    def constant(cls, space, c=1) -> "RandomVariable":
        return cls(space, [c] * len(space.outcomes))

    @classmethod
    def indicator(cls, space, s: Iterable[int]) -> "RandomVariable":
        s = set(s)
        return cls(space, (1 if i in s else 0 for i in range(len(space.outcomes))))

    def atom_values(self) -> tuple[Fraction, ...]:
        return tuple(self.values[a[0]] for a in self.space.sigma.atoms)

    def __getitem__(self, outcome):
        return self.values[self.space.index[outcome]]

    def __eq__(self, other):
        return (
            isinstance(other, RandomVariable)
            and self.space == other.space
            and self.values == other.values
        )

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        body = ", ".join(f"{o}: {v}" for o, v in zip(self.space.outcomes, self.values))
        return f"RandomVariable({{{body}}})"

    def _binary(self, other, op):
        if isinstance(other, RandomVariable):
            _same_space(self, other)
            return RandomVariable(self.space, (op(a, b) for a, b in zip(self.values, other.values)))
        c = as_rational(other)
        return RandomVariable(self.space, (op(a, c) for a in self.values))

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __neg__(self):
        return RandomVariable(self.space, (-a for a in self.values))

    def map(self, fn: Callable) -> "RandomVariable":
        """Post-compose with a real function, e.g. ``v.map(abs)``."""
        return RandomVariable(self.space, (fn(a) for a in self.values))


def _same_space(v1: RandomVariable, v2: RandomVariable):
    if v1.space != v2.space:
        raise SpaceMismatch(f"random variables live on {v1.space!r} and {v2.space!r}")


def integrate(v: RandomVariable, a: Iterable[int], space: ProbabilitySpace | None = None) -> Fraction:
    """Exact integral of ``v`` over the measurable index set ``a``."""
    if space is not None and space != v.space:
        raise SpaceMismatch("random variable does not live on the given space")
    space = v.space
    hit = space.sigma.atoms_covering(a)
    if hit is None:
        raise NotMeasurable(f"{sorted(set(a))} is not a union of atoms of {space.label!r}")
    total = Fraction(0)
    for k in hit:
        total += v.values[space.sigma.atoms[k][0]] * space.measure[k]
    return total


def expectation(v: RandomVariable) -> Fraction:
    sp = v.space
    return sum(
        (v.values[atom[0]] * m for atom, m in zip(sp.sigma.atoms, sp.measure)),
        Fraction(0),
    )


def ae_equal(v1: RandomVariable, v2: RandomVariable) -> bool:
    _same_space(v1, v2)
    sp = v1.space
    return all(
        v1.values[atom[0]] == v2.values[atom[0]]
        for atom, m in zip(sp.sigma.atoms, sp.measure)
        if m > 0
    )


def ae_le(v1: RandomVariable, v2: RandomVariable) -> bool:
    """``v1 <= v2`` almost surely."""
    _same_space(v1, v2)
    sp = v1.space
    return all(
        v1.values[atom[0]] <= v2.values[atom[0]]
        for atom, m in zip(sp.sigma.atoms, sp.measure)
        if m > 0
    )


def canonical(v: RandomVariable) -> RandomVariable:
    """The representative of ``v``'s a.e.-class that vanishes on null atoms."""
    sp = v.space
    vals = list(v.values)
    for atom, m in zip(sp.sigma.atoms, sp.measure):
        if m == 0:
            for i in atom:
                vals[i] = Fraction(0)
    return RandomVariable(sp, vals)


class AeClass:
    """A random variable up to equality off null atoms."""

    __slots__ = ("representative", "_key")

    def __init__(self, representative: RandomVariable):
        self.representative = representative
        self._key = canonical(representative).values

    @property
    def space(self):
        return self.representative.space

    def __eq__(self, other):
        if not isinstance(other, AeClass):
            return NotImplemented
        return self.space == other.space and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"AeClass({self.representative!r})"
