"""Arrows of the category of finite probability spaces.

Direction matters and is easy to get backwards::

        underlying function   f : Y  ---->  X        (outcomes of cod -> outcomes of dom)
        arrow                 f-: X̄  ---->  Ȳ        (dom -> cod)

An arrow ``X̄ -> Ȳ`` is *named* by a function going the other way.  Information
flows along ``f^{-1}``: a measurable set of X̄ is pulled back to one of Ȳ.

Every arrow is validated at construction.  It must be

* measurable: each cod atom lands inside a single dom atom, and
* null-preserving: every null dom atom has a null preimage.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .errors import NotCoarser, NotMeasurable, NullViolation, SpaceMismatch
from .spaces import Partition, ProbabilitySpace, RandomVariable

ZERO = ProbabilitySpace(("*",), Partition.trivial(1), (Fraction(1),), "0")
"""The one-point space, initial in the category."""


class ProbArrow:
    """Validated arrow ``dom -> cod`` with underlying ``map: cod outcomes -> dom outcomes``.

    ``map`` is stored as a tuple of dom indices, one per cod outcome.
    """

    __slots__ = ("dom", "cod", "map", "name")

    def __init__(self, dom: ProbabilitySpace, cod: ProbabilitySpace, map: Sequence[int], name: str = ""):
        map = tuple(map)
        if len(map) != len(cod.outcomes):
            raise ValueError(f"map has {len(map)} entries for {len(cod.outcomes)} outcomes")
        n = len(dom.outcomes)
        for j, i in enumerate(map):
            if not (isinstance(i, int) and 0 <= i < n):
                raise ValueError(f"outcome {cod.outcomes[j]!r} maps to invalid index {i!r}")
        self.dom = dom
        self.cod = cod
        self.map = map
        self.name = name
        self._validate()

    def _validate(self):
        dom, cod = self.dom, self.cod
        dom_atom_of = dom.sigma.atom_of
        for atom in cod.sigma.atoms:
            targets = {dom_atom_of[self.map[j]] for j in atom}
            if len(targets) > 1:
                raise NotMeasurable(
                    f"arrow {self.name or '?'}: atom {[cod.outcomes[j] for j in atom]} of "
                    f"{cod.label!r} is split across atoms of {dom.label!r}"
                )
        push = _pushforward(dom, cod, self.map)
        for k, m in enumerate(dom.measure):
            if m == 0 and push[k] != 0:
                raise NullViolation(
                    f"arrow {self.name or '?'}: null atom {dom.atom_label(k)} of {dom.label!r} "
                    f"has preimage of measure {push[k]} in {cod.label!r}",
                    atom=k,
                )

    def __call__(self, y):
        """Apply the underlying function to a cod outcome label."""
        return self.dom.outcomes[self.map[self.cod.index[y]]]

    def preimage(self, s) -> list[int]:
        """Cod indices mapped into the dom index set ``s``."""
        s = set(s)
        return [j for j, i in enumerate(self.map) if i in s]

    def __eq__(self, other):
        return (
            isinstance(other, ProbArrow)
            and self.map == other.map
            and self.dom == other.dom
            and self.cod == other.cod
        )

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        return f"ProbArrow({self.dom.label or '?'} -> {self.cod.label or '?'})"


def _pushforward(dom, cod, map) -> list[Fraction]:
    out = [Fraction(0)] * len(dom.sigma)
    dom_atom_of = dom.sigma.atom_of
    for atom, m in zip(cod.sigma.atoms, cod.measure):
        if m:
            out[dom_atom_of[map[atom[0]]]] += m
    return out


def mk_arrow(dom: ProbabilitySpace, cod: ProbabilitySpace, fn, name: str = "") -> ProbArrow:
    """Build the arrow ``dom -> cod`` from its underlying function ``cod -> dom``.

    ``fn`` may be a mapping or a callable on outcome labels.
    """
    if isinstance(fn, Mapping):
        get = fn.__getitem__
    elif callable(fn):
        get = fn
    else:
        raise TypeError("fn must be a mapping or a callable on outcome labels")
    idx = []
    for y in cod.outcomes:
        try:
            x = get(y)
        except KeyError:
            raise ValueError(f"underlying function undefined on {y!r}") from None
        if x not in dom.index:
            raise ValueError(f"{y!r} maps to {x!r}, which is not an outcome of {dom.label!r}")
        idx.append(dom.index[x])
    return ProbArrow(dom, cod, idx, name)


def identity(space: ProbabilitySpace) -> ProbArrow:
    return ProbArrow(space, space, range(len(space.outcomes)), f"Id_{space.label}")


def compose(g: ProbArrow, f: ProbArrow) -> ProbArrow:
    """``g . f`` for ``f: X -> Y`` and ``g: Y -> Z``; underlying function is ``f_u . g_u``."""
    if f.cod != g.dom:
        raise SpaceMismatch(f"cannot compose: cod of {f!r} differs from dom of {g!r}")
    fm = f.map
    return ProbArrow(f.dom, g.cod, (fm[j] for j in g.map))


def initial_arrow(space: ProbabilitySpace) -> ProbArrow:
    """The unique arrow from the one-point space."""
    return ProbArrow(ZERO, space, [0] * len(space.outcomes), f"!_{space.label}")


def pushforward(f: ProbArrow) -> tuple[Fraction, ...]:
    """Per-atom measure ``A -> P_cod(f^{-1}(A))`` on the dom sigma-algebra."""
    return tuple(_pushforward(f.dom, f.cod, f.map))


def is_measure_preserving(f: ProbArrow) -> bool:
    return pushforward(f) == f.dom.measure


def boundedness(f: ProbArrow) -> Fraction | None:
    """Least ``M`` with ``P_cod(f^{-1}(A)) <= M * P_dom(A)`` for all measurable ``A``.

    On finite spaces every valid arrow is bounded, so the None branch is
    unreachable for a :class:`ProbArrow`; it is kept for raw measures.
    """
    return least_bound(pushforward(f), f.dom.measure)


def least_bound(push: Sequence[Fraction], base: Sequence[Fraction]) -> Fraction | None:
    best = None
    for q, p in zip(push, base):
        if p == 0:
            if q != 0:
                return None
            continue
        r = q / p
        if best is None or r > best:
            best = r
    return best


def split(f: ProbArrow):
    """Factor ``f`` as ``f~ . id`` through ``X_f = (X, Sigma_X, P_cod . f^{-1})``.

    Returns ``(X_f, f_tilde, id_to_split)`` where ``f_tilde: X_f -> cod`` is
    measure-preserving and ``id_to_split: dom -> X_f`` has identity underlying map.
    """
    x = f.dom
    xf = x.with_measure(pushforward(f), label=f"{x.label}_{f.name or 'f'}")
    f_tilde = ProbArrow(xf, f.cod, f.map, f"{f.name or 'f'}~")
    id_to = ProbArrow(x, xf, range(len(x.outcomes)), f"id_{x.label}")
    return xf, f_tilde, id_to


def ae_equal_arrows(f: ProbArrow, g: ProbArrow) -> bool:
    """Same spaces and underlying functions agreeing off null cod atoms."""
    if f.dom != g.dom or f.cod != g.cod:
        return False
    cod = f.cod
    return all(
        f.map[j] == g.map[j]
        for atom, m in zip(cod.sigma.atoms, cod.measure)
        if m > 0
        for j in atom
    )


def compose_rv(u: RandomVariable, f: ProbArrow) -> RandomVariable:
    """``u . f``: pull a variable on dom back to cod along the underlying function."""
    if u.space != f.dom:
        raise SpaceMismatch("variable does not live on the arrow's domain")
    vals = u.values
    return RandomVariable(f.cod, (vals[i] for i in f.map))


def chi_embed(omega, fine_sigma: Partition, coarse_sigma: Partition, p_fine, p_coarse) -> ProbArrow:
    """Arrow ``(omega, coarse, p_coarse) -> (omega, fine, p_fine)`` with identity underlying map.

    Requires ``coarse`` to be a sub-sigma-algebra of ``fine`` and
    ``p_fine`` to be absolutely continuous w.r.t. ``p_coarse`` on coarse sets.
    """
    omega = tuple(omega)
    if not fine_sigma.refines(coarse_sigma):
        raise NotCoarser("coarse sigma-algebra is not contained in the fine one")
    coarse = ProbabilitySpace(omega, coarse_sigma, tuple(p_coarse), "V")
    fine = ProbabilitySpace(omega, fine_sigma, tuple(p_fine), "U")
    return ProbArrow(coarse, fine, range(len(omega)), "iota")
