"""The binomial model as a functor from the ordinal omega into probability spaces.

Time ``t`` carries all bit strings of length ``t`` (read left to right, oldest
bit first) with ``P({a}) = p^#a (1-p)^(t-#a)``, ``#a`` the number of ones.
The arrow ``s -> t`` is named by truncation ``a -> a[:s]``.  No terminal
horizon is part of the model; spaces are built on demand up to a memory cap.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache

from .category import ProbArrow, identity
from .errors import BadIndices, HorizonExceeded, InvalidP
from .expectation import cond_exp
from .spaces import Partition, ProbabilitySpace, RandomVariable, as_rational

DEFAULT_HORIZON_CAP = 20


def horizon_cap() -> int:
    raw = os.environ.get("PROBCAT_HORIZON_CAP")
    if raw is None:
        return DEFAULT_HORIZON_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise HorizonExceeded(f"PROBCAT_HORIZON_CAP={raw!r} is not an integer") from None
    if cap < 0:
        raise HorizonExceeded("PROBCAT_HORIZON_CAP must be nonnegative")
    return cap


def _check_p(p) -> Fraction:
    p = as_rational(p)
    if not 0 < p < 1:
        raise InvalidP(f"p must lie strictly between 0 and 1, got {p}")
    return p


def _check_t(t: int, cap: int | None):
    cap = horizon_cap() if cap is None else cap
    if not isinstance(t, int) or t < 0:
        raise BadIndices(f"time must be a nonnegative integer, got {t!r}")
    if t > cap:
        raise HorizonExceeded(f"time {t} exceeds the horizon cap {cap}")


def bit_strings(t: int) -> tuple[str, ...]:
    return tuple(format(k, f"0{t}b") if t else "" for k in range(2**t))


@lru_cache(maxsize=64)
def _space(p: Fraction, t: int) -> ProbabilitySpace:
    q = 1 - p
    outcomes = bit_strings(t)
    measure = tuple(p ** a.count("1") * q ** (t - a.count("1")) for a in outcomes)
    return ProbabilitySpace(outcomes, Partition.discrete(len(outcomes)), measure, f"B{t}")


def space_at(p, t: int, cap: int | None = None) -> ProbabilitySpace:
    p = _check_p(p)
    _check_t(t, cap)
    return _space(p, t)


@lru_cache(maxsize=128)
def _truncation(p: Fraction, s: int, t: int) -> ProbArrow:
    if s == t:
        return identity(_space(p, t))
    shift = t - s
    return ProbArrow(_space(p, s), _space(p, t), [k >> shift for k in range(2**t)], f"f_{s},{t}")


def truncation_arrow(p, s: int, t: int, cap: int | None = None) -> ProbArrow:
    p = _check_p(p)
    if not (isinstance(s, int) and isinstance(t, int) and 0 <= s <= t):
        raise BadIndices(f"need 0 <= s <= t, got s={s!r}, t={t!r}")
    _check_t(t, cap)
    return _truncation(p, s, t)


def binomial_cond_exp(p, s: int, t: int, payoff: RandomVariable, cap: int | None = None) -> RandomVariable:
    return cond_exp(truncation_arrow(p, s, t, cap), payoff)


def backward_induction_oracle(p, s: int, t: int, payoff: RandomVariable, cap: int | None = None) -> RandomVariable:
    """Classical tree recursion ``v_k(a) = (1-p) v_{k+1}(a0) + p v_{k+1}(a1)``."""
    p = _check_p(p)
    if not (isinstance(s, int) and isinstance(t, int) and 0 <= s <= t):
        raise BadIndices(f"need 0 <= s <= t, got s={s!r}, t={t!r}")
    _check_t(t, cap)
    layer = dict(zip(payoff.space.outcomes, payoff.values))
    if set(layer) != set(bit_strings(t)):
        raise BadIndices(f"payoff is not defined on the bit strings of length {t}")
    for k in range(t - 1, s - 1, -1):
        layer = {a: (1 - p) * layer[a + "0"] + p * layer[a + "1"] for a in bit_strings(k)}
    return RandomVariable.from_function(space_at(p, s, cap), layer.__getitem__)


class GeneralizedFiltration:
    """``t -> space_at(p, t)``, ``(s, t) -> truncation_arrow(p, s, t)``, built lazily."""

    def __init__(self, p, cap: int | None = None):
        self.p = _check_p(p)
        self.cap = cap

    def space(self, t: int) -> ProbabilitySpace:
        return space_at(self.p, t, self.cap)

    def arrow(self, s: int, t: int) -> ProbArrow:
        return truncation_arrow(self.p, s, t, self.cap)

    def cond_exp(self, s: int, t: int, payoff: RandomVariable) -> RandomVariable:
        return binomial_cond_exp(self.p, s, t, payoff, self.cap)

    def __repr__(self):
        return f"GeneralizedFiltration(p={self.p})"


def count_ones(p, t: int, cap: int | None = None) -> RandomVariable:
    return RandomVariable.from_function(space_at(p, t, cap), lambda a: a.count("1"))


def asset_price(p, t: int, up, down, cap: int | None = None, s0=1) -> RandomVariable:
    """``S_t(a) = s0 * up^#a * down^(t-#a)``."""
    up, down, s0 = as_rational(up), as_rational(down), as_rational(s0)
    return RandomVariable.from_function(
        space_at(p, t, cap), lambda a: s0 * up ** a.count("1") * down ** (t - a.count("1"))
    )


def risk_neutral_p(up, down) -> Fraction:
    """``(1 - d) / (u - d)``, the p making the undiscounted price a martingale."""
    up, down = as_rational(up), as_rational(down)
    if up == down:
        raise InvalidP("up and down factors coincide")
    return _check_p((1 - down) / (up - down))
