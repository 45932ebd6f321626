"""
Conditional expectation along an arrow
======================================

For an arrow f: X -> Y and a variable v on Y, the conditional expectation is
the variable on X whose integral over every measurable A equals the integral
of v over the preimage of A. On a finite space it is an atom-wise average.
"""

from fractions import Fraction as F

from probcat import (
    AeClass,
    ProbabilitySpace,
    RandomVariable,
    compose,
    cond_exp,
    functor_E_map,
    integrate,
    is_f_measurable,
    mk_arrow,
    unconditional,
)

y = ProbabilitySpace.build(["HH", "HT", "TH", "TT"], [F(1, 4)] * 4, label="Y")
x = ProbabilitySpace.build(["H", "T"], [F(1, 2), F(1, 2)], label="X")
first = mk_arrow(x, y, lambda pair: pair[0], name="first")

# v counts heads.
heads = RandomVariable.from_function(y, lambda pair: pair.count("H"))
e = cond_exp(first, heads)
print("E[heads | first toss]:", ", ".join(f"{o}: {val}" for o, val in zip(x.outcomes, e.values)))

# The defining equation, checked on every measurable set of X.
for a in [set(), {0}, {1}, {0, 1}]:
    assert integrate(e, a) == integrate(heads, first.preimage(a))

# Along the unique arrow out of the one-point space this is the plain mean.
print("unconditional:", unconditional(heads))

# A variable that only depends on the first toss is recovered exactly.
lead = RandomVariable.from_function(y, lambda pair: 10 if pair[0] == "H" else -1)
w = is_f_measurable(first, lead)
print("lead factors through first:", *w.values)
print("pull-out holds:", cond_exp(first, lead * heads) == w * cond_exp(first, heads))

# Conditioning twice is the same as conditioning once along the composite.
z = ProbabilitySpace.build(["*"], [1], label="Z")
to_point = mk_arrow(z, x, lambda o: "*")
w_class = AeClass(heads)
twice = functor_E_map(to_point, functor_E_map(first, w_class))
once = functor_E_map(compose(first, to_point), w_class)
print("tower law:", twice == once, *twice.representative.values)

# Values on null atoms are not determined; the library reports 0 there.
with_null = ProbabilitySpace.build(["a", "b"], [1, 0], label="N")
e = cond_exp(mk_arrow(with_null, with_null, lambda o: o), RandomVariable(with_null, [3, 5]))
print("canonical version, null atom last:", *e.values)
