"""
Independence of arrows
======================

Two arrows into the same space are independent when the product of their
split spaces maps onto the target by a measure preserving arrow that
commutes with both. On finite spaces this is the familiar product rule on
atoms, and the library checks both descriptions agree.
"""

from fractions import Fraction as F

from probcat import (
    ProbabilitySpace,
    RandomVariable,
    are_independent,
    cond_exp,
    expectation,
    factorizes,
    independence_witness,
    is_independent_of,
    mk_arrow,
)

p = F(1, 3)
y = ProbabilitySpace.build(
    ["00", "01", "10", "11"], [(1 - p) ** 2, (1 - p) * p, p * (1 - p), p**2], label="Y"
)
coin = ProbabilitySpace.build(["0", "1"], [1 - p, p], label="C")
first = mk_arrow(coin, y, lambda a: a[0], name="first")
second = mk_arrow(coin, y, lambda a: a[1], name="second")

print("first and second independent:", are_independent(first, second), factorizes(first, second))
q = independence_witness(first, second)
print("witness:", q)

# An arrow with a non-trivial image is never independent of itself.
print("first and first independent:", are_independent(first, first))

# A variable built from the second toss is independent of the first one, so
# conditioning on the first toss just returns its mean.
v = RandomVariable.from_function(y, lambda a: 5 * int(a[1]))
print("v independent of first:", is_independent_of(v, first))
print("E[v | first]:", *cond_exp(first, v).values, "mean:", expectation(v))
