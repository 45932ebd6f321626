"""
Finite probability spaces and their arrows
==========================================

A space is a finite set of outcomes, a partition into atoms (the sigma
algebra) and an exact rational mass on each atom. An arrow X -> Y is given
by a function from the outcomes of Y back to the outcomes of X.
"""

from fractions import Fraction as F

from probcat import (
    NullViolation,
    ProbabilitySpace,
    boundedness,
    compose,
    identity,
    is_measure_preserving,
    mk_arrow,
    pushforward,
    split,
)

# Two fair coin tosses, every outcome its own atom.
two_tosses = ProbabilitySpace.build(["HH", "HT", "TH", "TT"], [F(1, 4)] * 4, label="Y")

# A biased single toss. The arrow "first toss" goes from X to Y, so its
# underlying function reads a pair of tosses and returns the first one.
one_toss = ProbabilitySpace.build(["H", "T"], [F(1, 3), F(2, 3)], label="X")
first = mk_arrow(one_toss, two_tosses, lambda pair: pair[0], name="first")
print("first:", first)

# Pushing the measure of Y forward along the function gives 1/2 and 1/2,
# which differs from the 1/3 and 2/3 on X. The arrow is valid, just not
# measure preserving, and the ratio is bounded by 3/2.
print("pushforward:", *pushforward(first))
print("measure preserving:", is_measure_preserving(first))
print("least bound M:", boundedness(first))

# Splitting moves the pushforward onto a copy of X, giving a measure
# preserving arrow followed by an identity on the carrier.
xf, f_tilde, id_to = split(first)
print("split measure:", *xf.measure, "preserving:", is_measure_preserving(f_tilde))
assert compose(f_tilde, id_to) == first

# Composition and identities behave as in any category. compose(g, f) is
# g after f, so the identity of Y goes on the left of an arrow into Y.
assert compose(identity(two_tosses), first) == first == compose(first, identity(one_toss))

# An arrow must not send a positive-mass set of Y into a null atom of X.
sure = ProbabilitySpace.build(["x1", "x2"], [1, 0], label="X")
point = ProbabilitySpace.build(["y"], [1], label="Y")
try:
    mk_arrow(sure, point, {"y": "x2"}, name="g")
except NullViolation as exc:
    print("rejected:", exc)
