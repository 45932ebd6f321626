"""
Completing a space
==================

The completion adds every set squeezed between two measurable sets of the
same mass. On a finite space that means each null atom breaks into single
outcomes, while atoms of positive mass stay whole.
"""

from fractions import Fraction as F

from probcat import ProbabilitySpace, mk_arrow
from probcat.completion import complete_arrow, complete_space

x = ProbabilitySpace.build(
    ["a", "b", "c", "d"], [F(1, 2), F(1, 2), 0], atoms=[["a"], ["b"], ["c", "d"]], label="X"
)
done = complete_space(x)
print("atoms before:", [[x.outcomes[i] for i in a] for a in x.sigma.atoms])
print("atoms after: ", [[done.outcomes[i] for i in a] for a in done.sigma.atoms])
print("masses after:", *done.measure)
print("completing twice changes nothing:", complete_space(done) == done)

# Arrows carry over with the same underlying function.
y = ProbabilitySpace.build(["u", "v", "w"], [F(1, 2), F(1, 2), 0], label="Y")
f = mk_arrow(x, y, {"u": "a", "v": "b", "w": "d"}, name="f")
cf = complete_arrow(f)
print("completed arrow:", cf.dom.label, "->", cf.cod.label, "same map:", cf.map == f.map)
