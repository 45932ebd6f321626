"""
The binomial model as a filtration
==================================

At time t the outcomes are bit strings of length t, a 1 meaning an up move
with probability p. Forgetting the last moves gives an arrow from time s to
time t, and conditional expectation along it prices a claim by averaging.
"""

from fractions import Fraction as F

from probcat import (
    GeneralizedFiltration,
    RandomVariable,
    asset_price,
    backward_induction_oracle,
    binomial_cond_exp,
    count_ones,
    risk_neutral_p,
    space_at,
)

# The number of up moves after two fair steps, seen from time one.
p = F(1, 2)
v = count_ones(p, 2)
e = binomial_cond_exp(p, 1, 2, v)
for node, value in zip(e.space.outcomes, e.values):
    print(f"node {node}: {value}")

# With up factor 2 and down factor 1/2 the risk neutral probability is 1/3,
# and the asset price is a martingale: its conditional expectation is itself.
up, down = 2, F(1, 2)
q = risk_neutral_p(up, down)
print("risk neutral p:", q)
for s in range(4):
    assert binomial_cond_exp(q, s, 3, asset_price(q, 3, up, down)) == asset_price(q, s, up, down)

# A European call with strike 1, priced at time zero, agrees with the
# classical tree recursion.
t = 3
call = RandomVariable.from_function(space_at(q, t), lambda a: max(up ** a.count("1") * down ** (t - a.count("1")) - 1, 0))
price = binomial_cond_exp(q, 0, t, call)
print("call price:", price.values[0])
assert price == backward_induction_oracle(q, 0, t, call)

# The whole model is available as one object, built lazily.
model = GeneralizedFiltration(q)
print(model, "has", len(model.space(5).outcomes), "outcomes at time 5")
