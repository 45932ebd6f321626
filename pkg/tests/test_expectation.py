from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given

from probcat import (
    AeClass,
    ProbabilitySpace,
    RandomVariable,
    SpaceMismatch,
    ae_equal,
    ae_le,
    compose,
    compose_rv,
    cond_exp,
    expectation,
    functor_E_map,
    functor_L_map,
    identity,
    initial_arrow,
    integrate,
    is_measure_preserving,
    mk_arrow,
    product,
    split,
    stabilization_index,
    truncation_arrow,
    unconditional,
)
from probcat.binomial import count_ones, space_at
from strategies import (
    random_arrow,
    random_chain,
    random_nonneg_rv,
    random_rational,
    random_rv,
    random_space,
    seeds,
)


def measurable_sets(space):
    atoms = space.sigma.atoms
    for r in range(len(atoms) + 1):
        for chosen in combinations(atoms, r):
            yield {i for a in chosen for i in a}


def satisfies_defining_equation(f, v, u):
    return all(
        integrate(u, a) == integrate(v, f.preimage(a)) for a in measurable_sets(f.dom)
    )


def test_identity_example():
    sp = ProbabilitySpace.build("abc", [F(1, 2), F(1, 2), 0])
    u = RandomVariable(sp, [1, 2, 7])
    assert ae_equal(cond_exp(identity(sp), u), u)


def test_binomial_example():
    p = F(1, 2)
    v = count_ones(p, 2)
    e = cond_exp(truncation_arrow(p, 1, 2), v)
    # per-node oracle: average of #ones over the two equally likely extensions
    oracle = {a: sum(F((a + b).count("1")) * F(1, 4) for b in "01") / F(1, 2) for a in "01"}
    assert oracle == {"0": F(1, 2), "1": F(3, 2)}
    assert e["0"] == oracle["0"] and e["1"] == oracle["1"]


def test_null_atom_gets_zero():
    y = ProbabilitySpace.build("ab", [1, 0])
    x = ProbabilitySpace.build(["L", "R"], [1, 0])
    f = mk_arrow(x, y, {"a": "L", "b": "R"})
    e = cond_exp(f, RandomVariable(y, [3, 5]))
    assert e.values == (3, 0)


def test_cond_exp_space_mismatch():
    f = truncation_arrow(F(1, 2), 1, 2)
    with pytest.raises(SpaceMismatch):
        cond_exp(f, count_ones(F(1, 2), 1))
    with pytest.raises(SpaceMismatch):
        functor_L_map(f, AeClass(count_ones(F(1, 2), 2)))


def test_functor_L_examples():
    p = F(1, 2)
    f = truncation_arrow(p, 1, 2)
    a, b = F(2), F(-5, 3)
    u = RandomVariable(f.dom, [a, b])
    v = functor_L_map(f, AeClass(u)).representative
    assert v.values == tuple(a if s[0] == "0" else b for s in f.cod.outcomes)
    assert functor_L_map(identity(f.dom), AeClass(u)) == AeClass(u)
    c = RandomVariable.constant(f.dom, 4)
    assert functor_L_map(f, AeClass(c)) == AeClass(RandomVariable.constant(f.cod, 4))


def test_unconditional_examples():
    sp = space_at(F(1, 2), 2)
    assert unconditional(RandomVariable.constant(sp, F(9, 4))) == F(9, 4)
    assert unconditional(count_ones(F(1, 2), 2)) == 1
    third = ProbabilitySpace.build("abc", [F(1, 3), F(1, 3), F(1, 3)])
    assert unconditional(RandomVariable.indicator(third, {0})) == F(1, 3)


@given(seeds)
def test_defining_equation(rng):
    f = random_arrow(rng, random_space(rng), random_space(rng))
    v = random_rv(rng, f.cod)
    assert satisfies_defining_equation(f, v, cond_exp(f, v))


@given(seeds)
def test_uniqueness_by_perturbation(rng):
    f = random_arrow(rng, random_space(rng), random_space(rng))
    v = random_rv(rng, f.cod)
    e = cond_exp(f, v)
    for k in range(len(f.dom.sigma)):
        vals = list(e.atom_values())
        vals[k] += random_rational(rng, 1, 3)
        if vals[k] == e.atom_values()[k]:
            continue
        u = RandomVariable.from_atoms(f.dom, vals)
        positive = f.dom.measure[k] > 0
        assert satisfies_defining_equation(f, v, u) == (not positive)
        assert ae_equal(u, e) == (not positive)


@given(seeds)
def test_tower_and_identity(rng):
    _, (f, g) = random_chain(rng, 2)
    w = AeClass(random_rv(rng, g.cod))
    assert functor_E_map(f, functor_E_map(g, w)) == functor_E_map(compose(g, f), w)
    assert functor_E_map(identity(g.cod), w) == w


@given(seeds)
def test_L_functor_laws(rng):
    _, (f, g) = random_chain(rng, 2)
    u = AeClass(random_rv(rng, f.dom))
    assert functor_L_map(identity(f.dom), u) == u
    assert functor_L_map(compose(g, f), u) == functor_L_map(g, functor_L_map(f, u))


@given(seeds)
def test_linearity(rng):
    f = random_arrow(rng, random_space(rng), random_space(rng))
    u, v = random_rv(rng, f.cod), random_rv(rng, f.cod)
    a, b = random_rational(rng), random_rational(rng)
    lhs = cond_exp(f, a * u + b * v)
    rhs = a * cond_exp(f, u) + b * cond_exp(f, v)
    assert ae_equal(lhs, rhs)


@given(seeds)
def test_positivity(rng):
    f = random_arrow(rng, random_space(rng), random_space(rng))
    v = random_nonneg_rv(rng, f.cod)
    # negative values on null atoms do not break a.s. nonnegativity
    vals = list(v.atom_values())
    for k in f.cod.null_atoms():
        vals[k] = -abs(vals[k]) - 1
    v = RandomVariable.from_atoms(f.cod, vals)
    zero = RandomVariable.constant(f.dom, 0)
    assert ae_le(RandomVariable.constant(f.cod, 0), v)
    assert ae_le(zero, cond_exp(f, v))


def increasing_sequence(rng, v, length=6):
    """``0 <= v_0 <= v_1 <= ... `` reaching ``v`` atom by atom at random times."""
    sp = v.space
    target = v.atom_values()
    reach = [rng.randrange(length) for _ in target]
    seq = []
    for n in range(length):
        vals = [
            t if n >= r else t * F(n + 1, r + 2)
            for t, r in zip(target, reach)
        ]
        seq.append(RandomVariable.from_atoms(sp, vals))
    return seq


@given(seeds)
def test_monotone_convergence_stabilizes(rng):
    f = random_arrow(rng, random_space(rng), random_space(rng))
    v = random_nonneg_rv(rng, f.cod)
    seq = increasing_sequence(rng, v)
    assert all(ae_le(a, b) for a, b in zip(seq, seq[1:]))
    assert ae_equal(seq[-1], v)
    images = [cond_exp(f, vn) for vn in seq]
    assert all(ae_le(a, b) for a, b in zip(images, images[1:]))
    assert ae_equal(images[-1], cond_exp(f, v))
    assert stabilization_index(images) <= stabilization_index(seq)


def test_stabilization_index():
    sp = ProbabilitySpace.build("ab", [1, 0])
    seq = [RandomVariable(sp, [k, 0]) for k in (0, 1, 2, 2)]
    seq.append(RandomVariable(sp, [2, 9]))
    assert stabilization_index(seq) == 2


@given(seeds)
def test_E_after_L_is_identity_for_measure_preserving(rng):
    f = random_arrow(rng, random_space(rng), random_space(rng))
    _, f_tilde, _ = split(f)
    assert is_measure_preserving(f_tilde)
    u = AeClass(random_rv(rng, f_tilde.dom))
    assert functor_E_map(f_tilde, functor_L_map(f_tilde, u)) == u
    one = RandomVariable.constant(f_tilde.cod, 1)
    assert ae_equal(cond_exp(f_tilde, one), RandomVariable.constant(f_tilde.dom, 1))


@given(seeds)
def test_projection_lemma(rng):
    x, y = random_space(rng, 4), random_space(rng, 4)
    prod = product(x, y)
    v = random_rv(rng, y)
    lhs = cond_exp(prod.p1, compose_rv(v, prod.p2))
    assert ae_equal(lhs, RandomVariable.constant(x, expectation(v)))


@given(seeds)
def test_unconditional_is_mean(rng):
    v = random_rv(rng, random_space(rng))
    assert unconditional(v) == expectation(v) == cond_exp(initial_arrow(v.space), v).values[0]
