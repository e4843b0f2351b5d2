import random
from fractions import Fraction

import pytest

from hyperhomology import (
    Chain,
    Cochain,
    HypergraphValidationError,
    OrientedHypergraph,
    Ring,
    chain_to_cochain,
    cochain_to_chain,
    random_hypergraph,
    validate,
    validation_report,
)


def test_overlapping_edge_rejected():
    report = validation_report(["a"], [({"a"}, {"a"})])
    assert any("overlap" in v for v in report)
    with pytest.raises(HypergraphValidationError):
        OrientedHypergraph(["a"], [({"a"}, {"a"})])


def test_inverse_pair_rejected():
    report = validation_report(["a", "b"], [({"a"}, {"b"}), ({"b"}, {"a"})])
    assert any("inverse pair" in v for v in report)


def test_parallel_edges_accepted():
    h = OrientedHypergraph(["u", "v"], [({"u"}, {"v"}), ({"u"}, {"v"})])
    assert h.edge_count == 2
    assert validate(h) == []


def test_unknown_vertex_rejected():
    report = validation_report(["a"], [({"a"}, {"b"})])
    assert any("unknown vertex" in v for v in report)


def test_duplicate_vertex_rejected():
    report = validation_report(["a", "a"], [])
    assert any("duplicate vertex" in v for v in report)


def test_empty_edge_allowed_once():
    h = OrientedHypergraph(["a"], [(set(), set())])
    assert h.edge_count == 1
    # a second doubly-empty edge is its own inverse
    report = validation_report(["a"], [(set(), set()), (set(), set())])
    assert any("inverse pair" in v for v in report)


def test_empty_sided_edges_allowed():
    h = OrientedHypergraph(["a", "b"], [(set(), {"a"}), ({"b"}, set())])
    assert h.edge_count == 2


def test_empty_hypergraph():
    h = OrientedHypergraph([], [])
    assert h.vertex_count == 0 and h.edge_count == 0


def test_gamma_sends_vertex_to_indicator():
    chain = Chain.unit(0, 1, Ring.INTEGER)
    cochain = chain_to_cochain(chain)
    assert cochain(Chain.unit(0, 1, Ring.INTEGER)) == 1
    assert cochain(Chain.unit(0, 0, Ring.INTEGER)) == 0


def test_cochain_evaluation_is_dot_product():
    cochain = Cochain(1, {0: 2, 2: -1}, Ring.INTEGER)
    chain = Chain(1, {0: 3, 1: 9, 2: 4}, Ring.INTEGER)
    assert cochain(chain) == 2 * 3 + (-1) * 4


def test_gamma_zero():
    zero = Chain.zero(1, Ring.INTEGER)
    assert chain_to_cochain(zero).is_zero()


def test_gamma_round_trip_fixed():
    chain = Chain(1, {0: 3, 1: -2}, Ring.INTEGER)
    assert cochain_to_chain(chain_to_cochain(chain)) == chain


def test_gamma_round_trip_random():
    rng = random.Random(5)
    for _ in range(100):
        dim = rng.randint(0, 1)
        ring = rng.choice([Ring.INTEGER, Ring.RATIONAL])
        coeffs = {i: rng.randint(-9, 9) for i in rng.sample(range(10), rng.randint(0, 6))}
        chain = Chain(dim, coeffs, ring)
        assert cochain_to_chain(chain_to_cochain(chain)) == chain
        cochain = Cochain(dim, coeffs, ring)
        assert chain_to_cochain(cochain_to_chain(cochain)) == cochain


def test_canonical_sparse_form():
    a = Chain(1, {0: 2, 1: 5}, Ring.INTEGER)
    b = Chain(1, {0: -2, 1: 1}, Ring.INTEGER)
    total = a + b
    assert 0 not in total.coefficients
    assert total == Chain(1, {1: 6}, Ring.INTEGER)
    assert a.scale(0).is_zero()
    assert (a - a).is_zero()


def test_zero_coefficients_dropped_on_construction():
    chain = Chain(1, {0: 0, 2: 7}, Ring.INTEGER)
    assert chain.support == (2,)


def test_ring_and_dimension_mismatch():
    a = Chain(1, {0: 1}, Ring.INTEGER)
    b = Chain(1, {0: Fraction(1)}, Ring.RATIONAL)
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a + Chain(0, {0: 1}, Ring.INTEGER)
    with pytest.raises(TypeError):
        a + chain_to_cochain(a)


def test_with_ring_conversion():
    a = Chain(1, {0: 2}, Ring.INTEGER).with_ring(Ring.RATIONAL)
    assert a.coefficient(0) == Fraction(2)
    back = a.with_ring(Ring.INTEGER)
    assert back.coefficient(0) == 2
    with pytest.raises(ValueError):
        Chain(1, {0: Fraction(1, 2)}, Ring.RATIONAL).with_ring(Ring.INTEGER)


def test_scalar_normalization():
    chain = Chain(1, {0: Fraction(6, 4)}, Ring.RATIONAL)
    value = chain.coefficient(0)
    assert value.numerator == 3 and value.denominator == 2


def test_random_generator_always_validates():
    for seed in range(50):
        h = random_hypergraph(5, 5, seed=seed, max_arity=3)
        assert validate(h) == []
        assert h.edge_count == 5
    h = random_hypergraph(4, 4, seed=7, max_arity=2, allow_empty_edges=True)
    assert validate(h) == []


def test_random_generator_deterministic():
    a = random_hypergraph(6, 6, seed=42)
    b = random_hypergraph(6, 6, seed=42)
    assert a == b


def test_random_generator_infeasible_params():
    with pytest.raises(ValueError):
        random_hypergraph(0, 2, seed=0)
    with pytest.raises(ValueError):
        random_hypergraph(3, 1, seed=0, max_arity=0)
