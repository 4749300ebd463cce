import random

import pytest

from autoreal.errors import NotRealizableError
from autoreal.intmat import det, identity, mat_pow, mat_sub, mat_vec
from autoreal.structures import ZStructureDescriptor
from autoreal.zn_realizer import (
    CHAIN,
    Block,
    build_automorphism,
    chain_block,
    classify_vector,
    lcm_closure,
    pure_cycle_matrix,
    realization_to_json,
    validate_descriptor,
    verify_chain_block,
    verify_pure_cycle,
)

P6 = ((0, 1), (-1, 1))


def _basis(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


def test_lcm_closure_fixtures():
    assert lcm_closure({6, 15}) == frozenset({6, 15, 30})
    assert lcm_closure({7}) == frozenset({7})
    assert lcm_closure({2, 3, 5}) == frozenset({2, 3, 5, 6, 10, 15, 30})


def test_lcm_closure_rejects_bad_input():
    with pytest.raises(ValueError):
        lcm_closure(set())
    with pytest.raises(ValueError):
        lcm_closure({0, 2})


def test_lcm_closure_idempotent_and_monotone():
    rng = random.Random(8)
    for _ in range(50):
        base = {rng.randrange(1, 20) for _ in range(rng.randrange(1, 5))}
        closed = lcm_closure(base)
        assert base <= closed
        assert lcm_closure(closed) == closed


def test_validate_descriptor_ok():
    d = ZStructureDescriptor(frozenset({6, 15, 30}), True)
    assert validate_descriptor(d) == []
    assert validate_descriptor(ZStructureDescriptor(frozenset({4}), False)) == []
    assert validate_descriptor(ZStructureDescriptor(frozenset(), True)) == []


def test_validate_descriptor_missing_lcm():
    d = ZStructureDescriptor(frozenset({6, 15}), True)
    violations = validate_descriptor(d)
    assert len(violations) == 1
    v = violations[0]
    assert v.condition == 5 and v.pair == (6, 15) and v.missing == 30


def test_validate_descriptor_not_infinite():
    violations = validate_descriptor(ZStructureDescriptor(frozenset(), False))
    assert [v.condition for v in violations] == [0]


def test_pure_cycle_matrix_fixtures():
    assert pure_cycle_matrix(1) == ((1,),)
    assert pure_cycle_matrix(2) == ((-1,),)
    assert pure_cycle_matrix(6) == P6
    p30 = pure_cycle_matrix(30)
    assert p30[-1] == (-1, -1, 0, 1, 1, 1, 0, -1)


def test_pure_cycle_matrix_order_six_orbit():
    # the orbit of (1, 0) under the 6-cycle block, all six steps
    orbit = [(1, 0)]
    for _ in range(5):
        orbit.append(mat_vec(P6, orbit[-1]))
    assert orbit == [(1, 0), (0, -1), (-1, -1), (-1, 0), (0, 1), (1, 1)]
    assert mat_vec(P6, orbit[-1]) == (1, 0)


def test_pure_cycle_matrix_sixth_root_identities():
    assert mat_pow(P6, 3) == ((-1, 0), (0, -1))
    assert mat_pow(P6, 6) == identity(2)


def test_verify_pure_cycle():
    assert verify_pure_cycle(P6, 6)
    assert not verify_pure_cycle(P6, 3)
    assert not verify_pure_cycle(P6, 12)
    assert verify_pure_cycle(identity(1), 1)
    assert not verify_pure_cycle(identity(2), 2)


def test_verify_pure_cycle_sweep():
    for n in range(1, 41):
        m = pure_cycle_matrix(n)
        assert verify_pure_cycle(m, n), n
        assert det(m) in (1, -1)


def test_chain_block_has_no_periodic_vectors():
    c = chain_block()
    assert c == ((1, 1), (1, 0))
    assert verify_chain_block(c, 40)
    assert not verify_chain_block(identity(2), 5)
    assert not verify_chain_block(P6, 6)
    assert verify_chain_block(P6, 5)  # no return before the full period


def test_classify_vector_fixtures():
    assert classify_vector(P6, (1, 0), [6]) == 6
    assert classify_vector(P6, (0, 0), [6]) == 1
    assert classify_vector(chain_block(), (1, 0), [6]) == CHAIN
    assert classify_vector(identity(2), (1, 1), []) == 1


def test_classify_vector_shape_check():
    with pytest.raises(ValueError):
        classify_vector(P6, (1, 0, 0), [6])


def test_build_fixture_layout():
    d = ZStructureDescriptor(frozenset({6, 15, 30}), True)
    r = build_automorphism(d)
    assert len(r.matrix) == 20
    assert r.blocks == (
        Block(6, 0, 2),
        Block(15, 2, 8),
        Block(30, 10, 8),
        Block(CHAIN, 18, 2),
    )
    # spot classifications: block starts and a cross-block mix
    lengths = [6, 15, 30]
    assert classify_vector(r.matrix, _basis(20, 0), lengths) == 6
    assert classify_vector(r.matrix, _basis(20, 2), lengths) == 15
    assert classify_vector(r.matrix, _basis(20, 10), lengths) == 30
    assert classify_vector(r.matrix, _basis(20, 18), lengths) == CHAIN
    mix_6_15 = tuple(a + b for a, b in zip(_basis(20, 0), _basis(20, 2)))
    assert classify_vector(r.matrix, mix_6_15, lengths) == 30
    mix_6_30 = tuple(a + b for a, b in zip(_basis(20, 0), _basis(20, 10)))
    assert classify_vector(r.matrix, mix_6_30, lengths) == 30


def test_build_single_blocks():
    r = build_automorphism(ZStructureDescriptor(frozenset({1}), False))
    assert r.matrix == ((1,),)
    r = build_automorphism(ZStructureDescriptor(frozenset({2}), False))
    assert r.matrix == ((-1,),)
    r = build_automorphism(ZStructureDescriptor(frozenset(), True))
    assert r.matrix == ((1, 1), (1, 0))


def test_build_rejects_invalid():
    with pytest.raises(NotRealizableError):
        build_automorphism(ZStructureDescriptor(frozenset({6, 15}), True))
    with pytest.raises(NotRealizableError):
        build_automorphism(ZStructureDescriptor(frozenset(), False))


def test_realization_json():
    r = build_automorphism(ZStructureDescriptor(frozenset({2, 3, 6}), True))
    doc = realization_to_json(r)
    assert doc["descriptor"] == {"lengths": [2, 3, 6], "chains": True}
    assert doc["matrix"]["rows"] == doc["matrix"]["cols"] == len(r.matrix)
    assert doc["blocks"][0] == {"label": "2", "offset": 0, "size": 1}
    assert doc["blocks"][-1]["label"] == "chain"


def _random_valid_descriptor(rng):
    # closed length sets inside 1..36, so the classification walk stays short
    while True:
        base = {rng.randrange(1, 37) for _ in range(rng.randrange(1, 4))}
        closed = lcm_closure(base)
        if all(v <= 36 for v in closed):
            return ZStructureDescriptor(closed, rng.random() < 0.5)


def test_random_descriptors_classify_cleanly():
    rng = random.Random(1234)
    for _ in range(50):
        d = _random_valid_descriptor(rng)
        r = build_automorphism(d)
        n = len(r.matrix)
        lengths = sorted(d.lengths)
        allowed = set(lengths) | {1} | ({CHAIN} if d.has_chains else set())
        for _ in range(5):
            v = tuple(rng.randrange(-3, 4) for _ in range(n))
            cls = classify_vector(r.matrix, v, lengths)
            assert cls in allowed
            # scaling a vector never changes its class
            for m in (2, 3):
                scaled = tuple(m * x for x in v)
                assert classify_vector(r.matrix, scaled, lengths) == cls


def test_every_requested_length_is_realized():
    rng = random.Random(4321)
    for _ in range(20):
        d = _random_valid_descriptor(rng)
        r = build_automorphism(d)
        n = len(r.matrix)
        lengths = sorted(d.lengths)
        for blk in r.blocks:
            got = classify_vector(r.matrix, _basis(n, blk.offset), lengths)
            assert got == blk.label


def test_periodic_vectors_have_dividing_periods():
    # every periodic vector's period divides the lcm of the lengths
    d = ZStructureDescriptor(frozenset({4, 6, 12}), False)
    r = build_automorphism(d)
    n = len(r.matrix)
    rng = random.Random(99)
    ell = 12
    for _ in range(40):
        v = tuple(rng.randrange(-2, 3) for _ in range(n))
        cls = classify_vector(r.matrix, v, [4, 6, 12])
        assert cls != CHAIN
        assert ell % cls == 0
        assert mat_vec(mat_pow(r.matrix, cls), v) == v


def test_chainless_descriptor_never_classifies_chain():
    d = ZStructureDescriptor(frozenset({2, 5, 10}), False)
    r = build_automorphism(d)
    rng = random.Random(5)
    for _ in range(60):
        v = tuple(rng.randrange(-4, 5) for _ in range(len(r.matrix)))
        assert classify_vector(r.matrix, v, [2, 5, 10]) != CHAIN


def test_power_minus_identity_dets_nonzero_on_chain():
    c = chain_block()
    for k in range(1, 33):
        assert det(mat_sub(mat_pow(c, k), identity(2))) != 0
