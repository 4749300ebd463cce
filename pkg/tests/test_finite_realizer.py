import random

import pytest

from autoreal.errors import BudgetExceededError, NotRealizableError
from autoreal.finite_realizer import (
    CYCLIC_MAX_N,
    FpMatrix2,
    check_auto_p2,
    check_cyclic,
    cyclic_structure_for_unit,
    cyclic_structure_oracle,
    cyclic_structures,
    gl2_oracle,
    gln_estimated_steps,
    gln_oracle,
    oracle_budget,
    p2_matrix_for_structure,
    p2_structures,
    realize_cyclic,
    realize_p2,
)
from autoreal.numtheory import euler_phi, units
from autoreal.structures import Permutation, format_structure, parse_structure, structure_of


def _names(structures):
    return sorted(format_structure(s) for s in structures)


def _conjugate(model, rng):
    """Random relabeling of a model permutation (same cycle structure)."""
    n = len(model)
    rel = list(range(n))
    rng.shuffle(rel)
    inv = [0] * n
    for i, v in enumerate(rel):
        inv[v] = i
    return Permutation(tuple(inv[model[rel[x]]] for x in range(n)))


def test_formula_fixtures():
    assert format_structure(cyclic_structure_for_unit(12, 5)) == "2^4 1^4"
    assert format_structure(cyclic_structure_for_unit(12, 7)) == "2^3 1^6"
    assert format_structure(cyclic_structure_for_unit(12, 11)) == "2^5 1^2"
    assert format_structure(cyclic_structure_for_unit(9, 2)) == "6^1 2^1 1^1"
    assert format_structure(cyclic_structure_for_unit(7, 3)) == "6^1 1^1"
    # k = 1 is the identity
    for n in (2, 9, 100):
        assert cyclic_structure_for_unit(n, 1).rows == ((1, n),)


def test_formula_rejects_bad_input():
    with pytest.raises(ValueError):
        cyclic_structure_for_unit(12, 3)
    with pytest.raises(ValueError):
        cyclic_structure_for_unit(1, 1)
    with pytest.raises(ValueError):
        cyclic_structure_oracle(12, 4)


def test_oracle_fixtures():
    assert format_structure(cyclic_structure_oracle(12, 7)) == "2^3 1^6"
    assert format_structure(cyclic_structure_oracle(2, 1)) == "1^2"


def test_formula_matches_oracle():
    for n in range(2, 121):
        for k in units(n):
            assert cyclic_structure_for_unit(n, k) == cyclic_structure_oracle(n, k), (n, k)


def test_cyclic_structures_fixtures():
    assert _names(cyclic_structures(12)) == ["1^12", "2^3 1^6", "2^4 1^4", "2^5 1^2"]
    assert _names(cyclic_structures(9)) == ["1^9", "2^4 1^1", "3^2 1^3", "6^1 2^1 1^1"]
    assert _names(cyclic_structures(2)) == ["1^2"]
    assert _names(cyclic_structures(7)) == ["1^7", "2^3 1^1", "3^2 1^1", "6^1 1^1"]


def test_cyclic_structures_bounded_by_unit_count():
    for n in range(2, 501):
        assert len(cyclic_structures(n)) <= euler_phi(n)


def test_cyclic_structure_totals():
    for n in range(2, 200):
        for cs in cyclic_structures(n):
            assert cs.total == n


def test_check_cyclic_positive():
    images = tuple((5 * x) % 12 for x in range(12))
    assert check_cyclic(Permutation(images)) == 5
    assert check_cyclic(Permutation(tuple(range(12)))) == 1


def test_check_cyclic_returns_smallest_multiplier():
    # structure 2^5 1^2 on 12 points belongs to k = 11 only
    images = tuple((11 * x) % 12 for x in range(12))
    assert check_cyclic(Permutation(images)) == 11
    # but the square structure 1^12 maps to 1 even though 5*5 = 1 mod 12
    assert check_cyclic(Permutation(tuple(range(12)))) == 1


def test_check_cyclic_negative():
    # four 3-cycles on 12 points: no multiplier produces this
    images = (1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9)
    assert check_cyclic(Permutation(images)) is None


def test_check_cyclic_rejects_single_point():
    with pytest.raises(ValueError):
        check_cyclic(Permutation((0,)))


def test_realize_cyclic_examples():
    w = realize_cyclic(Permutation((0, 2, 1)))
    assert w.n == 3 and w.multiplier == 2
    assert w.labeling[0] == 0

    w = realize_cyclic(Permutation(tuple(range(5))))
    assert w.multiplier == 1

    with pytest.raises(NotRealizableError):
        realize_cyclic(Permutation((1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9)))


def test_realize_cyclic_random_conjugates():
    rng = random.Random(404)
    for _ in range(60):
        n = rng.randrange(2, 120)
        k = rng.choice(units(n))
        model = [(k * x) % n for x in range(n)]
        perm = _conjugate(model, rng)
        w = realize_cyclic(perm)
        # defining property over the whole domain
        for a in range(n):
            assert w.labeling[perm(a)] == (w.multiplier * w.labeling[a]) % w.n
        assert sorted(w.labeling) == list(range(n))


def test_p2_structures_fixtures():
    assert _names(p2_structures(2)) == ["1^4", "2^1 1^2", "3^1 1^1"]
    p7 = p2_structures(7)
    assert len(p7) == 20
    for name in ("48^1 1^1", "7^6 1^7", "42^1 6^1 1^1", "2^24 1^1", "6^7 1^7", "1^49"):
        assert parse_structure(name) in p7, name


def test_p2_structures_rejects_bad_p():
    with pytest.raises(ValueError):
        p2_structures(4)
    with pytest.raises(ValueError):
        p2_structures(1009)


def test_p2_structure_totals():
    for p in (2, 3, 5, 7, 11, 13):
        for cs in p2_structures(p):
            assert cs.total == p * p


def test_gl2_oracle_matches_families():
    for p in (2, 3, 5):
        assert gl2_oracle(p) == p2_structures(p), p


def test_gl2_oracle_finds_fourth_powers_for_p3():
    # an order-4 matrix exists over Z_3 even though 4 does not divide p-1
    g3 = gl2_oracle(3)
    assert parse_structure("4^2 1^1") in g3
    assert parse_structure("4^1 2^2 1^1") not in g3


def test_gl2_oracle_rejects_large_prime():
    with pytest.raises(ValueError):
        gl2_oracle(17)
    with pytest.raises(ValueError):
        gl2_oracle(6)


def test_gln_oracle_small_dims():
    assert _names(gln_oracle(2, 1)) == ["1^2"]
    assert gln_oracle(2, 2) == gl2_oracle(2)
    assert gln_oracle(3, 2) == gl2_oracle(3)


def test_gln_oracle_budget():
    assert oracle_budget() == 10_000_000
    assert gln_estimated_steps(2, 3) < 100_000
    with pytest.raises(BudgetExceededError):
        gln_oracle(5, 3)
    with pytest.raises(BudgetExceededError):
        gln_oracle(2, 3, budget=100)


def test_gln_oracle_budget_env_override(monkeypatch):
    monkeypatch.setenv("AUTOREAL_ORACLE_BUDGET", "123")
    assert oracle_budget() == 123
    with pytest.raises(BudgetExceededError):
        gln_oracle(2, 2)
    monkeypatch.setenv("AUTOREAL_ORACLE_BUDGET", "bogus")
    with pytest.raises(ValueError):
        oracle_budget()


def test_cyclic_inside_p2():
    # every automorphism structure of Z_{p*p} occurs for Z_p x Z_p too
    for p in (2, 3, 5, 7):
        assert cyclic_structures(p * p) <= p2_structures(p)


def test_check_auto_p2_examples():
    neg = Permutation(tuple((-x) % 9 for x in range(9)))
    assert structure_of(neg).rows == ((2, 4), (1, 1))
    assert check_auto_p2(neg, 3)

    assert check_auto_p2(Permutation(tuple(range(25))), 5)

    # one 4-cycle plus two 2-cycles cannot happen over Z_3
    bad = Permutation((1, 2, 3, 0, 5, 4, 7, 6, 8))
    assert structure_of(bad).rows == ((4, 1), (2, 2), (1, 1))
    assert not check_auto_p2(bad, 3)

    with pytest.raises(ValueError):
        check_auto_p2(Permutation((0, 1, 2)), 3)
    with pytest.raises(ValueError):
        check_auto_p2(Permutation(tuple(range(16))), 4)


def test_fp_matrix_validation():
    FpMatrix2(3, ((1, 0), (0, 1)))
    with pytest.raises(ValueError):
        FpMatrix2(3, ((1, 2), (2, 1)))  # det = -3 = 0 mod 3
    with pytest.raises(ValueError):
        FpMatrix2(4, ((1, 0), (0, 1)))


def test_p2_matrix_fixtures():
    m = p2_matrix_for_structure(2, parse_structure("1^4"))
    assert m.entries == ((1, 0), (0, 1))

    m = p2_matrix_for_structure(7, parse_structure("7^6 1^7"))
    assert m.entries == ((1, 1), (0, 1))

    m = p2_matrix_for_structure(7, parse_structure("2^24 1^1"))
    assert m.entries == ((6, 0), (0, 6))

    m = p2_matrix_for_structure(2, parse_structure("3^1 1^1"))
    assert m.entries == ((0, 1), (1, 1))


def test_p2_matrix_order_48_generator():
    m = p2_matrix_for_structure(7, parse_structure("48^1 1^1"))
    (a, b), (c, d) = m.entries
    # char poly x^2 - tr*x + det must be irreducible over Z_7
    tr, dt = (a + d) % 7, (a * d - b * c) % 7
    assert all((t * t - tr * t + dt) % 7 for t in range(7))


def test_p2_matrix_every_structure():
    # each admissible structure gets a matrix whose real orbits match it
    from autoreal.finite_realizer import _fp2_images

    for p in (2, 3, 5, 7):
        for cs in p2_structures(p):
            m = p2_matrix_for_structure(p, cs)
            got = structure_of(Permutation(tuple(_fp2_images(p, m.entries))))
            assert got == cs, (p, format_structure(cs))


def test_p2_matrix_inadmissible():
    with pytest.raises(NotRealizableError):
        p2_matrix_for_structure(3, parse_structure("4^1 2^2 1^1"))
    with pytest.raises(NotRealizableError):
        p2_matrix_for_structure(2, parse_structure("2^2"))


def test_realize_p2_identity_labeling():
    w = realize_p2(Permutation((0, 1, 2, 3)), 2)
    assert w.matrix.entries == ((1, 0), (0, 1))
    assert w.labeling == ((0, 0), (1, 0), (0, 1), (1, 1))


def test_realize_p2_rejects_bad_input():
    with pytest.raises(ValueError):
        realize_p2(Permutation((0, 1, 2)), 3)
    with pytest.raises(NotRealizableError):
        realize_p2(Permutation((1, 0, 3, 2)), 2)


def test_realize_p2_random_conjugates():
    from autoreal.finite_realizer import _fp2_images

    rng = random.Random(777)
    done = 0
    while done < 60:
        p = rng.choice((2, 3, 5, 7))
        entries = tuple(tuple(rng.randrange(p) for _ in range(2)) for _ in range(2))
        if (entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0]) % p == 0:
            continue
        model = _fp2_images(p, entries)
        perm = _conjugate(model, rng)
        w = realize_p2(perm, p)
        (a, b), (c, d) = w.matrix.entries
        for pt in range(p * p):
            x, y = w.labeling[pt]
            assert w.labeling[perm(pt)] == ((a * x + b * y) % p, (c * x + d * y) % p)
        done += 1


def test_structure_invariant_under_gl_conjugation():
    # S A S^-1 and A act with the same cycle structure
    from autoreal.finite_realizer import _fp2_images

    rng = random.Random(54321)

    def rand_invertible(p):
        while True:
            e = tuple(tuple(rng.randrange(p) for _ in range(2)) for _ in range(2))
            if (e[0][0] * e[1][1] - e[0][1] * e[1][0]) % p:
                return e

    def inverse(p, e):
        (a, b), (c, d) = e
        dt = (a * d - b * c) % p
        inv = pow(dt, p - 2, p)
        return (((d * inv) % p, (-b * inv) % p), (((-c) * inv) % p, (a * inv) % p))

    def mul(p, e, f):
        (a, b), (c, d) = e
        (w, x), (y, z) = f
        return (
            ((a * w + b * y) % p, (a * x + b * z) % p),
            ((c * w + d * y) % p, (c * x + d * z) % p),
        )

    for _ in range(200):
        p = rng.choice((2, 3, 5))
        a = rand_invertible(p)
        s = rand_invertible(p)
        conj = mul(p, mul(p, s, a), inverse(p, s))
        sa = structure_of(Permutation(tuple(_fp2_images(p, a))))
        sc = structure_of(Permutation(tuple(_fp2_images(p, conj))))
        assert sa == sc


def test_cyclic_max_n_guard():
    with pytest.raises(ValueError):
        cyclic_structure_for_unit(CYCLIC_MAX_N + 1, 1)
