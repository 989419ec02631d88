import itertools
from math import factorial, gcd

import pytest
from hypothesis import given, settings, strategies as st

from cycleq.class_graph import build_gamma
from cycleq.counting import p_count
from cycleq.equation_solver import (
    EquationInstance,
    InvalidParameters,
    NoSolution,
    block_partition,
    check_parameters,
    enumerate_solutions,
    min_left_exponent,
    solve_base,
)
from cycleq.oracle import count_equation_solutions
from cycleq.permutation import (
    Permutation,
    canonical_sigma,
    compose,
    identity,
    inverse,
    is_full_cycle,
    power,
)
from cycleq.zn_ring import divisors


def solves(sigma, k, l, xi):
    return compose(power(sigma, k), xi) == compose(xi, power(sigma, l))


def valid_pairs(n):
    """All (k, l) with k < n accepted by the solvability conditions."""
    return [(k, l) for k in range(1, n) for l in range(1, n)
            if check_parameters(n, k, l) is None]


def test_solve_base_examples():
    assert solve_base(5, 2, 1) == Permutation((1, 3, 5, 2, 4))
    assert solve_base(5, 1, 1) == identity(5)
    with pytest.raises(NoSolution):
        solve_base(6, 2, 1)


def test_solve_base_solvable_iff_coprime_up_to_12():
    for n in range(1, 13):
        sigma = canonical_sigma(n)
        for l in range(1, n + 1):
            if gcd(l, n) == 1:
                seen = set()
                for a in range(1, n + 1):
                    xi = solve_base(n, l, a)
                    assert xi(1) == a
                    assert solves(sigma, 1, l, xi)
                    seen.add(xi)
                # distinct anchors give distinct solutions
                assert len(seen) == n
            else:
                with pytest.raises(NoSolution):
                    solve_base(n, l, 1)


def test_solve_base_anchor_recursion():
    # the anchor propagates along sigma: xi(sigma^j(1)) == sigma^(j*l)(a)
    n, l, a = 7, 3, 4
    sigma = canonical_sigma(n)
    xi = solve_base(n, l, a)
    pos = 1
    for j in range(n):
        assert xi(pos) == power(sigma, j * l)(a)
        pos = sigma(pos)


def test_solve_base_input_validation():
    with pytest.raises(ValueError):
        solve_base(5, 2, 0)
    with pytest.raises(ValueError):
        solve_base(5, 0, 1)
    with pytest.raises(ValueError):
        solve_base(5, 2, 6)
    with pytest.raises(ValueError):
        solve_base(5, 2, 1, sigma=canonical_sigma(4))
    with pytest.raises(ValueError):
        solve_base(4, 3, 1, sigma=Permutation((2, 1, 4, 3)))


@settings(deadline=None)
@given(st.data())
def test_solve_base_with_random_full_cycles(data):
    n = data.draw(st.integers(min_value=2, max_value=9))
    ls = [l for l in range(1, n) if gcd(l, n) == 1]
    l = data.draw(st.sampled_from(ls))
    a = data.draw(st.integers(min_value=1, max_value=n))
    # a random full cycle: close a random arrangement into one loop
    arrangement = data.draw(st.permutations(list(range(1, n + 1))))
    images = [0] * n
    for i in range(n):
        images[arrangement[i] - 1] = arrangement[(i + 1) % n]
    sigma = Permutation(tuple(images))
    assert is_full_cycle(sigma)
    xi = solve_base(n, l, a, sigma)
    assert solves(sigma, 1, l, xi)
    assert xi(1) == a


def test_check_parameters_accepts_the_graph_vertices():
    # the valid (k,l) pairs with k < n are exactly the non-maximal graph
    # vertices, and (n,n) is the one valid pair with k = n
    for n in range(1, 41):
        g = build_gamma(n)
        expected = {(v.k, v.l) for v in g.vertices if v.k < n}
        assert set(valid_pairs(n)) == expected
        assert check_parameters(n, n, n) is None
        for l in range(1, n):
            assert check_parameters(n, n, l) is not None


def test_check_parameters_diagnostics():
    assert check_parameters(6, 1, 2) is not None   # 2 not coprime-reachable
    assert "coprime" in check_parameters(6, 1, 2)
    assert "divide" in check_parameters(8, 3, 3)   # 3 does not divide 8
    assert "divide" in check_parameters(8, 2, 3)   # 2 does not divide 3
    assert "1 <= k <= l" in check_parameters(8, 4, 2)
    assert check_parameters(6, 1, 5) is None
    assert check_parameters(12, 2, 10) is None


def test_coprime_multiplier_condition_equals_cofactor_coprimality():
    # the exists-s condition used by check_parameters agrees with the closed
    # form GCD(l/k, n/k) == 1 wherever k | n and k | l; checked empirically
    for n in range(2, 61):
        for k in divisors(n)[:-1]:
            for t in range(1, n // k):
                l = k * t
                literal = any(gcd(s, n) == 1 and s * k % n == l
                              for s in range(1, n))
                assert literal == (gcd(t, n // k) == 1), (n, k, l)


def test_enumerate_4_2_2_matches_brute_force_set():
    sols = enumerate_solutions(EquationInstance(4, 2, 2))
    assert len(sols) == 8 == p_count(4, 2)
    sigma = canonical_sigma(4)
    brute = {
        Permutation(p)
        for p in itertools.permutations(range(1, 5))
        if solves(sigma, 2, 2, Permutation(p))
    }
    assert set(sols) == brute
    assert len(set(sols)) == len(sols)


def test_enumerate_3_1_2():
    sols = enumerate_solutions(EquationInstance(3, 1, 2))
    assert len(sols) == 3 == p_count(3, 1)


def test_enumerate_trivial_equation_is_all_of_sn():
    sols = enumerate_solutions(EquationInstance(2, 2, 2))
    assert {s.images for s in sols} == {(1, 2), (2, 1)}
    assert len(enumerate_solutions(EquationInstance(1, 1, 1))) == 1


def test_enumerate_is_deterministic():
    a = enumerate_solutions(EquationInstance(6, 2, 2))
    b = enumerate_solutions(EquationInstance(6, 2, 2))
    assert a == b


def test_enumerate_counts_and_membership_up_to_8():
    for n in range(2, 9):
        sigma = canonical_sigma(n)
        for k, l in valid_pairs(n):
            sols = enumerate_solutions(EquationInstance(n, k, l))
            assert len(sols) == p_count(n, k)
            assert len(set(sols)) == len(sols)
            assert count_equation_solutions(n, k, l) == len(sols)
            for xi in sols:
                assert solves(sigma, k, l, xi)


def test_enumerate_rejects_invalid_pairs():
    with pytest.raises(InvalidParameters):
        enumerate_solutions(EquationInstance(6, 1, 2))
    with pytest.raises(InvalidParameters):
        enumerate_solutions(EquationInstance(8, 2, 3))
    with pytest.raises(InvalidParameters):
        enumerate_solutions(EquationInstance(6, 4, 4))
    with pytest.raises(InvalidParameters) as exc:
        enumerate_solutions(EquationInstance(6, 1, 3))
    assert "coprime" in str(exc.value)


def test_scaling_closure():
    # a solution for (k,l) also solves the equation with both exponents
    # scaled by s; spot-check s = 2 and 3 over everything enumerated
    for n in range(2, 9):
        sigma = canonical_sigma(n)
        for k, l in valid_pairs(n):
            for xi in enumerate_solutions(EquationInstance(n, k, l)):
                for s in (2, 3):
                    assert solves(sigma, s * k, s * l, xi)


def test_distinct_l_gives_disjoint_solution_sets():
    for n in range(2, 9):
        by_k = {}
        for k, l in valid_pairs(n):
            by_k.setdefault(k, []).append(
                set(enumerate_solutions(EquationInstance(n, k, l))))
        for k, sets in by_k.items():
            for s1, s2 in itertools.combinations(sets, 2):
                assert not (s1 & s2)


def test_block_partition_examples():
    part = block_partition(4, 2)
    assert part.anchors == (1, 2)
    assert part.blocks == ((1, 3), (2, 4))
    part = block_partition(6, 3)
    assert part.blocks == ((1, 4), (2, 5), (3, 6))


def test_block_partition_invariants_up_to_60():
    for n in range(1, 61):
        sigma = canonical_sigma(n)
        for k in divisors(n):
            part = block_partition(n, k, sigma)
            assert part.anchors[0] == 1
            assert len(part.blocks) == k
            covered = set()
            sig_k = power(sigma, k)
            for anchor, block in zip(part.anchors, part.blocks):
                assert len(block) == n // k
                assert block[0] == anchor
                # anchor is the least point not covered so far
                assert anchor == min(set(range(1, n + 1)) - covered)
                # the block is the anchor's orbit under sigma^k
                pos = anchor
                for member in block:
                    assert member == pos
                    pos = sig_k(pos)
                covered |= set(block)
            assert covered == set(range(1, n + 1))


def test_block_partition_preconditions():
    with pytest.raises(ValueError):
        block_partition(6, 4)
    with pytest.raises(ValueError):
        block_partition(6, 0)


def test_min_left_exponent_examples():
    assert min_left_exponent(identity(5)) == (1, 1)
    assert min_left_exponent(Permutation((1, 3, 5, 2, 4))) == (1, 2)
    # [2,1,4,3] satisfies sigma*xi == xi*sigma^3, so the minimum k is 1
    assert min_left_exponent(Permutation((2, 1, 4, 3))) == (1, 3)
    # no relation at all: a member of the sole size-16 class at n=4
    assert min_left_exponent(Permutation((2, 1, 3, 4))) is None


def test_min_left_exponent_none_is_genuine():
    # double-check the None case by scanning every pair explicitly
    xi = Permutation((2, 1, 3, 4))
    sigma = canonical_sigma(4)
    for k in range(1, 4):
        for l in range(1, 4):
            assert not solves(sigma, k, l, xi)


def _mle_by_power_lookup(x, sig_pows, pow_index, n):
    """Independent reimplementation: sigma^l == inverse(xi) * (sigma^k xi)."""
    inv = [0] * n
    for i, v in enumerate(x):
        inv[v] = i
    for k in range(1, n):
        y = tuple(x[sig_pows[k][i]] for i in range(n))
        rho = tuple(y[inv[i]] for i in range(n))
        l = pow_index.get(rho)
        if l is not None and 1 <= l < n:
            return (k, l)
    return None


def test_min_left_exponent_against_independent_method():
    for n in range(2, 7):
        sigma = canonical_sigma(n)
        sig0 = tuple(v - 1 for v in sigma.images)
        sig_pows = [tuple(range(n))]
        for _ in range(n - 1):
            sig_pows.append(tuple(sig0[v] for v in sig_pows[-1]))
        pow_index = {p: e for e, p in enumerate(sig_pows)}
        for perm in itertools.permutations(range(n)):
            xi = Permutation(tuple(v + 1 for v in perm))
            expected = _mle_by_power_lookup(perm, sig_pows, pow_index, n)
            assert min_left_exponent(xi, sigma) == expected


def test_min_left_exponent_returns_minimal_k():
    # whatever comes back must hold, and nothing below it may hold
    sigma = canonical_sigma(6)
    for perm in itertools.permutations(range(1, 7)):
        xi = Permutation(perm)
        res = min_left_exponent(xi, sigma)
        if res is None:
            continue
        k, l = res
        assert solves(sigma, k, l, xi)
        for smaller in range(1, k):
            for any_l in range(1, 6):
                assert not solves(sigma, smaller, any_l, xi)


def test_equation_instance_validation():
    with pytest.raises(ValueError):
        EquationInstance(4, 0, 2)
    with pytest.raises(ValueError):
        EquationInstance(4, 2, 5)
    with pytest.raises(ValueError):
        EquationInstance(4, 2, 2, sigma=Permutation((2, 1, 4, 3)))
    inst = EquationInstance(4, 2, 2)
    assert inst.sigma == canonical_sigma(4)
