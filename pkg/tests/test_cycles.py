import math
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from artifact.cycles import (
    CleanCycle, DivisibilityFailure, GenericFiber, NotReduced, NotSymmetric,
    OutOfRange, RankMismatch, ZeroScale, convolve, curve_wedge_dim, free_fiber,
    gauss_degree_lower_bound, half_spin_identity_check, half_spin_split,
    raw_wedge_degree, scale_pushforward, support_inclusion_check,
    sym_wedge_alpha, sym_wedge_alpha_raw, wedge_alpha, wedge_alpha_raw,
)
from artifact.weights import stabilizer_count
from oracles import brute_signed_sums, brute_wedge


def pts(cycle):
    return cycle.as_fiber().counter()


def fib(points, k):
    return GenericFiber.from_points(points, k)


def test_free_fiber():
    assert free_fiber(3).counter() == {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1}
    assert free_fiber(2, True).support() == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    f = free_fiber(1, True)
    assert f.symmetric and f.degree == 2
    assert not free_fiber(2).symmetric


def test_convolve_examples():
    e12 = CleanCycle.of(free_fiber(2))
    c = convolve(e12, e12)
    assert pts(c) == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert c.degree == 4
    a = CleanCycle.of(free_fiber(2), base_dim=2)
    b = CleanCycle.of(free_fiber(2), base_dim=3)
    ((atom, _),) = convolve(a, b, g=10).terms
    assert atom.base_dim == 5
    a5 = CleanCycle.of(free_fiber(2), base_dim=5)
    ((atom, _),) = convolve(a5, a5, g=8).terms
    assert atom.base_dim == 7
    ((atom, _),) = convolve(CleanCycle.of(free_fiber(2), 2, finite_gauss=False), b, g=10).terms
    assert atom.base_dim is None
    with pytest.raises(RankMismatch):
        convolve(e12, CleanCycle.of(free_fiber(3)))


def test_scale_examples():
    c = CleanCycle.of(free_fiber(1, True))
    assert pts(scale_pushforward(c, 2)) == {(2,): 1, (-2,): 1}
    s = CleanCycle.of(free_fiber(3, True))
    assert scale_pushforward(s, -1) == s
    with pytest.raises(ZeroScale):
        scale_pushforward(s, 0)


small_points = st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=4)


def cyc(points, coef=1):
    return CleanCycle.of(fib(points, 2), coef=coef)


@given(small_points, small_points, small_points, st.integers(-3, 3).filter(bool))
@settings(max_examples=60, deadline=None)
def test_ring_laws(p, q, r, m):
    a, b, c = cyc(p), cyc(q), cyc(r)
    assert convolve(a, b).fiber_cycle() == convolve(b, a).fiber_cycle()
    assert convolve(convolve(a, b), c).fiber_cycle() == convolve(a, convolve(b, c)).fiber_cycle()
    assert convolve(a, CleanCycle.unit(2)).fiber_cycle() == a.fiber_cycle()
    assert convolve(a, b).degree == a.degree * b.degree
    lhs = scale_pushforward(convolve(a, b), m)
    rhs = convolve(scale_pushforward(a, m), scale_pushforward(b, m))
    assert lhs.fiber_cycle() == rhs.fiber_cycle()
    # distributivity and bilinear coefficients
    ab_c = convolve(a + b, c).fiber_cycle()
    assert ab_c == (convolve(a, c) + convolve(b, c)).fiber_cycle()
    half = cyc(p, Fraction(1, 2))
    assert convolve(half, b).degree == Fraction(a.degree * b.degree, 2)


def test_unit_keeps_base_dim():
    a = CleanCycle.of(free_fiber(3), base_dim=2)
    ((atom, _),) = convolve(a, CleanCycle.unit(3), g=6).terms
    assert atom.base_dim == 2


def test_wedge_examples():
    w = wedge_alpha(free_fiber(4), (1, 1))
    assert w.degree == 6
    assert pts(w) == {tuple(int(k in (i, j)) for k in range(4)): 1
                      for i in range(4) for j in range(i + 1, 4)}
    for n in range(1, 6):
        assert pts(wedge_alpha(free_fiber(n), (1,))) == free_fiber(n).counter()
        assert pts(wedge_alpha(free_fiber(n), (1,) * n)) == {(1,) * n: 1}
    w21 = wedge_alpha(free_fiber(3), (2, 1))
    assert pts(w21) == {tuple(2 * (k == i) + (k == j) for k in range(3)): 1
                        for i in range(3) for j in range(3) if i != j}


def test_wedge_errors():
    with pytest.raises(NotReduced):
        wedge_alpha(fib([(1, 0), (1, 0)], 2), (1,))
    with pytest.raises(OutOfRange):
        wedge_alpha(free_fiber(2), (1, 1, 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_wedge_against_brute_force(n):
    f = free_fiber(n)
    points = [p for p, _ in f.points]
    for alpha in [(1,) * r for r in range(1, n + 1)] + [(2, 1), (3, 1, 1), (2, 2, 1)]:
        if len(alpha) > n:
            continue
        raw = brute_wedge(points, alpha)
        assert wedge_alpha_raw(f, alpha) == raw
        nal = stabilizer_count(alpha)
        assert pts(wedge_alpha(f, alpha)) == Counter({p: m // nal for p, m in raw.items()})


def test_wedge_on_nonfree_fiber():
    # a generic-looking embedding still gives exact division by N(alpha)
    f = fib([(1, 0), (0, 1), (1, 1), (2, -1)], 2)
    w = wedge_alpha(f, (1, 1))
    raw = wedge_alpha_raw(f, (1, 1))
    assert sum(raw.values()) == 12 and w.degree == 6


def test_raw_wedge_degree():
    assert raw_wedge_degree(4, 2) == 12
    assert raw_wedge_degree(5, 1) == 5
    for n in range(1, 8):
        assert raw_wedge_degree(n, n) == math.factorial(n)
    for bad in ((3, 0), (3, 4)):
        with pytest.raises(OutOfRange):
            raw_wedge_degree(*bad)


@pytest.mark.parametrize("n", range(1, 9))
def test_wedge_degrees(n):
    f = free_fiber(n)
    for r in range(1, n + 1):
        assert wedge_alpha(f, (1,) * r).degree == math.comb(n, r)
        assert sum(wedge_alpha_raw(f, (1,) * r).values()) == raw_wedge_degree(n, r)


@pytest.mark.parametrize("n", range(1, 7))
def test_wedge_duality(n):
    f = free_fiber(n)
    s = (1,) * n
    for r in range(0, n + 1):
        low = wedge_alpha(f, (1,) * r).as_fiber() if r else fib([(0,) * n], n)
        high = wedge_alpha(f, (1,) * (n - r)).as_fiber() if n - r else fib([(0,) * n], n)
        assert high == low.negate().translate(s)


def test_sym_wedge_examples():
    w = sym_wedge_alpha(free_fiber(2, True), (1, 1))
    assert pts(w) == {(1, 1): 1, (1, -1): 1, (-1, 1): 1, (-1, -1): 1}
    for n in range(1, 5):
        f = free_fiber(n, True)
        assert pts(sym_wedge_alpha(f, (1,))) == f.counter()
    w3 = sym_wedge_alpha(free_fiber(3, True), (1, 1, 1))
    assert w3.degree == 8 == 2 ** 3 * math.comb(3, 3)


@pytest.mark.parametrize("n", range(1, 6))
def test_sym_wedge_against_brute_force(n):
    f = free_fiber(n, True)
    reps = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    for alpha in [(1,) * r for r in range(1, n + 1)] + [(2, 1)]:
        if len(alpha) > n:
            continue
        raw = brute_signed_sums(reps, alpha)
        assert sym_wedge_alpha_raw(f, alpha) == raw
        assert sym_wedge_alpha(f, alpha).degree == sum(raw.values()) // stabilizer_count(alpha)


@pytest.mark.parametrize("n", range(1, 7))
def test_sym_wedge_degrees(n):
    f = free_fiber(n, True)
    for r in range(1, n + 1):
        assert sym_wedge_alpha(f, (1,) * r).degree == 2 ** r * math.comb(n, r)


def test_sym_wedge_errors():
    with pytest.raises(NotSymmetric):
        sym_wedge_alpha(free_fiber(2), (1,))
    with pytest.raises(NotSymmetric):
        sym_wedge_alpha(fib([(0, 0), (1, 0), (-1, 0)], 2), (1,))
    with pytest.raises(NotReduced):
        sym_wedge_alpha(fib([(1, 0), (-1, 0), (1, 0), (-1, 0)], 2), (1,))


def test_half_spin_examples():
    plus, minus = half_spin_split(free_fiber(2, True))
    assert pts(plus) == {(1, 1): 1, (-1, -1): 1}
    assert pts(minus) == {(1, -1): 1, (-1, 1): 1}
    plus, minus = half_spin_split(free_fiber(3, True))
    assert plus.degree == minus.degree == 4
    assert plus.as_fiber().negate() == minus.as_fiber()
    plus, minus = half_spin_split(free_fiber(4, True))
    assert plus.degree == minus.degree == 8
    assert plus.as_fiber().symmetric and minus.as_fiber().symmetric
    with pytest.raises(OutOfRange):
        half_spin_split(free_fiber(1, True))


@pytest.mark.parametrize("n", range(2, 7))
def test_half_spin_partition(n):
    f = free_fiber(n, True)
    plus, minus = half_spin_split(f)
    assert plus.degree == minus.degree == 2 ** (n - 1)
    assert (1,) * n in plus.support()
    assert not plus.support() & minus.support()
    assert (plus + minus).fiber_cycle() == sym_wedge_alpha(f, (1,) * n).fiber_cycle()
    # duality of half-spins: self-dual for even n, swapped for odd n
    neg = plus.as_fiber().negate()
    assert neg == (plus if n % 2 == 0 else minus).as_fiber()


def test_half_spin_identity_n2_by_hand():
    plus, minus = half_spin_split(free_fiber(2, True))
    lhs = convolve(plus, plus) - scale_pushforward(plus, 2)
    assert lhs.fiber_cycle() == {(0, 0): 2}
    rhs = convolve(minus, minus) - scale_pushforward(minus, 2)
    assert rhs.fiber_cycle() == {(0, 0): 2}


@pytest.mark.parametrize("n", range(2, 7))
def test_half_spin_identity(n):
    assert half_spin_identity_check(n)


def test_half_spin_identity_is_not_trivial():
    # the convolution squares themselves differ; only the corrected sides agree
    plus, minus = half_spin_split(free_fiber(3, True))
    assert convolve(plus, plus).fiber_cycle() != convolve(minus, minus).fiber_cycle()


@pytest.mark.parametrize("n", range(2, 6))
def test_support_inclusion(n):
    assert support_inclusion_check(free_fiber(n, True), n)


def test_support_inclusion_errors():
    with pytest.raises(NotSymmetric):
        support_inclusion_check(free_fiber(3), 3)
    with pytest.raises(OutOfRange):
        support_inclusion_check(free_fiber(3, True), 4)


def test_curve_wedge_dim():
    assert curve_wedge_dim(3, 1) == 1
    assert curve_wedge_dim(3, 2) == 2
    assert curve_wedge_dim(3, 3) == 1
    assert curve_wedge_dim(3, 4) == 0
    for genus in range(2, 11):
        top = 2 * genus - 2
        vals = [curve_wedge_dim(genus, i) for i in range(top + 1)]
        assert vals == vals[::-1]
        assert vals[:genus] == list(range(genus))
        assert min(vals) >= 0
    with pytest.raises(OutOfRange):
        curve_wedge_dim(3, 5)


def test_gauss_degree_lower_bound():
    for g in range(2, 12):
        assert gauss_degree_lower_bound(g, 1) == 2 * g - 2
    assert gauss_degree_lower_bound(10, 2) == 8
    for g in range(4, 15):
        assert gauss_degree_lower_bound(g, g - 1) == 1
    with pytest.raises(OutOfRange):
        gauss_degree_lower_bound(5, 5)


def test_divisibility_failure_is_reachable_only_by_bad_input():
    from artifact.cycles import _divide
    with pytest.raises(DivisibilityFailure):
        _divide(Counter({(1,): 3}), (1, 1), 1)


def test_cycle_json():
    js = wedge_alpha(free_fiber(3), (1, 1)).to_json()
    assert js["ambient_rank"] == 3
    (term,) = js["terms"]
    assert term["coef"] == "1/1" and term["points"] == sorted(term["points"])
    assert len(term["points"]) == 3
