import random
from fractions import Fraction as F

import pytest

from wbcat.affine import (
    OmegaRangeError,
    OmegaSpec,
    check_relation,
    element_for_word,
    multiply,
    push_dot,
    reduce,
    w_coeff,
)
from wbcat.diagrams import (
    DecoratedElement,
    Monomial,
    all_orseqs,
    enumerate_diagrams,
    generator,
    identity_monomial,
    is_regular,
    orseq,
    rt_counts,
)
from wbcat.exact import LaurentSeries, MultiPoly, series_mul, series_star
from wbcat.glrep import GlContext, apply_word as rep_word, represent, spanning_vectors
from wbcat.relations import relation_ids, instances

OM = OmegaSpec.from_list(
    [F(3, 2), F(-5, 3), F(7), F(11, 5), F(2), F(-3), F(13, 7), F(4), F(-9, 2), F(1), F(6), F(8)]
)


def objects_of_size(n):
    out = []
    for r in range(n + 1):
        out.extend(orseq(o) for o in all_orseqs(r, n - r))
    return out


# ---------------------------------------------------------------------------
# Omega value sources.


def test_omega_list_and_range_error():
    om = OmegaSpec.from_list([2, 3])
    assert om(0) == 2 and om(1) == 3
    with pytest.raises(OmegaRangeError):
        om(2)


def test_omega_trivial_and_mn_delta():
    om = OmegaSpec.trivial(4)
    assert [om(k) for k in range(4)] == [4, 8, 16, 32]
    om = OmegaSpec.from_mn_delta(2, 2, 0)
    assert om(0) == 4 and om(1) == 8
    # recursion with beta1 = 2, beta2 = 0: om_k = 2 om_{k-1}
    assert om(2) == 16 and om(5) == 128
    om = OmegaSpec.from_mn_delta(1, 1, 0)
    assert [om(k) for k in range(6)] == [2, 2, 2, 2, 2, 2]


def test_omega_json_round_trip():
    for om in (
        OmegaSpec.from_list([F(1, 2), 3]),
        OmegaSpec.from_mn_delta(3, 2, -1),
        OmegaSpec.trivial(5),
    ):
        assert OmegaSpec.from_json(om.to_json()) == om
        assert OmegaSpec.from_json(om.to_json())(1) == om(1)


# ---------------------------------------------------------------------------
# Product normal forms: the worked single-strand identities.


def test_crossing_dot_exchange():
    A = orseq((1, 1))
    s1 = generator("s", A, 1)
    y1 = generator("y", A, 1)
    y2 = generator("y", A, 2)
    assert multiply(s1, y1, OM) == multiply(y2, s1, OM) - DecoratedElement.unit(A)
    assert multiply(multiply(s1, y1, OM), s1, OM) == y2 - s1


def test_hatted_crossing_dot_exchange():
    B = orseq((1, -1))
    Bs = orseq((-1, 1))
    sh1 = generator("sh", B, 1)
    eh1 = generator("eh", B, 1)
    y1 = generator("y", B, 1)
    y2s = generator("y", Bs, 2)
    assert multiply(sh1, y1, OM) == multiply(y2s, sh1, OM) + eh1


def test_contraction_values():
    # e1 y1^k e1 = omega_k e1
    B = orseq((1, -1))
    e1 = generator("e", B, 1)
    y1 = generator("y", B, 1)
    x = e1
    for k in range(6):
        assert multiply(e1, x, OM) == e1.scale(OM(k))
        x = multiply(y1, x, OM)


def test_cap_kills_dot_sum_and_flip():
    B = orseq((1, -1))
    e1 = generator("e", B, 1)
    y1 = generator("y", B, 1)
    y2 = generator("y", B, 2)
    assert multiply(y1 + y2, e1, OM).is_zero()
    assert multiply(e1, y1 + y2, OM).is_zero()
    assert multiply(y2, e1, OM) == multiply(y1, e1, OM).scale(-1)


def test_reduce_rehomes_illegal_dots():
    B = orseq((1, -1))
    e1 = generator("e", B, 1)
    mono = next(iter(e1.terms))
    # a dot stored on the top-right arc endpoint is illegal
    bad = Monomial(mono.diagram, mono.gamma, (0, 1))
    el = DecoratedElement.from_monomial(bad)
    red = reduce(el, OM)
    assert red == DecoratedElement.from_monomial(
        Monomial(mono.diagram, mono.gamma, (1, 0)), -1
    )
    assert reduce(red, OM) == red


# ---------------------------------------------------------------------------
# W-series coefficients.


def test_w_coeff_base_prefix_gives_omega():
    B = orseq((1, -1))
    for k in range(6):
        p = w_coeff(B, 1, k, OM)
        assert p.is_constant() and p.constant_term() == OM(k)


def test_w_coeff_k0_is_omega0_everywhere():
    for A in [(1, -1), (-1, 1), (1, 1, -1), (1, -1, 1), (-1, -1, 1), (-1, 1, -1)]:
        A = orseq(A)
        for i in range(1, len(A)):
            if A[i - 1] != A[i]:
                p = w_coeff(A, i, 0, OM)
                assert p.is_constant() and p.constant_term() == OM(0)


def test_w_coeff_degree_bound():
    for A in [(1, 1, -1), (1, -1, 1), (-1, 1, -1, 1)]:
        A = orseq(A)
        for i in range(1, len(A)):
            if A[i - 1] == A[i]:
                continue
            for k in range(1, 7):
                assert w_coeff(A, i, k, OM).total_degree() <= k - 1


def test_w_coeff_requires_opposite_orientations():
    with pytest.raises(ValueError):
        w_coeff((1, 1), 1, 0, OM)


def test_starred_prefix_matches_series_involution():
    # W-series on (-1, ...) is the involution image of the series on (1, ...)
    K = 7
    w1 = LaurentSeries.from_rationals([OM(k) for k in range(K)])
    starred = series_star(w1)
    B = orseq((-1, 1))
    for k in range(K - 1):
        p = w_coeff(B, 1, k, OM)
        assert p.is_constant() and p.constant_term() == starred[k].constant_term()


def test_straightening_functional_equation():
    # (W_2(u) + u) ((u - y1)^2 - 1) == (W_1(u) + u) (u - y1)^2 as series,
    # rewritten with nonnegative powers of 1/u only.
    K = 8
    one = MultiPoly.const(1, 1)
    y = MultiPoly.var(1, 1)
    S1 = LaurentSeries(1, [one] + [MultiPoly.const(1, OM(k)) for k in range(K)])
    A = orseq((1, 1, -1))
    S2 = LaurentSeries(
        1, [one] + [w_coeff(A, 2, k, OM).extend(1) for k in range(K)]
    )
    # (1 - y/u)^2 and (1 - y/u)^2 - 1/u^2
    sq = LaurentSeries(1, [one, y.scale(-2), y * y] + [MultiPoly.zero(1)] * (K - 2))
    sq_minus = LaurentSeries(
        1, [one, y.scale(-2), y * y - one] + [MultiPoly.zero(1)] * (K - 2)
    )
    lhs = series_mul(S2, sq_minus)
    rhs = series_mul(S1, sq)
    assert lhs.truncate(K - 2) == rhs.truncate(K - 2)


def test_w_coeff_matches_representation_contraction():
    # e_i y_i^k e_i acting on the trivial module equals the w-coefficient
    # polynomial in the lower dots acting, for every mixed prefix.
    for N in (2, 3):
        ctx = GlContext.trivial(N)
        om = OmegaSpec.trivial(N)
        for A in [(1, -1), (-1, 1), (1, 1, -1), (1, -1, 1), (-1, -1, 1)]:
            A = orseq(A)
            for i in range(1, len(A)):
                if A[i - 1] == A[i]:
                    continue
                for k in range(4):
                    poly = w_coeff(A, i, k, om)
                    lhs_word = [("e", i)] + [("y", i)] * k + [("e", i)]
                    for v in spanning_vectors(ctx, A, max_deg=0):
                        lv = rep_word(lhs_word, v)
                        rv = lv.scale(0)
                        for exp, c in poly.coeffs.items():
                            w = []
                            for j, e in enumerate(exp, start=1):
                                w += [("y", j)] * e
                            w += [("e", i)]
                            rv = rv + rep_word(w, v).scale(c)
                        assert lv == rv


def test_w_coeff_matches_parabolic_contraction():
    ctx = GlContext.parabolic(2, 2, 1)
    om = OmegaSpec.from_mn_delta(2, 2, 1)
    for A in [(1, -1), (-1, 1), (1, 1, -1)]:
        A = orseq(A)
        for i in range(1, len(A)):
            if A[i - 1] == A[i]:
                continue
            for k in range(3):
                poly = w_coeff(A, i, k, om)
                lhs_word = [("e", i)] + [("y", i)] * k + [("e", i)]
                for v in spanning_vectors(ctx, A, max_deg=1):
                    lv = rep_word(lhs_word, v)
                    rv = lv.scale(0)
                    for exp, c in poly.coeffs.items():
                        w = []
                        for j, e in enumerate(exp, start=1):
                            w += [("y", j)] * e
                        w += [("e", i)]
                        rv = rv + rep_word(w, v).scale(c)
                    assert lv == rv


# ---------------------------------------------------------------------------
# Relations hold in the rewriting engine.


def test_all_relations_reduce_to_zero():
    for n in (2, 3):
        for A in objects_of_size(n):
            for rid in relation_ids():
                if instances(rid, A):
                    assert check_relation(A, rid, OM), (A, rid)


def test_relations_on_a_wider_object():
    A = orseq((1, -1, 1, -1))
    for rid in relation_ids():
        if instances(rid, A):
            assert check_relation(A, rid, OM), rid


def test_check_relation_rejects_empty():
    with pytest.raises(ValueError):
        check_relation((1, 1), "cap_sq", OM)


# ---------------------------------------------------------------------------
# Products: regularity, representation cross-check, associativity, degree.


def random_monomial(rng, A, B, maxdot=2):
    D = rng.choice(enumerate_diagrams(A, B))
    n = D.n
    gamma = [0] * n
    eta = [0] * n
    for i in range(1, n + 1):
        if D.bottom_kind(i) != "arcL":
            gamma[i - 1] = rng.randrange(maxdot + 1)
        if D.top_kind(i) == "arcL":
            eta[i - 1] = rng.randrange(maxdot + 1)
    return Monomial(D, gamma, eta)


def test_products_match_representation():
    rng = random.Random(11)
    N = 3
    ctx = GlContext.trivial(N)
    om = OmegaSpec.trivial(N)
    for trial in range(50):
        n = rng.choice([2, 3])
        group = objects_of_size(n)
        A, B, C = rng.choice(group), rng.choice(group), rng.choice(group)
        if rt_counts(A) != rt_counts(B) or rt_counts(B) != rt_counts(C):
            continue
        x = DecoratedElement.from_monomial(random_monomial(rng, B, C))
        y = DecoratedElement.from_monomial(random_monomial(rng, A, B))
        prod = multiply(x, y, om)
        assert all(is_regular(m) for m in prod.terms)
        for v in spanning_vectors(ctx, A, max_deg=0):
            assert represent(prod, v) == represent(x, represent(y, v))


def test_associativity_sampled():
    rng = random.Random(5)
    om = OM
    group = [o for o in objects_of_size(2) if rt_counts(o) == (1, 1)]
    for trial in range(30):
        A, B, C, D_ = (rng.choice(group) for _ in range(4))
        x = DecoratedElement.from_monomial(random_monomial(rng, C, D_))
        y = DecoratedElement.from_monomial(random_monomial(rng, B, C))
        z = DecoratedElement.from_monomial(random_monomial(rng, A, B))
        assert multiply(multiply(x, y, om), z, om) == multiply(x, multiply(y, z, om), om)


def test_degree_filtration():
    rng = random.Random(3)
    group = [o for o in objects_of_size(2) if rt_counts(o) == (1, 1)]
    for trial in range(40):
        A, B, C = (rng.choice(group) for _ in range(3))
        x = DecoratedElement.from_monomial(random_monomial(rng, B, C))
        y = DecoratedElement.from_monomial(random_monomial(rng, A, B))
        prod = multiply(x, y, OM)
        if not prod.is_zero():
            assert prod.degree() <= x.degree() + y.degree()


def test_unit_is_neutral():
    rng = random.Random(9)
    group = objects_of_size(3)
    for trial in range(10):
        A, B = rng.choice(group), rng.choice(group)
        if rt_counts(A) != rt_counts(B):
            continue
        x = DecoratedElement.from_monomial(random_monomial(rng, A, B))
        assert multiply(x, DecoratedElement.unit(A), OM) == x
        assert multiply(DecoratedElement.unit(B), x, OM) == x


def test_push_dot_identity_strand():
    A = orseq((1, 1, -1))
    m = identity_monomial(A)
    el = push_dot(2, m, OM)
    assert el == DecoratedElement.from_monomial(
        Monomial(m.diagram, (0, 1, 0), (0, 0, 0))
    )
