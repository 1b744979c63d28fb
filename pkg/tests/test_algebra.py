import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reslat import (
    CHAIN,
    FormatError,
    NotCongruenceError,
    NotResiduatedError,
    congruence_filters,
    congruence_to_filter,
    filter_to_congruence,
    lukasiewicz,
    make_algebra,
    partial_from_total,
    quotient,
    residuals_from_product,
    subalgebra_generated,
    tables_equal,
    trivial,
    validate,
    validate_morphism,
    validate_partial,
    vs_a,
    vs_b,
    vs_c,
    vs_k_triple,
    with_zero,
)
from reslat.algebra import CongruenceFilter, meet_table, join_table

from oracles import brute_force_congruences, brute_force_filters

ALL_FLAGS = ("lattice", "monoid", "residuation", "integral", "commutative", "chain")


def diamond():
    # 2x2 Goedel square: 0 < a, b < 1 with a, b incomparable, product = meet
    leq = [
        [1, 1, 1, 1],
        [0, 1, 0, 1],
        [0, 0, 1, 1],
        [0, 0, 0, 1],
    ]
    meet = [[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]]
    return make_algebra(product=meet, unit=3, order=leq, labels=("0", "a", "b", "1"))


def test_figure_chains_validate():
    for alg in (vs_a(), vs_b(), vs_c()):
        assert validate(alg, ALL_FLAGS).ok


def test_trivial_algebra_passes_everything():
    rep = validate(with_zero(trivial(), 0), ALL_FLAGS + ("zero-bounded",))
    assert rep.ok


def test_diamond_is_residuated_but_not_chain():
    alg = diamond()
    rep = validate(alg, ALL_FLAGS)
    assert rep.outcome("lattice").ok
    assert rep.outcome("residuation").ok
    assert rep.outcome("commutative").ok
    assert not rep.outcome("chain").ok
    assert rep.outcome("chain").witness == (1, 2)
    # Heyting negation on the square: a \ 0 = b
    assert alg.ldiv[1][0] == 2


def test_mutated_product_breaks_residuation():
    b = vs_b()
    product = [list(row) for row in b.product]
    product[1][2] = 0  # b*v was b
    broken = make_algebra(product=product, unit=b.unit, ldiv=b.ldiv, rdiv=b.rdiv)
    rep = validate(broken, ("residuation",))
    assert not rep.ok
    # oracle: least (x, y, z) where the three-way equivalence fails
    expected = next(
        (x, y, z)
        for x, y, z in itertools.product(range(4), repeat=3)
        if not (
            (product[x][y] <= z)
            == (y <= broken.ldiv[x][z])
            == (x <= broken.rdiv[y][z])
        )
    )
    assert rep.outcome("residuation").witness == expected == (1, 2, 0)


def test_validate_rejects_malformed_tables():
    with pytest.raises(FormatError):
        make_algebra(product=[[0, 0], [0]], unit=1)
    with pytest.raises(FormatError):
        make_algebra(product=[[0, 2], [0, 1]], unit=1)
    with pytest.raises(FormatError):
        make_algebra(product=[[0, 0], [0, 1]], unit=1, labels=("x", "x"))


def test_residuals_examples():
    b = vs_b()
    ldiv, rdiv = residuals_from_product(CHAIN, b.product, b.unit)
    assert ldiv == b.ldiv and rdiv == b.rdiv
    assert ldiv[1][0] == 1  # b \ u = b
    one = trivial()
    assert residuals_from_product(CHAIN, one.product, 0) == (((0,),), ((0,),))
    c = vs_c()
    ldiv, _ = residuals_from_product(CHAIN, c.product, c.unit)
    assert ldiv[3][1] == 2  # v \ d = c
    assert ldiv[2][1] == 3  # c \ d = v


def test_not_residuated_witness():
    # join as product with unit at the bottom: {y : max(1, y) <= 0} is empty
    product = [[max(x, y) for y in range(3)] for x in range(3)]
    with pytest.raises(NotResiduatedError) as exc:
        residuals_from_product(CHAIN, product, 0)
    assert exc.value.pair == (1, 0)


@settings(deadline=None, max_examples=60)
@given(st.data())
def test_residual_round_trip_on_corpus(small_chain_pool, data):
    alg = data.draw(st.sampled_from(small_chain_pool))
    order = CHAIN if alg.leq is None else alg.leq
    assert residuals_from_product(order, alg.product, alg.unit) == (alg.ldiv, alg.rdiv)


@settings(deadline=None, max_examples=60)
@given(st.data())
def test_commutative_iff_divisions_coincide(small_chain_pool, data):
    alg = data.draw(st.sampled_from(small_chain_pool))
    assert validate(alg, ("commutative",)).ok == (alg.ldiv == alg.rdiv)


# ---------------------------------------------------------------------------
# filters, congruences, quotients


def test_filters_of_b():
    b = vs_b()
    filters = congruence_filters(b)
    assert [F.sorted_members() for F in filters] == [(3,), (2, 3), (0, 1, 2, 3)]


def test_filters_of_trivial_and_l3():
    assert [F.sorted_members() for F in congruence_filters(trivial())] == [(0,)]
    assert [F.sorted_members() for F in congruence_filters(lukasiewicz(3))] == [(2,), (0, 1, 2)]


def test_filters_match_subset_scan_oracle(small_chain_pool):
    for alg in small_chain_pool:
        if alg.size > 6:
            continue
        assert [F.members for F in congruence_filters(alg)] == brute_force_filters(alg)


def test_filter_congruence_round_trip(small_chain_pool):
    for alg in small_chain_pool:
        for F in congruence_filters(alg):
            partition = filter_to_congruence(F)
            assert congruence_to_filter(alg, partition).members == F.members


def test_congruences_by_direct_search_match_filters(small_chain_pool):
    for alg in small_chain_pool:
        if alg.size > 5:
            continue
        via_filters = {filter_to_congruence(F) for F in congruence_filters(alg)}
        assert via_filters == set(brute_force_congruences(alg))


def test_filter_to_congruence_example():
    b = vs_b()
    F = CongruenceFilter(b, frozenset({2, 3}))
    assert filter_to_congruence(F) == ((0,), (1,), (2, 3))
    assert filter_to_congruence(CongruenceFilter(b, frozenset({3}))) == ((0,), (1,), (2,), (3,))
    assert filter_to_congruence(CongruenceFilter(b, frozenset(range(4)))) == ((0, 1, 2, 3),)


def test_congruence_to_filter_rejects_non_congruence():
    with pytest.raises(NotCongruenceError):
        congruence_to_filter(vs_b(), ((0, 3), (1,), (2,)))
    with pytest.raises(NotCongruenceError):
        congruence_to_filter(vs_b(), ((0, 1), (2,)))


def test_quotients_of_b():
    b = vs_b()
    filters = {F.sorted_members(): F for F in congruence_filters(b)}
    q = quotient(b, filters[(2, 3)])
    assert tables_equal(q, lukasiewicz(3))
    assert tables_equal(quotient(b, filters[(3,)]), b)
    assert quotient(b, filters[(0, 1, 2, 3)]).size == 1


def test_quotient_of_chain_is_chain(small_chain_pool):
    for alg in small_chain_pool:
        if alg.leq is not None:
            continue
        for F in congruence_filters(alg):
            q = quotient(alg, F)
            assert q.leq is None and validate(q, ("chain",)).ok
            assert q.size == len(filter_to_congruence(F))
            assert validate(q, ("lattice", "monoid", "residuation")).ok


def test_subalgebra_generated():
    b = vs_b()
    sub, inc = subalgebra_generated(b, {1})
    assert inc.map == (0, 1, 3)
    assert tables_equal(sub, lukasiewicz(3))
    assert validate_morphism(inc).ok

    sub0, inc0 = subalgebra_generated(b, set())
    assert sub0.size == 1 and inc0.map == (3,)

    subA, incA = subalgebra_generated(b, {2, 0})
    assert incA.map == (0, 2, 3)
    assert subA.product == vs_a().product and subA.ldiv == vs_a().ldiv


# ---------------------------------------------------------------------------
# partial algebras


def test_k_is_a_partial_irl():
    assert validate_partial(vs_k_triple().K).ok


def test_total_algebra_as_partial_reduces_to_validate(small_chain_pool):
    for alg in small_chain_pool[:8]:
        assert validate_partial(partial_from_total(alg)).ok == validate(
            alg, ("lattice", "monoid", "residuation", "integral")
        ).ok


def test_asymmetric_product_mask_fails_partial_monoid():
    K = vs_k_triple().K
    mask = [list(row) for row in K.product_mask]
    mask[2][1] = False  # clear c*d but keep d*c
    from reslat import make_partial

    broken = make_partial(
        product=K.product,
        unit=K.unit,
        product_mask=mask,
        ldiv=K.ldiv,
        ldiv_mask=K.ldiv_mask,
        rdiv=K.rdiv,
        rdiv_mask=K.rdiv_mask,
    )
    rep = validate_partial(broken)
    assert not rep.ok
    assert rep.first_failure().flag == "partial-monoid"


def test_zero_bounded_flag():
    b = with_zero(vs_b(), 0)
    assert validate(b, ("zero-bounded",)).ok
    assert not validate(with_zero(vs_b(), 1), ("zero-bounded",)).ok
    rep = validate(vs_b(), ("zero-bounded",))
    assert not rep.ok and rep.outcome("zero-bounded").detail == "no zero constant"


def test_meet_join_tables_on_diamond():
    alg = diamond()
    assert meet_table(alg)[1][2] == 0
    assert join_table(alg)[1][2] == 3
