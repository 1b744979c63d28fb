import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reslat import (
    Budget,
    BudgetExceededError,
    ChainFlags,
    CompletionProblem,
    FormatError,
    check_identity,
    complete_table,
    count_chains,
    enumerate_chains,
    iter_completions,
    parse_identity,
    validate,
    vs_b,
)


def test_trivial_completion():
    alg = complete_table(CompletionProblem(1, 0, {}, {}, {}))
    assert alg is not None and alg.size == 1


def test_blanked_cell_of_b_is_forced_back():
    b = vs_b()
    pins = {
        (x, y): b.product[x][y]
        for x in range(4)
        for y in range(4)
        if (x, y) != (1, 1)
    }
    ldiv_pins = {(x, z): b.ldiv[x][z] for x in range(4) for z in range(4)}
    rdiv_pins = {(x, z): b.rdiv[x][z] for x in range(4) for z in range(4)}
    problem = CompletionProblem(4, 3, pins, ldiv_pins, rdiv_pins, commutative=True, integral=True)
    solutions = list(iter_completions(problem))
    assert len(solutions) == 1
    assert tuple(map(tuple, solutions[0])) == b.product  # b*b = u restored


def test_unit_product_pins_below_unit_are_unsat():
    # x*y = 1 for x, y < 1 contradicts integrality
    problem = CompletionProblem(3, 2, {(1, 1): 2}, {}, {}, integral=True)
    assert complete_table(problem) is None


def test_budget_exceeded():
    problem = CompletionProblem(6, 5, {}, {}, {}, integral=True)
    with pytest.raises(BudgetExceededError):
        list(iter_completions(problem, Budget(max_nodes=3)))


def test_enumeration_counts():
    assert count_chains(1, ChainFlags()) == 1
    assert count_chains(2, ChainFlags(integral=True)) == 1
    assert count_chains(3, ChainFlags(integral=True, commutative=True)) == 2
    assert count_chains(3, ChainFlags()) == 3  # one extra with the unit inside


def test_three_element_commutative_integral_chains():
    algs = list(enumerate_chains(3, ChainFlags(integral=True, commutative=True)))
    coatom_squares = sorted(alg.product[1][1] for alg in algs)
    assert coatom_squares == [0, 1]  # coatom squares to bottom, or is idempotent


def test_enumeration_matches_naive_oracle_n_le_3():
    from oracles import naive_chains

    for n in (1, 2, 3):
        for commutative in (False, True):
            got = {alg.product for alg in enumerate_chains(n, ChainFlags(integral=True, commutative=commutative))}
            assert got == set(naive_chains(n, integral=True, commutative=commutative))


def test_enumeration_matches_naive_oracle_n_4_commutative(naive_ci4):
    got = {alg.product for alg in enumerate_chains(4, ChainFlags(integral=True, commutative=True))}
    assert got == naive_ci4
    assert count_chains(4, ChainFlags(integral=True, commutative=True)) == len(naive_ci4) == 6


def test_enumeration_matches_naive_oracle_n_4_integral(naive_i4):
    got = {alg.product for alg in enumerate_chains(4, ChainFlags(integral=True))}
    assert got == naive_i4
    assert count_chains(4, ChainFlags(integral=True)) == len(naive_i4) == 8


def test_every_streamed_algebra_validates_with_its_flags():
    flags = ChainFlags(integral=True, commutative=True)
    for n in (1, 2, 3, 4):
        for alg in enumerate_chains(n, flags):
            assert validate(alg, ("lattice", "monoid", "residuation", "integral", "commutative", "chain")).ok


def test_divisible_flag_matches_div_identity():
    div = parse_identity("div")
    with_flag = {a.product for a in enumerate_chains(4, ChainFlags(integral=True, commutative=True, divisible=True))}
    by_filter = {
        a.product
        for a in enumerate_chains(4, ChainFlags(integral=True, commutative=True))
        if check_identity(a, div).holds
    }
    assert with_flag == by_filter
    assert len(with_flag) == 4  # L4, G4, and the two mixed ordinal sums


def test_potent_flag():
    pot = parse_identity("potent:2")
    with_flag = {a.product for a in enumerate_chains(4, ChainFlags(integral=True, commutative=True, k_potent=2))}
    by_filter = {
        a.product
        for a in enumerate_chains(4, ChainFlags(integral=True, commutative=True))
        if check_identity(a, pot).holds
    }
    assert with_flag == by_filter


def test_pointed_flag_designates_bottom():
    for alg in enumerate_chains(3, ChainFlags(integral=True, pointed=True)):
        assert alg.zero == 0
        assert validate(alg, ("zero-bounded",)).ok


def test_streams_are_deterministic():
    flags = ChainFlags(integral=True)
    first = [a.product for a in enumerate_chains(4, flags)]
    second = [a.product for a in enumerate_chains(4, flags)]
    assert first == second


def test_all_solutions_mode_equals_enumeration():
    flags = ChainFlags(integral=True, commutative=True)
    streamed = [a.product for a in enumerate_chains(4, flags)]
    problem = CompletionProblem(4, 3, {}, {}, {}, commutative=True, integral=True)
    direct = [tuple(map(tuple, t)) for t in iter_completions(problem)]
    assert streamed == direct


@settings(deadline=None, max_examples=80)
@given(st.data())
def test_partial_pins_of_valid_chains_always_complete(small_chain_pool, data):
    alg = data.draw(st.sampled_from([a for a in small_chain_pool if a.leq is None]))
    n = alg.size
    cells = [(x, y) for x in range(n) for y in range(n)]
    kept = data.draw(st.sets(st.sampled_from(cells))) if n > 1 else set()
    with_divs = data.draw(st.booleans())
    problem = CompletionProblem(
        size=n,
        unit=alg.unit,
        product_pins={c: alg.product[c[0]][c[1]] for c in kept},
        ldiv_pins={c: alg.ldiv[c[0]][c[1]] for c in cells} if with_divs else {},
        rdiv_pins={c: alg.rdiv[c[0]][c[1]] for c in cells} if with_divs else {},
        integral=alg.unit == n - 1,
    )
    first = complete_table(problem)
    assert first is not None  # the original table is one completion
    assert validate(first, ("lattice", "monoid", "residuation", "chain")).ok
    for (x, y), v in problem.product_pins.items():
        assert first.product[x][y] == v
    if with_divs:
        assert first.ldiv == alg.ldiv and first.rdiv == alg.rdiv


def test_size_validation():
    with pytest.raises(FormatError):
        count_chains(0, ChainFlags())
    with pytest.raises(FormatError):
        CompletionProblem(3, 5, {}, {}, {}).check_well_formed()
    with pytest.raises(FormatError):
        CompletionProblem(3, 1, {}, {}, {}, integral=True).check_well_formed()
