"""End-to-end checks off the main fixture path: prime fields, longer relations."""

from gradedquiver import GF, QQ, Quiver, GradedAlgebra, standard_module
from gradedquiver.presentations import graded_dimension
from gradedquiver.artheory import (almost_split_sequence, verify_almost_split,
                                   ar_formula_check)

from conftest import make_fix_d, rel


def S(alg, v, s=0):
    return standard_module(alg, "S", v, s)


def test_prime_field_sequence_and_formula():
    fd5 = make_fix_d(field=GF(5))
    seq = almost_split_sequence(S(fd5, "2"), "ending")
    ok, failures = verify_almost_split(seq)
    assert ok, failures
    r = ar_formula_check(S(fd5, "2"), S(fd5, "1", -1))
    assert r["formula1_holds"] and r["formula2_holds"]
    r2 = ar_formula_check(S(fd5, "3"), S(fd5, "3"))
    assert r2["formula1_holds"] and r2["formula2_holds"]


def chain_with_cubic_relation():
    q = Quiver(["1", "2", "3", "4"],
               [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")])
    return GradedAlgebra(q, QQ, [rel(q, [(1, ("c", "b", "a"))])])


def test_degree_three_relation_pieces():
    alg = chain_with_cubic_relation()
    assert alg.dim_piece(3, "1", "4") == 0
    assert alg.dim_piece(2, "1", "3") == 1
    assert alg.dim_piece(2, "2", "4") == 1
    P1 = standard_module(alg, "P", "1", 0, window=(0, 4))
    assert P1.dims == {(0, "1"): 1, (1, "2"): 1, (2, "3"): 1}
    assert P1.is_exact


def test_loop_fixture_homological_dims(fix_a):
    # hand-checked: the b-strand of rad P_1 is projective, the uniserial
    # injective at the loop vertex coresolves its simple in one step, and
    # the cosyzygy of S_2 is S_1<1>
    expected = {("1", "proj"): 2, ("1", "inj"): 1,
                ("2", "proj"): 0, ("2", "inj"): 2}
    for (v, kind), d in expected.items():
        rep = graded_dimension(S(fix_a, v), kind, 6)
        assert rep["kind"] == "exact" and rep["value"] == d, (v, kind, rep)


def test_degree_three_relation_homological_dims():
    alg = chain_with_cubic_relation()
    # by hand: the syzygy chain of S_1 passes through P_2<-1> with kernel
    # spanned by the length-two class ending at the sink
    expected_pd = {"1": 2, "2": 1, "3": 1, "4": 0}
    for v, d in expected_pd.items():
        rep = graded_dimension(S(alg, v), "proj", 8)
        assert rep["kind"] == "exact" and rep["value"] == d, (v, rep)
    seq = almost_split_sequence(S(alg, "2"), "ending")
    ok, failures = verify_almost_split(seq)
    assert ok, failures
