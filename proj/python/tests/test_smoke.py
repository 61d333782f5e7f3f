import pytest

import twosq


def test_table_for_one():
    rows = twosq.jacobi_table(1)
    assert [str(r.start) for r in rows] == ["(1,1;1,1,-)", "(1,1;1,2,-)", "(1,1;2,1,+)", "(1,1;2,2,+)"]
    assert [str(r.endpoint) for r in rows] == ["(-1,0)", "(0,-1)", "(0,1)", "(1,0)"]
    assert rows[0].word == "TOTO"


def test_walk_with_trace():
    r = twosq.walk(twosq.FactorWitness(1, 1, 1, 0), trace=True, check_cycles=True)
    assert isinstance(r.endpoint, twosq.SquarePair)
    assert (r.endpoint.m1, r.endpoint.m2) == (0, 1)
    assert len(r.trace) == 2 * r.edge_pairs + 1
    assert r.trace[0][0] == "J"
    assert r.trace[-1][1].startswith("V0(")


def test_endpoints_for_nine():
    ends = {str(r.endpoint) for r in twosq.jacobi_table(9)}
    assert ends == {"(0,3)", "(0,-3)", "(-3,0)", "(3,0)",
                    "(3,3;1,1,+)", "(3,3;1,2,+)", "(3,3;2,1,-)", "(3,3;2,2,-)"}


def test_start_vertex():
    assert twosq.encode_start(twosq.FactorWitness(1, 1, 0, 0)) == "V1(A=[];B=[1];D=[])@(1,-)|gamma{}"
    with pytest.raises(ValueError):
        twosq.encode_start(twosq.FactorWitness(3, 1, 0, 0))


def test_oracles():
    assert twosq.r2_brute(25) == 12
    assert twosq.divisor_counts(9) == (2, 1)
    for n in range(1, 60):
        d1, d3 = twosq.divisor_counts(n)
        assert twosq.r2_brute(n) == 4 * (d1 - d3)


def test_partition_operations():
    P = twosq.Partition
    assert twosq.reciprocal_pair(P(), P()) is None
    assert twosq.reciprocal_pair(P([3]), P([1, 1])) == (P([1, 3]), P([1]))
    assert twosq.sq_diff_num(P([2, 5]), P([2, 3])) == (P([2, 3, 5]), P([2]))
    assert str(P.parse("1^2 4^1")) == "1^2 4^1"


def test_triple_product():
    n, lam = twosq.triple_product_forward([1, 5], [1])
    assert n == 1 and lam.parts == [2, 4]
    assert twosq.triple_product_reverse(n, lam) == ([1, 5], [1])
    assert all(r.ok for r in twosq.triple_product_suites(20))


def test_suites():
    assert all(r.ok for r in twosq.lemma_suites(8))
    assert all(r.ok for r in twosq.partition_suites(8))


def test_verify():
    rows = twosq.verify(6)
    assert [r["n"] for r in rows] == list(range(1, 7))
    assert all(r["ok"] for r in rows)
