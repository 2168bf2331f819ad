import pytest

import parsum


def test_rows_and_perms():
    odd = parsum.ApRow.affine(2, -1)
    assert [odd(j) for j in range(1, 5)] == [1, 3, 5, 7]
    assert parsum.ApRow.parse(str(odd)) == odd
    assert not parsum.images_disjoint(odd, parsum.ApRow.identity())
    assert parsum.images_disjoint(odd, parsum.ApRow.affine(2, 0))
    swap = parsum.Perm([2, 1])
    assert parsum.block_shuffle(swap, [2, 1]).one_line() == [2, 3, 1]
    assert parsum.sigma_tilde([5, 3]).one_line() == [2, 1]


def test_cyclic_generator():
    assert parsum.cyclic_generator_values(3, 4) == [2, 3, 1, 4]


def test_verify_passes_and_is_deterministic():
    a = parsum.verify(["sigma-perm-axioms"], seed=7, cases=10)
    b = parsum.verify(["sigma-perm-axioms"], seed=7, cases=10)
    assert a == b
    assert a["summary"]["failed"] == 0
    assert a["suites"][0]["id"] == "sigma-perm-axioms"


def test_fault_is_reported():
    report = parsum.verify(["parsum-axioms"], cases=20, fault="phi-sum-shuffle")
    failed = [p for s in report["suites"] for p in s["properties"] if not p["passed"]]
    assert failed
    assert failed[0]["counterexample"]["terms"]


def test_errors():
    with pytest.raises(parsum.ParsumError):
        parsum.verify(["no-such-suite"])
    with pytest.raises(ValueError):
        parsum.run_demo("no-such-demo")
    assert "braiding" in parsum.demo_names()
