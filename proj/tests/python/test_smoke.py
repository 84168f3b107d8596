import json

import pytest

import skewmorph_py as sm


def test_group_parsing():
    G = sm.AbelianGroup.parse("Z2xZ4")
    assert G.factors == [2, 4]
    assert G.order == 8
    assert G.label == "Z2xZ4"
    assert not G.is_cyclic()
    assert sm.AbelianGroup.parse("Z1").order == 1
    with pytest.raises(sm.GroupError):
        sm.AbelianGroup.parse("Z0")
    with pytest.raises(ValueError):
        sm.AbelianGroup([1])


def test_validate():
    G = sm.AbelianGroup([6])
    phi = sm.validate(G, [0, 5, 4, 3, 2, 1])
    assert phi is not None and phi.is_automorphism()
    assert sm.validate(G, [0, 2, 1, 3, 4, 5]) is None


def test_enumerate_matches_oracle():
    for label in ["Z6", "Z8", "Z9", "Z2xZ2", "Z2xZ4"]:
        G = sm.AbelianGroup.parse(label)
        fast = sorted(phi.perm for phi in sm.enumerate(G))
        slow = sorted(phi.perm for phi in sm.enumerate(G, oracle=True))
        assert fast == slow


def test_counts_add_up():
    c = sm.counts(sm.AbelianGroup([18]))
    assert c["automorphisms"] + c["proper"] == c["total"]
    assert c["smooth"] + c["nonsmooth"] == c["total"]
    assert c["nonsmooth"] > 0
    assert sm.counts(sm.AbelianGroup([15]))["nonsmooth"] == 0
    with pytest.raises(sm.GuardError):
        sm.counts(sm.AbelianGroup([65]))


def test_z9_witness():
    phi = sm.pns_witness(3, 2)
    assert phi.order == 6
    assert phi.skew_type() == 3
    assert phi.kernel() == [0, 3, 6]
    assert phi.power[1] == 5
    assert not phi.is_smooth()
    assert phi.invariant_failure() is None


def test_constructors():
    phi = sm.csm(6, 2, 1, 1, 2)
    assert phi.order == 3
    assert phi.power == [1, 2, 1, 2, 1, 2]
    with pytest.raises(sm.ParameterError):
        sm.csm(6, 2, 0, 1, 2)
    assert sm.root(9, 3, 8).perm == sm.pns_witness(3, 2).perm
    assert sm.nse(3, 1, 1, 2).order == 6
    w = sm.nonsmooth_witness(sm.AbelianGroup.parse("Z3xZ3"))
    assert w is not None and not w.is_smooth()
    z9 = sm.pns_witness(3, 2)
    assert sm.direct_product(z9, z9) is None


def test_json_round_trip():
    phi = sm.pns_witness(3, 2)
    record = json.loads(phi.to_json())
    assert list(record) == ["group", "perm", "order", "power", "smooth", "skew_type", "kernel", "proper"]
    assert sm.check_record(phi.to_json())[0] == 0
    record["order"] = 3
    status, field, _ = sm.check_record(json.dumps(record))
    assert (status, field) == (1, "order")
    assert sm.check_record("{")[0] == 2


def test_theorem1_small():
    v = sm.verify_theorem1(20)
    assert v["pass"]
    assert {r["n"] for r in v["rows"] if r["nonsmooth"]} == {9, 18}
    assert sm.smooth_only_predicate(105)


def test_cli_in_process():
    code, out, _ = sm.run_cli(["enumerate", "Z6", "--quiet"])
    assert code == 0
    assert len(out.splitlines()) == 4
    assert sm.run_cli(["enumerate", "Z65"])[0] == 3
    assert sm.run_cli(["enumerate", "Q8"])[0] == 2
