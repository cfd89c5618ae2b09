import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realchar import oracles
from realchar.catalog import CATALOG, OPTIONAL, build_group
from realchar.structure import (Fingerprint, fingerprint, fitting, identify, o2prime, p_core,
                                pinned_fingerprints, sol_radical, solvable_radical)


@pytest.mark.parametrize("name,p,size", [
    ("S4", 2, 4), ("S4", 3, 1), ("A4 x C3", 3, 3), ("SL(2,3)", 2, 8), ("A5", 2, 1),
    ("D10", 5, 5), ("C3 wr C2", 3, 9), ("A5 x C7", 7, 7), ("SL(2,5)", 2, 2),
])
def test_p_core(name, p, size):
    G = build_group(name)
    K = p_core(G, p)
    assert K.order == size == oracles.largest_normal_p_subgroup(G.generators, G.degree, p)
    assert K.is_normal_in(G)


def test_fitting_and_o2prime():
    assert fitting(build_group("S4")).order == 4
    assert fitting(build_group("SL(2,3) x C5")).order == 40
    assert o2prime(build_group("S4")).order == 24
    assert o2prime(build_group("A4")).order == 4
    assert o2prime(build_group("C15")).order == 1


@pytest.mark.parametrize("name,sol,quotient", [
    ("A5 x C7", 7, "A5"),
    ("SL(2,5)", 2, "A5"),
    ("(PSL(2,8) x C7).3", 7, "PSL(2,8).3"),
    ("S4", 24, "1"),
    ("C15", 15, "1"),
    ("A5", 1, "A5"),
    ("S5", 1, "S5"),
    ("A5 x A5", 1, "A5 x A5"),
])
def test_solvable_radical(name, sol, quotient):
    rep = solvable_radical(build_group(name))
    assert rep.sol_radical.order == sol
    assert rep.quotient_name == quotient
    assert rep.summary()["quotient_order"] * sol == rep.group.order
    assert rep.sol_radical.is_normal_in(rep.group)


def test_sol_radical_of_solvable_group_is_everything():
    G = build_group("SL(2,3) x C4")
    assert sol_radical(G).order == G.order


def test_identification_reports_unknown_outside_the_catalog():
    assert identify(fingerprint(build_group("D8"))) == "unknown"
    assert identify(fingerprint(build_group("PSL(2,7)"))) == "SL(3,2)"
    assert identify(fingerprint(build_group("PSL(2,4)"))) == "A5"
    assert identify(fingerprint(build_group("C1"))) == "1"


def test_fingerprint_round_trip():
    fp = fingerprint(build_group("A6"))
    assert Fingerprint.from_dict(fp.to_dict()) == fp


def test_pinned_fingerprints_cover_the_catalog():
    pinned = pinned_fingerprints()
    assert set(pinned) == {d for d in CATALOG if d not in OPTIONAL}
    assert len(set(pinned.values())) == len(pinned)


_CHEAP = [d for d in CATALOG if d not in OPTIONAL and build_group(d).order <= 100_000]


@settings(max_examples=25)
@given(st.sampled_from(_CHEAP))
def test_pinned_fingerprints_equal_recomputed(name):
    assert fingerprint(build_group(name)) == pinned_fingerprints()[name]
