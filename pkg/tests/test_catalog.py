from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from realchar.catalog import (CATALOG, OPTIONAL, DescriptorError, UnavailableError,
                              asymptotic_scan, build, build_group, canonical, enumerated_profile,
                              family_order, kfunction, non_decreasing, odd_prime_powers,
                              out_order, out_order_bounds, parse, psl2_real_profile,
                              validate_psl2_profile)
from realchar.catalog.sweep import abelian_descriptors, sweep_groups
from realchar.classes import conjugacy_classes
from realchar.perm import CapError, is_solvable
from realchar.oracles import alternating_k_real


@pytest.mark.parametrize("text,canon", [
    ("A5", "A5"),
    ("  PSL( 2 , 8 ) . 3 ", "PSL(2,8).3"),
    ("A5xC7", "A5 x C7"),
    ("(PSL(2,8) x C7).3", "(PSL(2,8) x C7).3"),
    ("SL(3,2)wrC2", "SL(3,2) wr C2"),
    ("(A5 x C7) x C2", "A5 x C7 x C2"),
    ("Sz(8).3", "Sz(8).3"),
])
def test_canonical_printing(text, canon):
    assert canonical(text) == canon
    assert canonical(canon) == canon


@pytest.mark.parametrize("text,pos", [
    ("A5 x", 4), ("PSL(2,6)", None), ("PSU(4,2)", None), ("Sz(32)", None), ("a5", 0),
    ("D7", None), ("A5 wr", 5), ("Foo(3)", 0), ("", 0), ("A5 )", 3),
])
def test_parse_errors(text, pos):
    with pytest.raises(DescriptorError) as err:
        parse(text)
    if pos is not None:
        assert err.value.pos == pos


_ATOMS = st.sampled_from(["A5", "S4", "C7", "D8", "PSL(2,8)", "SL(3,2)", "Sz(8)", "PSU(3,3)"])
_TERMS = st.one_of(_ATOMS, st.builds(lambda a: f"{a}.3", st.sampled_from(["PSL(2,8)", "Sz(8)"])),
                   st.builds(lambda a: f"{a} wr C2", _ATOMS))


@given(st.lists(_TERMS, min_size=1, max_size=4))
def test_round_trip(terms):
    text = " x ".join(f"({t})" if " wr " in t else t for t in terms)
    node = parse(text)
    assert parse(str(node)) == node
    assert canonical(str(node)) == str(node)


@pytest.mark.parametrize("name", [d for d in CATALOG if d not in OPTIONAL])
def test_built_order_matches_formula(name):
    assert build_group(name).order == family_order(parse(name))


def test_optional_groups():
    with pytest.raises(UnavailableError):
        build_group("J1")
    with pytest.raises(CapError):
        conjugacy_classes(build_group("PSU(3,8)"))


def test_extensions_and_normal_subgroups():
    b = build("PSL(2,8).3")
    assert b.group.order == 1512
    assert b.normal["base"].order == 504 and b.normal["base"].is_normal_in(b.group)
    assert build_group("A6.2").order == 720
    with pytest.raises(DescriptorError):
        build_group("PSL(2,8).5")


@pytest.mark.parametrize("name,out", [
    ("A5", 2), ("A6", 4), ("A7", 2), ("SL(3,2)", 2), ("PSL(2,8)", 3), ("PSL(2,9)", 4),
    ("PSL(2,27)", 6), ("PSL(3,4)", 12), ("PSU(3,3)", 2), ("PSU(3,4)", 4), ("Sz(8)", 3),
    ("PSL(2,11)", 2), ("PSL(2,25)", 4),
])
def test_out_orders(name, out):
    assert out_order(name) == out
    assert all(out <= b for _, b in out_order_bounds(name))


def test_out_order_rejects_non_simple():
    with pytest.raises(DescriptorError):
        out_order("S5")


def test_abelian_descriptors():
    assert abelian_descriptors(8) == ["C8", "C4 x C2", "C2 x C2 x C2"]
    assert len(abelian_descriptors(64)) == 11
    assert abelian_descriptors(1) == ["C1"]


def test_sweep_is_deduplicated_and_small():
    groups = sweep_groups()
    assert len(groups) > 400
    assert all(G.order <= 100 for _, G in groups)
    assert len({n for n, _ in groups}) == len(groups)


def test_closed_form_profile_matches_enumeration():
    results = validate_psl2_profile(81)
    assert [q for q, _ in results] == odd_prime_powers(5, 81)
    assert all(ok for _, ok in results)


def test_closed_form_examples():
    assert psl2_real_profile(27).count(13) == 6
    assert psl2_real_profile(2187).count(1093) == 546
    assert psl2_real_profile(2187).k_real == (2187 + 1) // 2
    assert psl2_real_profile(29).k_real == (29 + 5) // 2
    assert enumerated_profile(13).orders == (1, 2, 3, 6, 7, 13)
    with pytest.raises(ValueError):
        psl2_real_profile(8)


def test_k_function():
    assert kfunction(5, 2) == Fraction(1, 2)
    recs = asymptotic_scan("A", range(5, 9))
    assert [r.k_real for r in recs] == [alternating_k_real(n) for n in range(5, 9)]
    assert non_decreasing([1, 1, 2]) and not non_decreasing([2, 1])


def test_small_real_counts_force_solvable_in_the_sweep():
    for _, G in sweep_groups():
        if conjugacy_classes(G).k_real() <= 3:
            assert is_solvable(G)
