import copy
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from realchar import oracles
from realchar.catalog import build_group
from realchar.catalog.sweep import sweep_groups
from realchar.chartab import (CharacterTable, IntegrityError, class_matrices,
                              column_orthogonality, character_table, dixon_prime, fusion,
                              lemma31_check, lemma41_check, real_rational_counts,
                              row_orthogonality, table_checks)
from realchar.classes import conjugacy_classes
from realchar.perm import CapError


@pytest.mark.parametrize("order,e,p", [(60, 30, 31), (168, 84, 337), (3, 3, 7)])
def test_dixon_prime(order, e, p):
    assert dixon_prime(order, e) == p == oracles.dixon_prime_search(order, e)


def test_a5_table():
    T = character_table(build_group("A5"))
    assert T.degrees == [1, 3, 3, 4, 5]
    assert [str(v) for v in T.row(0)] == ["1"] * 5
    assert [str(v) for v in T.row(4)] == ["5", "1", "-1", "0", "0"]
    assert [str(v) for v in T.row(3)] == ["4", "0", "1", "-1", "-1"]
    # the degree-3 rows take the values (1 +- sqrt 5)/2 on the order-5 classes
    for row in (1, 2):
        for k in (3, 4):
            x = T.value(row, k)
            assert (x * x - x - 1).is_zero() and not x.is_rational()
    assert all(T.real) and sum(T.rational) == 3


@pytest.mark.parametrize("name", ["A5", "S4", "SL(3,2)", "D10"])
def test_structure_constants_match_brute_force(name):
    G = build_group(name)
    C = conjugacy_classes(G)
    A = class_matrices(C)
    parts, a = oracles.structure_constants(G.generators, G.degree)
    X = G.elements()
    where = {tuple(int(v) for v in X[i]): int(C.class_of[i]) for i in range(len(X))}
    to_mine = [where[next(iter(c))] for c in parts]
    r = len(C)
    for i in range(r):
        for j in range(r):
            for k in range(r):
                assert A[to_mine[i], to_mine[j], to_mine[k]] == a[i][j][k]


@pytest.mark.parametrize("name", ["A5", "S5", "SL(3,2)", "SL(2,5)", "A6", "PSL(2,8).3",
                                  "PSU(3,3)", "A5 x C7", "C12 x C2", "S3 wr C2"])
def test_exact_identities(name):
    T = character_table(build_group(name))
    assert all(table_checks(T).values())
    kr, kq = real_rational_counts(T)
    C = T.classes
    assert (kr, kq) == (C.k_real(), C.k_rational())


def test_table_does_not_depend_on_seed():
    G = build_group("PSL(2,11)")
    a = character_table(G, seed=0).to_dict()
    b = character_table(G, seed=7).to_dict()
    a.pop("seed"), b.pop("seed")
    assert a == b


def test_round_trip():
    T = character_table(build_group("Sz(8)"))
    U = CharacterTable.from_dict(T.to_dict(), T.classes)
    assert U.to_dict() == T.to_dict()
    assert U.real == T.real


def test_corrupted_table_fails_exact_checks():
    T = character_table(build_group("SL(3,2)"))
    bad = copy.deepcopy(T)
    # move one eigenvalue of the 7-dimensional row on an order-7 class
    k = T.classes.orders.index(7)
    row = T.degrees.index(7)
    M = bad.values[k].copy()
    nz = np.flatnonzero(M[row])
    M[row, nz[0]] -= 1
    M[row, (nz[0] + 1) % 7] += 1
    bad.values[k] = M
    assert not (column_orthogonality(bad) and row_orthogonality(bad))


def test_brauer_mismatch_raises():
    T = character_table(build_group("SL(3,2)"))
    bad = copy.deepcopy(T)
    k = T.classes.orders.index(7)
    row = T.degrees.index(7)
    M = bad.values[k].copy()
    M[row] = 0
    M[row, 1] = 7          # chi(g) = 7 zeta: not real
    bad.values[k] = M
    with pytest.raises(IntegrityError):
        real_rational_counts(bad)


def test_class_count_cap():
    with pytest.raises(CapError):
        character_table(build_group("C121"))


_SWEEP = [G for _, G in sweep_groups() if len(conjugacy_classes(G)) <= 40]


@given(st.sampled_from(range(len(_SWEEP))), st.integers(1, 200))
def test_galois_action_permutes_rows(idx, j):
    T = character_table(_SWEEP[idx])
    while math.gcd(j, T.e) != 1:
        j += 1
    perm = T.galois_row_permutation(j)
    assert perm is not None and sorted(perm) == list(range(len(T)))
    assert all(T.degrees[perm[i]] == T.degrees[i] for i in range(len(T)))


def test_fusion_and_extension_witness():
    S, A = build_group("PSL(2,8)"), build_group("PSL(2,8).3")
    fus = fusion(S, A)
    CA = conjugacy_classes(A)
    CS = conjugacy_classes(S)
    assert all(CA.orders[f] == o for f, o in zip(fus, CS.orders))
    w = lemma41_check(S, A)
    assert w is not None and w.degree > 1
    assert character_table(A).rational[w.row]
    assert w.restricted_values[0] == str(w.degree)


def test_normal_subgroup_count_split():
    r = lemma31_check(build_group("A5"), build_group("S5"), 2)
    assert (r.k_real_G, r.k_real_S, r.k_real_quotient) == (7, 5, 2)
    assert r.k_real_G_over_S == 5 and r.ok
