import json
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from realchar import _fallback, kernels
from realchar.catalog import build_group
from realchar.chartab import _inverse_base_images
from realchar.classes import conjugacy_classes
from realchar.perm import inverse

compiled = pytest.importorskip("realchar._kernels")
BACKENDS = [_fallback, compiled]


def test_dispatch_prefers_compiled():
    if not os.environ.get("REALCHAR_PURE_PYTHON"):
        assert kernels.BACKEND == "cython"


@given(st.sets(st.integers(0, 2**62), min_size=1, max_size=300),
       st.lists(st.integers(-5, 2**62 + 5), max_size=50))
def test_lookup_agrees_on_arbitrary_keys(keys, queries):
    ks = np.array(sorted(keys), dtype=np.int64)
    q = np.array(queries + sorted(keys)[:10], dtype=np.int64)
    a, b = _fallback.lookup(ks, q), compiled.lookup(ks, q)
    assert np.array_equal(a, b)


@given(st.integers(1, 60), st.data())
def test_label_components_agree(n, data):
    k = data.draw(st.integers(0, 3))
    succ = [np.array(data.draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n)))
            for _ in range(k)]
    a = _fallback.label_components(n, succ)
    b = compiled.label_components(n, succ)
    assert np.array_equal(a, b)


@given(st.sampled_from([2, 3, 5, 7, 31, 337, 7919]), st.integers(1, 8), st.integers(1, 8),
       st.data())
def test_rref_agrees(p, r, c, data):
    M = data.draw(arrays(np.int64, (r, c), elements=st.integers(0, p - 1)))
    R1, piv1 = _fallback.rref_mod(M, p)
    R2, piv2 = compiled.rref_mod(M, p)
    assert list(piv1) == list(piv2)
    assert np.array_equal(np.asarray(R1) % p, np.asarray(R2) % p)


@pytest.mark.parametrize("name", ["SL(3,2)", "A5 x C7", "PSL(2,8).3", "S3 wr C2"])
def test_group_kernels_agree(name):
    G = build_group(name)
    X = G.elements()
    keys = G.element_keys()
    radix = G._key_radix()
    base = np.asarray(G.base)
    C = conjugacy_classes(G)
    for g in G.generators:
        out = [B.conj_successor(X, g, inverse(g), base, radix, keys) for B in BACKENDS]
        assert np.array_equal(out[0], out[1])
    probe = keys[::7].copy()
    assert np.array_equal(_fallback.lookup(keys, probe), compiled.lookup(keys, probe))
    xinv = _inverse_base_images(G)
    class_of = np.asarray(C.class_of, dtype=np.int64)
    for z in C.reps:
        a = _fallback.pair_counts(z, xinv, radix, keys, class_of, len(C))
        b = compiled.pair_counts(z, xinv, radix, keys, class_of, len(C))
        assert np.array_equal(a, b)


_SCRIPT = """
import json
from realchar.kernels import BACKEND
from realchar.catalog import build_group
from realchar.chartab import character_table
T = character_table(build_group("PSL(2,11)"))
print(json.dumps({"backend": BACKEND, "table": T.to_dict()}))
"""


def test_pure_python_backend_gives_the_same_table():
    outs = []
    for pure in (False, True):
        env = dict(os.environ)
        env.pop("REALCHAR_PURE_PYTHON", None)
        if pure:
            env["REALCHAR_PURE_PYTHON"] = "1"
        res = subprocess.run([sys.executable, "-c", _SCRIPT], env=env, capture_output=True,
                             text=True, check=True)
        outs.append(json.loads(res.stdout))
    assert [o["backend"] for o in outs] == ["cython", "python"]
    assert outs[0]["table"] == outs[1]["table"]
