import io
import json
from pathlib import Path

import pytest

from realchar.catalog import build_group
from realchar.classes import ClassSet, conjugacy_classes
from realchar.verify import oracle_data
from realchar.verify.cache import Cache
from realchar.verify.checks import CHECKS, run_check
from realchar.verify.cli import main
from realchar.verify.context import Context
from realchar.verify.report import PROVENANCE, Item, VerificationReport

SCHEMA = json.loads((Path(__file__).parent.parent / "docs" / "report.schema.json").read_text())


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


# ------------------------------------------------------------------ cache

def test_cache_round_trip(tmp_path):
    cache = Cache(tmp_path)
    C = conjugacy_classes(build_group("Sz(8)"))
    assert cache.store("classes", "Sz(8)", C.to_dict())
    back = cache.load("classes", "Sz(8)")
    assert back == json.loads(json.dumps(C.to_dict()))
    assert ClassSet.from_dict(back).real_data() == C.real_data()


def test_version_bump_is_a_miss(tmp_path):
    Cache(tmp_path, version="1").store("classes", "A5", {"x": 1})
    assert Cache(tmp_path, version="2").load("classes", "A5") is None
    assert Cache(tmp_path, version="1").load("classes", "A5") == {"x": 1}


def test_truncated_entry_is_discarded(tmp_path):
    cache = Cache(tmp_path)
    cache.store("classes", "A5", {"x": list(range(100))})
    [path] = list(tmp_path.rglob("*.json"))
    path.write_text(path.read_text()[:50])
    assert cache.load("classes", "A5") is None
    assert not path.exists()


def test_tampered_payload_fails_checksum(tmp_path):
    cache = Cache(tmp_path)
    cache.store("classes", "A5", {"k_real": 5})
    [path] = list(tmp_path.rglob("*.json"))
    entry = json.loads(path.read_text())
    entry["payload"] = entry["payload"].replace("5", "6")
    path.write_text(json.dumps(entry))
    assert cache.load("classes", "A5") is None


def test_unwritable_cache_is_tolerated(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("not a directory")
    cache = Cache(blocker / "sub")
    assert not cache.store("classes", "A5", {"x": 1})
    assert cache.load("classes", "A5") is None
    ctx = Context(cache_dir=str(blocker / "sub"))
    assert ctx.classes("A5").k_real() == 5


def test_env_var_sets_cache_dir(cache_dir):
    assert Cache().dir == cache_dir


# ----------------------------------------------------------------- reports

def test_report_items_sorted_and_tagged():
    items = [Item("B", "c", 1, 1, "CLAIM", "pass"), Item("A", "c", 1, 2, "DERIVED", "fail")]
    r = VerificationReport("X", items)
    assert [i.descriptor for i in r.items] == ["A", "B"]
    assert not r.passed
    with pytest.raises(ValueError):
        Item("A", "c", 1, 1, "GUESS", "pass")


def _check_against_schema(doc):
    spec = SCHEMA["$defs"]["report"]
    assert set(spec["required"]) <= set(doc)
    assert set(doc) <= set(spec["properties"])
    item_spec = SCHEMA["$defs"]["item"]
    for it in doc["items"]:
        assert set(item_spec["required"]) <= set(it) <= set(item_spec["properties"])
        assert it["provenance"] in PROVENANCE
        assert it["status"] in ("pass", "fail", "skipped")
    assert doc["overall_pass"] == all(it["status"] != "fail" for it in doc["items"])


@pytest.mark.parametrize("check", ["LEM23_COUNTS", "LEM22_ARITH", "LEM22_SETS"])
def test_cold_and_warm_reports_match(tmp_path, check):
    ctx = Context(cache_dir=str(tmp_path))
    cold = run_check(check, ctx).to_dict(wall_times=False)
    warm_ctx = Context(cache_dir=str(tmp_path))
    warm = run_check(check, warm_ctx).to_dict(wall_times=False)
    assert cold == warm
    assert warm_ctx.cache.hits > 0 or check == "LEM22_ARITH"
    _check_against_schema(cold)


def test_parallel_run_matches_serial(tmp_path):
    ctx = Context(cache_dir=str(tmp_path))
    a = run_check("CGROUP_LIST", ctx, jobs=1).to_dict(wall_times=False)
    b = run_check("CGROUP_LIST", ctx, jobs=2).to_dict(wall_times=False)
    assert a == b and a["overall_pass"]


def test_optional_groups_are_skipped_not_failed(tmp_path):
    r = run_check("LEM22_SETS", Context(cache_dir=str(tmp_path)))
    skipped = {i.descriptor for i in r.items if i.status == "skipped"}
    assert skipped == {"J1", "PSU(3,8)"}
    assert r.passed


def test_every_check_is_registered():
    assert set(CHECKS) == {
        "LEM22_SETS", "LEM22_ARITH", "LEM23_COUNTS", "THM24_SHAPE", "THMA_SAMPLES", "SOLV_K3",
        "BRAUER_ALL", "LEM31_BOUNDS", "LEM41_EXT", "PROP42_RATIONAL", "THMC_TREND",
        "CGROUP_LIST"}


# ----------------------------------------------------------------- oracles

def test_strict_mode_recomputes_and_agrees():
    assert oracle_data.expected("groups", "A5", strict=True)["k_real"] == 5
    assert oracle_data.expected("case3_scan", 7, strict=True) == [7]


def test_strict_mode_rejects_a_changed_oracle(monkeypatch):
    data = json.loads(json.dumps(oracle_data.load()))
    data["groups"]["A5"]["k_real"] = 6
    monkeypatch.setattr(oracle_data, "load", lambda: data)
    assert oracle_data.expected("groups", "A5")["k_real"] == 6
    with pytest.raises(oracle_data.OracleMismatch):
        oracle_data.expected("groups", "A5", strict=True)


def test_pinned_oracles_cover_catalog_and_sweep():
    data = oracle_data.load()
    assert data["groups"]["SL(3,2)"]["real_orders"] == [1, 2, 3, 4]
    assert data["alternating"] == {str(n): k for n, k in
                                   zip(range(5, 11), [5, 7, 7, 10, 16, 24])}
    assert len(data["groups"]) > 450


# --------------------------------------------------------------------- CLI

def test_cli_info(cache_dir):
    code, out = run_cli("info", "A5", "--json")
    assert code == 0
    d = json.loads(out)
    assert (d["order"], d["k_real"], d["real_orders"], d["sol_order"], d["quotient"]) == \
        (60, 5, [1, 2, 3, 5], 1, "A5")
    code, out = run_cli("info", "C15", "--json")
    assert json.loads(out)["k_real"] == 1
    code, out = run_cli("info", "S4", "--json")
    d = json.loads(out)
    assert d["sol_order"] == 24 and d["quotient"] == "1"


def test_cli_classes_and_chartab(cache_dir):
    code, out = run_cli("classes", "A5")
    assert code == 0 and len(out.strip().splitlines()) == 6
    code, out = run_cli("chartab", "A5")
    rows = out.strip().splitlines()
    assert code == 0 and len(rows) == 6 and rows[-1].startswith("4,5,1,1,5,1,-1,0,0")
    code, out = run_cli("chartab", "SL(3,2)", "--format", "json")
    assert json.loads(out)["degrees"] == [1, 3, 3, 6, 7, 8]


def test_cli_exit_codes(cache_dir, capsys):
    assert run_cli("info", "A5 x")[0] == 2
    assert run_cli("info", "J1")[0] == 3
    assert run_cli("info", "A12")[0] == 3
    assert run_cli("verify", "NOPE")[0] == 2
    assert run_cli("verify", "LEM23_COUNTS", "--jobs", "0")[0] == 2
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2
    assert run_cli("verify", "LEM23_COUNTS")[0] == 0
    code, out = run_cli("verify", "THMC_TREND", "--json")
    assert code == 1 and json.loads(out)["overall_pass"] is False


def test_cli_writes_report(cache_dir, tmp_path):
    path = tmp_path / "r.json"
    code, _ = run_cli("verify", "PROP42_RATIONAL", "--report", str(path), "--cache-dir",
                      str(tmp_path / "c"))
    assert code == 0
    doc = json.loads(path.read_text())
    _check_against_schema(doc)
    assert doc["toolchain"]["backend"] in ("cython", "python")


def test_cli_regen_flag_calls_regenerate(cache_dir, monkeypatch):
    calls = []
    monkeypatch.setattr(oracle_data, "regenerate", lambda **kw: calls.append(kw))
    assert run_cli("verify", "LEM22_ARITH", "--regen-oracles")[0] == 0
    assert len(calls) == 1
