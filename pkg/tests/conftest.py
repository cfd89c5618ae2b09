import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    d = tmp_path / "cache"
    monkeypatch.setenv("REALCHAR_CACHE_DIR", str(d))
    return d


# ---- acceptance reporting: one PASS/FAIL line per criterion at the end of the run

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion n")


def pytest_runtest_logreport(report):
    info = dict(report.user_properties).get("criterion")
    if info is None:
        return
    n, text = info
    rec = _criteria.setdefault(n, {"text": text, "ok": True, "secs": 0.0, "why": ""})
    rec["secs"] += report.duration
    if report.failed:
        rec["ok"] = False
        if report.longrepr is not None and not rec["why"]:
            crash = getattr(report.longrepr, "reprcrash", None)
            rec["why"] = crash.message.splitlines()[0] if crash else str(report.longrepr)[:200]


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            item.user_properties.append(("criterion", tuple(m.args)))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_criteria):
        rec = _criteria[n]
        line = f"{'PASS' if rec['ok'] else 'FAIL'} criterion {n:2}: {rec['text']} ({rec['secs']:.1f}s)"
        tr.write_line(line)
        if not rec["ok"]:
            tr.write_line(f"      {rec['why']}")
    failed = [n for n, r in _criteria.items() if not r["ok"]]
    tr.write_line(f"{len(_criteria) - len(failed)}/{len(_criteria)} criteria pass")
