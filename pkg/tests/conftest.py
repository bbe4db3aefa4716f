from __future__ import annotations

import random
import time
from collections import defaultdict
from functools import lru_cache
from pathlib import Path

import pytest

from tfcousins import Graph, Permutation, census_cousins, ingest

DATA = Path(__file__).parent / "data"


def data_file(n: int) -> Path:
    gz = DATA / f"connected{n}.g6.gz"
    return gz if gz.exists() else DATA / f"connected{n}.g6"


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(ingest(data_file(n)))


@lru_cache(maxsize=None)
def census_timed(n: int) -> tuple[tuple, float]:
    t0 = time.perf_counter()
    recs = tuple(census_cousins(ingest(data_file(n))))
    return recs, time.perf_counter() - t0


def census(n: int) -> tuple:
    return census_timed(n)[0]


# complementary split-image pairs on the k = 3 seed, 0-based
SPLIT_VARIANTS = {
    "one": [((2, 4), (1, 5))],
    "two": [((0, 5), (2, 3)), ((2, 4), (1, 5))],
    "three": [((0, 4), (1, 3)), ((0, 5), (2, 3)), ((2, 4), (1, 5))],
}


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_perm(rng: random.Random, n: int) -> Permutation:
    img = list(range(n))
    rng.shuffle(img)
    return Permutation(tuple(img))


# -- acceptance summary ------------------------------------------------------

_results: dict[int, dict] = defaultdict(lambda: {"title": "", "outcomes": [], "notes": []})


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    mark = getattr(report, "_criterion", None)
    if mark is None:
        return
    num, title = mark
    entry = _results[num]
    entry["title"] = title
    if hasattr(report, "wasxfail"):
        outcome = "xfailed" if report.outcome == "skipped" else "failed"
    else:
        outcome = report.outcome
    entry["outcomes"].append(outcome)
    if outcome in ("failed", "xfailed"):
        entry["notes"].append(getattr(report, "_message", "") or report.nodeid)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep._criterion = (m.args[0], m.args[1])
        if call.excinfo is not None:
            text = str(call.excinfo.value).strip()
            rep._message = text.splitlines()[0] if text else call.excinfo.typename


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_results):
        e = _results[num]
        outs = e["outcomes"]
        if any(o == "failed" for o in outs):
            status = "FAIL"
        elif any(o == "xfailed" for o in outs):
            # known, analysed shortfall: red here, but not a broken build
            status = "FAIL*"
        elif outs and all(o == "skipped" for o in outs):
            status = "SKIP"
        else:
            status = "PASS"
        line = f"criterion {num:2d} [{status}] {e['title']}"
        if e["notes"]:
            line += " :: " + "; ".join(e["notes"])
        tr.write_line(line)
    if any(o == "xfailed" for e in _results.values() for o in e["outcomes"]):
        tr.write_line("FAIL* = target value not reproduced; marked strict xfail so an unexpected pass breaks the run")
