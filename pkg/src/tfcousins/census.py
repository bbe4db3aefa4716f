"""Batch census of TF-cousins over graph6 enumeration files.

Graphs are deduplicated by their own certificate and grouped by the
certificate of their canonical double cover; every group with two or more
members is a :class:`CousinRecord`.
"""

from __future__ import annotations

import functools
import gzip
import io
import json
import multiprocessing
import os
import warnings
from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import Iterable, Iterator

from .canon import certificate
from .cover import cdc
from .errors import CatalogError, CensusError, Graph6Error, IngestError
from .graph6 import parse_graph6, write_graph6
from .graphs import Graph
from .structure import contains_cycle, is_connected

__all__ = [
    "CousinRecord",
    "ConjectureVerdict",
    "Catalog",
    "ingest",
    "census_cousins",
    "verify_conjecture",
    "write_catalog",
    "read_catalog",
    "report",
    "CONJECTURE_SCHEMA",
]

# containment is read as "subgraph cycle"; bump if the reading changes
CONJECTURE_SCHEMA = "subgraph-cycle/1"


@dataclass(frozen=True)
class CousinRecord:
    n: int
    cdc_certificate: bytes
    members: tuple[str, ...]

    def __post_init__(self):
        if len(self.members) < 2:
            raise ValueError("a cousin record needs at least two members")
        if list(self.members) != sorted(self.members):
            raise ValueError("members must be sorted")

    @property
    def pair_count(self) -> int:
        return comb(len(self.members), 2)

    def graphs(self) -> list[Graph]:
        return [parse_graph6(m) for m in self.members]


@dataclass(frozen=True)
class ConjectureVerdict:
    """``record`` is the cover certificate of the record the verdict is about."""

    record: bytes
    witness_k: int | None

    @property
    def holds(self) -> bool:
        return self.witness_k is not None


@dataclass(frozen=True)
class Catalog:
    records: list[CousinRecord]
    verdicts: list[ConjectureVerdict]


# -- ingest ------------------------------------------------------------------

def _open_text(path: str | os.PathLike) -> io.TextIOBase:
    p = Path(path)
    if p.suffix == ".gz":
        return io.TextIOWrapper(gzip.open(p, "rb"), encoding="ascii")
    return open(p, encoding="ascii", newline="")


def ingest(
    path: str | os.PathLike, strict: bool = True, numbered: bool = False
) -> Iterator[Graph] | Iterator[tuple[int, Graph]]:
    """Lazily parse a file of graph6 lines (``.gz`` accepted).

    Blank lines are skipped.  A bad line raises :class:`IngestError` naming
    it, or with ``strict=False`` is skipped with a warning.  With
    ``numbered=True`` items are ``(line_number, graph)``.
    """
    with _open_text(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.strip()
            if not text:
                continue
            try:
                g = parse_graph6(text)
            except (Graph6Error, UnicodeDecodeError) as exc:
                err = IngestError(str(exc), lineno, str(path))
                if strict:
                    raise err from exc
                warnings.warn(str(err), stacklevel=2)
                continue
            yield (lineno, g) if numbered else g


# -- census ------------------------------------------------------------------

def _analyse(g6: str, connected_only: bool) -> tuple[bytes, bytes] | None:
    g = parse_graph6(g6)
    if connected_only and not is_connected(g):
        return None
    return certificate(g), certificate(cdc(g).graph)


def _numbered(graphs: Iterable) -> Iterator[tuple[int | None, Graph]]:
    for item in graphs:
        if isinstance(item, Graph):
            yield None, item
        else:
            yield item


def _checked_graph6(graphs: Iterable) -> Iterator[str]:
    n = None
    for line, g in _numbered(graphs):
        if n is None:
            n = g.n
        elif g.n != n:
            where = f" (line {line})" if line is not None else ""
            raise CensusError(f"graph on {g.n} vertices{where} in a census of order {n}")
        yield write_graph6(g)


def census_cousins(
    graphs: Iterable[Graph] | Iterable[tuple[int, Graph]],
    connected_only: bool = True,
    workers: int = 1,
    chunksize: int = 256,
) -> list[CousinRecord]:
    """Group graphs of one order by cover certificate.

    ``workers`` > 1 spreads the certificate computations over processes
    (``0`` means one per CPU); results are merged in input order, so the
    output does not depend on the worker count.
    """
    if workers < 0:
        raise ValueError("workers must be >= 0")
    if workers == 0:
        workers = os.cpu_count() or 1
    stream = _checked_graph6(graphs)
    fn = functools.partial(_analyse, connected_only=connected_only)
    groups: dict[bytes, set[bytes]] = {}

    def consume(results):
        for res in results:
            if res is None:
                continue
            own, cover = res
            groups.setdefault(cover, set()).add(own)

    if workers == 1:
        consume(fn(s) for s in stream)
    else:
        ctx = multiprocessing.get_context("spawn" if os.name == "nt" else "fork")
        with ctx.Pool(workers) as pool:
            consume(pool.imap(fn, stream, chunksize=chunksize))

    records = []
    for cover, owns in groups.items():
        if len(owns) < 2:
            continue
        members = tuple(sorted(o.decode("ascii") for o in owns))
        order = parse_graph6(members[0]).n
        records.append(CousinRecord(order, cover, members))
    records.sort(key=lambda r: r.members)
    return records


# -- conjecture --------------------------------------------------------------

def verify_conjecture(r: CousinRecord) -> ConjectureVerdict:
    """Smallest odd ``k`` with a ``k``-cycle in every member and a ``2k``-cycle in the cover."""
    graphs = r.graphs()
    cover = cdc(graphs[0]).graph
    for k in range(3, r.n + 1, 2):
        if all(contains_cycle(g, k) for g in graphs) and contains_cycle(cover, 2 * k):
            return ConjectureVerdict(r.cdc_certificate, k)
    return ConjectureVerdict(r.cdc_certificate, None)


# -- catalog -----------------------------------------------------------------

_FIELDS = ("n", "cdc_certificate", "members", "pair_count", "conjecture")


def _record_line(r: CousinRecord, v: ConjectureVerdict) -> str:
    obj = {
        "n": r.n,
        "cdc_certificate": r.cdc_certificate.hex(),
        "members": list(r.members),
        "pair_count": r.pair_count,
        "conjecture": {"schema": CONJECTURE_SCHEMA, "holds": v.holds, "witness_k": v.witness_k},
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def write_catalog(
    records: list[CousinRecord],
    path: str | os.PathLike,
    verdicts: list[ConjectureVerdict] | None = None,
) -> None:
    if verdicts is None:
        verdicts = [verify_conjecture(r) for r in records]
    if len(verdicts) != len(records):
        raise ValueError("one verdict per record is required")
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for r, v in zip(records, verdicts):
            if v.record != r.cdc_certificate:
                raise ValueError("verdict does not belong to its record")
            fh.write(_record_line(r, v) + "\n")


def _parse_line(text: str, line: int) -> tuple[CousinRecord, ConjectureVerdict]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"not JSON: {exc.msg}", line) from exc
    if not isinstance(obj, dict):
        raise CatalogError("record is not an object", line)
    missing = [f for f in _FIELDS if f not in obj]
    if missing:
        raise CatalogError(f"missing field(s): {', '.join(missing)}", line)
    n, hexcert, members, pairs, conj = (obj[f] for f in _FIELDS)
    if not isinstance(n, int) or n < 0:
        raise CatalogError("n must be a non-negative integer", line)
    if not isinstance(members, list) or not all(isinstance(m, str) for m in members):
        raise CatalogError("members must be a list of graph6 strings", line)
    try:
        cert = bytes.fromhex(hexcert)
    except (TypeError, ValueError) as exc:
        raise CatalogError("cdc_certificate is not hex", line) from exc
    try:
        rec = CousinRecord(n, cert, tuple(members))
    except ValueError as exc:
        raise CatalogError(str(exc), line) from exc
    for m in members:
        try:
            if parse_graph6(m).n != n:
                raise CatalogError(f"member {m!r} does not have {n} vertices", line)
        except Graph6Error as exc:
            raise CatalogError(f"member {m!r}: {exc}", line) from exc
    if pairs != rec.pair_count:
        raise CatalogError(f"pair_count {pairs} does not match {len(members)} members", line)
    if not isinstance(conj, dict) or not {"schema", "holds", "witness_k"} <= conj.keys():
        raise CatalogError("conjecture must carry schema, holds and witness_k", line)
    if conj["schema"] != CONJECTURE_SCHEMA:
        raise CatalogError(f"unknown conjecture schema {conj['schema']!r}", line)
    k = conj["witness_k"]
    if k is not None and (not isinstance(k, int) or k % 2 == 0):
        raise CatalogError("witness_k must be null or an odd integer", line)
    verdict = ConjectureVerdict(cert, k)
    if conj["holds"] is not verdict.holds:
        raise CatalogError("holds disagrees with witness_k", line)
    return rec, verdict


def read_catalog(path: str | os.PathLike) -> Catalog:
    records, verdicts = [], []
    with open(path, encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            if not raw.strip():
                continue
            r, v = _parse_line(raw, lineno)
            records.append(r)
            verdicts.append(v)
    return Catalog(records, verdicts)


# -- summary -----------------------------------------------------------------

def report(
    records: list[CousinRecord],
    verdicts: list[ConjectureVerdict] | None = None,
    n: int | None = None,
) -> str:
    if verdicts is None:
        verdicts = [verify_conjecture(r) for r in records]
    orders = sorted({r.n for r in records})
    if n is not None:
        shown = str(n)
    elif orders:
        shown = ",".join(map(str, orders))
    else:
        shown = "-"
    held = sum(v.holds for v in verdicts)
    largest = max((len(r.members) for r in records), default=0)
    status = "holds" if held == len(verdicts) else "FAILS"
    lines = [
        f"n: {shown}",
        f"groups: {len(records)}",
        f"pairs: {sum(r.pair_count for r in records)}",
        f"conjecture: {status} ({held}/{len(verdicts)} groups)",
        f"largest group: {largest}",
    ]
    return "\n".join(lines) + "\n"
