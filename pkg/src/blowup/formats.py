"""Graph codecs (graph6, plain edge list) and the JSON verification report."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 62


class GraphFormatError(ValueError):
    """Raised for any malformed graph input."""


# -- graph6 -----------------------------------------------------------------

def _bit_pairs(n: int):
    # graph6 walks the upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise GraphFormatError("graph6: empty input")
    if "\n" in s:
        raise GraphFormatError("graph6: expected a single graph, got several lines")
    data = s.encode("ascii", errors="replace")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"graph6: invalid byte {byte!r} at offset {pos}")
    if data[0] == 126:
        raise GraphFormatError(f"graph6: long form (n > {GRAPH6_MAX_N}) is not supported")
    n = data[0] - 63
    if n < 1:
        raise GraphFormatError("graph6: graphs need at least one vertex")

    nbits = n * (n - 1) // 2
    body = data[1:]
    expected = -(-nbits // 6)
    if len(body) < expected:
        raise GraphFormatError(f"graph6: truncated bit stream ({len(body)} of {expected} bytes)")
    if len(body) > expected:
        raise GraphFormatError(f"graph6: {len(body) - expected} trailing bytes after bit stream")

    edges = []
    for idx, pair in enumerate(_bit_pairs(n)):
        chunk = body[idx // 6] - 63
        if (chunk >> (5 - idx % 6)) & 1:
            edges.append(pair)
    return Graph(n, frozenset(edges))


def write_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise GraphFormatError(f"graph6: n={g.n} needs the long form, supported up to n={GRAPH6_MAX_N}")
    bits = [1 if pair in g.edges else 0 for pair in _bit_pairs(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i:i + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


# -- edge list ----------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by ``u v`` lines.

    ``#`` starts a comment, blank lines are skipped and duplicate edges are
    merged.
    """
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise GraphFormatError(f"line {lineno}: expected header 'n <count>', got {line!r}")
            try:
                n = int(tokens[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: vertex count {tokens[1]!r} is not an integer") from None
            if n < 1:
                raise GraphFormatError(f"line {lineno}: vertex count must be >= 1")
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in {line!r}") from None
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphFormatError(f"line {lineno}: vertex {x} out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        edges.add((min(u, v), max(u, v)))
    if n is None:
        raise GraphFormatError("edge list: missing 'n <count>' header")
    return Graph(n, frozenset(edges))


def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def sniff_format(text: str) -> str:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return "edgelist" if line.split()[0] == "n" else "graph6"
    return "graph6"


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    fmt = fmt or sniff_format(text)
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise GraphFormatError(f"unknown graph format {fmt!r}")


# -- verification report ------------------------------------------------------

@dataclass
class FamilyRecord:
    family: str
    formula: list[float]
    oracle: list[float]
    max_deviation: float
    passed: bool


@dataclass
class VerificationReport:
    graph_id: str
    n: int
    t: int
    tol: float
    families: list[FamilyRecord] = field(default_factory=list)
    eigenvector_residuals: float = 0.0
    eigenvector_count: int = 0

    @property
    def overall_pass(self) -> bool:
        return all(f.passed for f in self.families) and self.eigenvector_residuals <= self.tol


def clean_spectrum(values) -> list[float]:
    """Sort non-increasing and flush entries below 1e-12 of the largest to 0."""
    xs = sorted((float(x) for x in values), reverse=True)
    scale = max([1.0] + [abs(x) for x in xs])
    return [0.0 if abs(x) <= 1e-12 * scale else x for x in xs]


def _num(x: float) -> float | None:
    if not math.isfinite(x):
        return None
    return float(f"{x:.12g}")


def report_to_dict(r: VerificationReport) -> dict[str, Any]:
    return {
        "graph_id": r.graph_id,
        "n": r.n,
        "t": r.t,
        "tol": r.tol,
        "families": [
            {
                "family": f.family,
                "formula": [_num(x) for x in clean_spectrum(f.formula)],
                "oracle": [_num(x) for x in clean_spectrum(f.oracle)],
                "max_deviation": _num(f.max_deviation),
                "pass": f.passed,
            }
            for f in r.families
        ],
        "eigenvector_residuals": _num(r.eigenvector_residuals),
        "eigenvector_count": r.eigenvector_count,
        "overall_pass": r.overall_pass,
    }


def write_report(r: VerificationReport) -> str:
    return json.dumps(report_to_dict(r), indent=2)


def read_report(text: str) -> VerificationReport:
    """Inverse of :func:`write_report` (up to the 12-digit rounding)."""
    try:
        d = json.loads(text)
        families = [
            FamilyRecord(
                family=f["family"],
                formula=list(f["formula"]),
                oracle=list(f["oracle"]),
                max_deviation=math.inf if f["max_deviation"] is None else f["max_deviation"],
                passed=f["pass"],
            )
            for f in d["families"]
        ]
        report = VerificationReport(
            graph_id=d["graph_id"],
            n=d["n"],
            t=d["t"],
            tol=d["tol"],
            families=families,
            eigenvector_residuals=d["eigenvector_residuals"],
            eigenvector_count=d["eigenvector_count"],
        )
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ValueError(f"not a verification report: {exc}") from exc
    if report.overall_pass != d["overall_pass"]:
        raise ValueError("overall_pass disagrees with the family and residual records")
    return report

