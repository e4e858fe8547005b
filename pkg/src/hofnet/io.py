"""Canonical file formats: complex JSON, edge-list TSV and result CSVs.

Everything is written in a fixed order with fixed float formatting so that
identical inputs give byte-identical files.
"""

from __future__ import annotations

import json
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, TextIO

from .boxcover import BoxCoveringResult
from .complex import NodeRole, PureComplex, Skeleton, simplex
from .errors import DomainError
from .gdd import DegreeDistribution
from .generator import GeneratorParams


def fmt(x: float) -> str:
    """Float with 6 significant digits, locale independent."""
    return f"{x:.6g}"


def complex_to_dict(c: PureComplex) -> dict:
    p = c.params
    roles = c.skeleton.roles or ()
    return {
        "k": c.K,
        "m": p.m if p else None,
        "t": p.t if p else None,
        "seed": p.seed if p else None,
        "nodes": [{"id": i, "role": r.kind, "birth": r.birth} for i, r in enumerate(roles)],
        "edges": [list(e) for e in c.skeleton.edges()],
        "facets": [list(f) for f in sorted(c.facets)],
    }


def complex_from_dict(d: dict) -> PureComplex:
    try:
        K = int(d["k"])
        nodes = d["nodes"]
        n = len(nodes)
        if [node["id"] for node in nodes] != list(range(n)):
            raise DomainError("node ids must be 0..n-1 in order")
        roles = [NodeRole(node["role"], int(node["birth"])) for node in nodes]
        edges = [(int(u), int(v)) for u, v in d["edges"]]
        facets = tuple(sorted(simplex(f) for f in d["facets"]))
        params = None
        if d.get("m") is not None and d.get("t") is not None:
            params = GeneratorParams(K, int(d["m"]), int(d["t"]), int(d.get("seed") or 0))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"malformed complex document: {exc}") from exc
    c = PureComplex(K, Skeleton.from_edges(n, edges, roles), facets, params)
    c.validate()
    return c


def dumps_complex(c: PureComplex) -> str:
    return json.dumps(complex_to_dict(c), separators=(",", ":")) + "\n"


def write_complex(c: PureComplex, path) -> None:
    Path(path).write_text(dumps_complex(c), encoding="utf-8")


def read_complex(path) -> PureComplex:
    with open(path, encoding="utf-8") as fh:
        return complex_from_dict(json.load(fh))


def edges_tsv(g: Skeleton) -> str:
    return "".join(f"{u}\t{v}\n" for u, v in g.edges())


def box_csv(result: BoxCoveringResult) -> str:
    lines = ["l_B,mean_N_B,std_N_B,trials"]
    lines += [f"{s.l_B},{fmt(s.mean_N_B)},{fmt(s.std_N_B)},{s.trials}" for s in result.samples]
    return "\n".join(lines) + "\n"


def gdd_csv(d: DegreeDistribution) -> str:
    lines = ["k,count,probability"]
    lines += [f"{k},{d.counts[k]},{fmt(p)}" for k, p in sorted(d.support.items())]
    return "\n".join(lines) + "\n"


@contextmanager
def open_output(path: str | None) -> Iterator[TextIO]:
    """``None`` or ``"-"`` means standard output."""
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh
