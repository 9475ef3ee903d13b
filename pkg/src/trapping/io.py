"""Edge-list text files and the star-type sidecar.

Edge list: one ``u v`` pair per line, whitespace separated, ``#`` starts a
comment, blank lines are ignored.

The sidecar (``<graph>.spec.json``) records how a star-type graph was built
so that bounds can be evaluated from the construction::

    {"kind": "startype", "u": 0, "order": 1, "scope": "component",
     "components": [{"first": 1, "vertices": 3, "edges": 3,
                     "edge_list": [[0, 1], [0, 2], [1, 2]]}]}

``first`` is the composed-graph id of the component's vertex 0 and
``edge_list`` uses component-local ids.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import IO, Iterable, Union

from .errors import EdgeListParseError, MissingSidecar, UnknownSpec
from .graph import Graph, StarTypeSpec, _build, from_edge_list, isolated

__all__ = [
    "parse_edge_list",
    "read_edge_list",
    "format_edge_list",
    "write_edge_list",
    "sidecar_path",
    "sidecar_dict",
    "write_sidecar",
    "read_sidecar",
]

PathLike = Union[str, Path]


def parse_edge_list(lines: Iterable[str]) -> list:
    pairs = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListParseError(lineno, f"expected 2 fields, got {len(fields)}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"non-integer vertex id in {line!r}") from None
        if a < 0 or b < 0:
            raise EdgeListParseError(lineno, "vertex ids must be non-negative")
        pairs.append((a, b))
    if not pairs:
        raise EdgeListParseError(0, "no edges found")
    return pairs


def read_edge_list(path: PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return from_edge_list(parse_edge_list(fh))


def format_edge_list(g: Graph, header: bool = True) -> str:
    out = []
    if header:
        out.append(f"# vertices {g.vertex_count} edges {g.edge_count}")
    out.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(out) + "\n"


def write_edge_list(g: Graph, dest: Union[PathLike, IO[str]], header: bool = True) -> None:
    text = format_edge_list(g, header)
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8")


def sidecar_path(graph_path: PathLike) -> Path:
    p = Path(graph_path)
    return p.with_name(p.name + ".spec.json")


def sidecar_dict(spec: StarTypeSpec, order: int = 0, scope: str = "component") -> dict:
    comps = []
    for first, c in zip(spec.offsets(), spec.components):
        comps.append({
            "first": first,
            "vertices": c.vertex_count,
            "edges": c.edge_count,
            "edge_list": [list(e) for e in c.edges],
        })
    return {"kind": "startype", "u": 0, "order": order, "scope": scope, "components": comps}


def write_sidecar(spec: StarTypeSpec, graph_path: PathLike, order: int = 0, scope: str = "component") -> Path:
    p = sidecar_path(graph_path)
    p.write_text(json.dumps(sidecar_dict(spec, order, scope), indent=2) + "\n", encoding="utf-8")
    return p


def read_sidecar(graph_path: PathLike):
    """Return ``(spec, order, scope)`` from the sidecar next to ``graph_path``."""
    p = sidecar_path(graph_path)
    if not p.exists():
        raise MissingSidecar(f"no sidecar spec at {p}")
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
        if data.get("kind") != "startype":
            raise UnknownSpec(f"{p}: unsupported sidecar kind {data.get('kind')!r}")
        comps = []
        for c in data["components"]:
            if c["vertices"] == 1:
                comps.append(isolated())
            else:
                comps.append(_build(c["vertices"], [tuple(e) for e in c["edge_list"]]))
            if comps[-1].edge_count != c["edges"]:
                raise UnknownSpec(f"{p}: component edge count mismatch")
        return StarTypeSpec(comps), int(data.get("order", 0)), data.get("scope", "component")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, UnknownSpec):
            raise
        raise UnknownSpec(f"{p}: malformed sidecar ({exc})") from exc
