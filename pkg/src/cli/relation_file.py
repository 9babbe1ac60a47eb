"""Plain-text relation files.

    # optional comment lines
    n <count>
    e <u> <v>
    ...

Canonical files carry no comments and list edges sorted by (u, v).
"""

from pathlib import Path

import networkx as nx
from pydantic import BaseModel, ConfigDict

from src.core.models import Relation
from src.exceptions import InvalidArgumentError, RelationParseError


class RelationFile(BaseModel):
    model_config = ConfigDict(frozen=True)

    path: Path
    relation: Relation


def _int(token: str, line_no: int) -> int:
    if not (token.isascii() and token.isdigit()):
        raise RelationParseError(f"expected a non-negative integer, got {token!r}", line_no)
    return int(token)


def parse_relation(text: str) -> Relation:
    n = None
    edges: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if tokens[0] != "n" or len(tokens) != 2:
                raise RelationParseError("first data line must be 'n <count>'", line_no)
            n = _int(tokens[1], line_no)
            continue
        if tokens[0] != "e" or len(tokens) != 3:
            raise RelationParseError(f"expected 'e <u> <v>', got {line!r}", line_no)
        u, v = _int(tokens[1], line_no), _int(tokens[2], line_no)
        if u >= n or v >= n:
            raise RelationParseError(f"edge ({u}, {v}) outside [0, {n})", line_no)
        if (u, v) in edges:
            raise RelationParseError(f"duplicate edge ({u}, {v})", line_no)
        edges.add((u, v))
    if n is None:
        raise RelationParseError("missing 'n <count>' line")
    return Relation.of(n, edges)


def serialize_relation(r: Relation) -> str:
    lines = [f"n {r.n}"]
    lines.extend(f"e {u} {v}" for u, v in r.edges)
    return "\n".join(lines) + "\n"


def read_relation_file(path: str | Path) -> RelationFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise InvalidArgumentError(f"cannot read {path}: {e}") from e
    return RelationFile(path=path, relation=parse_relation(text))


def write_relation_file(path: str | Path, r: Relation) -> RelationFile:
    path = Path(path)
    path.write_text(serialize_relation(r), encoding="utf-8", newline="\n")
    return RelationFile(path=path, relation=r)


def to_networkx(r: Relation) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from((v, {"label": str(v)}) for v in range(r.n))
    g.add_edges_from(r.edges)
    return g


def to_dot(r: Relation, name: str = "R") -> str:
    g = to_networkx(r)
    g.graph["name"] = name
    return nx.nx_pydot.to_pydot(g).to_string()
